#pragma once

#include "lct/rational.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace lct {

/// Vertex decorations of the resolution graphs: circle is the -3 curve with
/// fundamental-cycle coefficient 2 or 3, bullet a -2 curve, star a -2 or -3
/// curve with coefficient 1; C1/C2 mark the boundary curves of a discrepancy
/// system.
enum class VertexMark { None, Circle, Star, Bullet, C1, C2 };

std::string to_string(VertexMark mark);

struct Vertex {
    std::string id;
    int self_intersection;
    VertexMark mark = VertexMark::None;
};

/// Weighted dual graph of a tree (or forest-free graph) of smooth rational
/// curves. Construction validates: unique ids, self-intersections <= -2,
/// no loops or multi-edges, connectedness, at most one circle vertex and
/// the self-intersection attached to each mark.
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::string, std::string>> edges);

    /// { "vertices": [{ "id", "selfInt", "mark" }], "edges": [[id, id]] }
    static DualGraph from_json(const nlohmann::json& j);
    static DualGraph load(const std::filesystem::path& path);

    std::size_t size() const noexcept { return vertices_.size(); }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    std::size_t index_of(const std::string& id) const;
    bool adjacent(std::size_t a, std::size_t b) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<bool>> adjacency_;
};

using IntMatrix = std::vector<std::vector<long>>;

/// Exact test via the pivots of Gaussian elimination on -M.
bool is_negative_definite(const IntMatrix& m);

/// Diagonal = self-intersections, 1 per edge off the diagonal. Throws
/// DomainError when the matrix is not negative definite.
IntMatrix intersection_matrix(const DualGraph& g);

/// Coefficients indexed like the graph's vertices.
struct Cycle {
    std::vector<long> coefficients;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Z . Z' with respect to the intersection form of g.
long intersect(const DualGraph& g, const Cycle& a, const Cycle& b);

/// Z . A_j for every vertex j.
std::vector<long> intersect_with_vertices(const DualGraph& g, const Cycle& z);

enum class LauferOrder { LowestFirst, HighestFirst };

/// Laufer's procedure from Z = sum A_i, adding a vertex with Z.A_j > 0 until
/// none is left. `order` picks which offending vertex is added first.
Cycle fundamental_cycle(const DualGraph& g, LauferOrder order = LauferOrder::LowestFirst);

struct EllipticInvariants {
    long d;      ///< -Z^2
    Rational pa; ///< 1 + (Z^2 + K.Z)/2
    bool elliptic() const { return pa == 1; }
};

EllipticInvariants elliptic_invariants(const DualGraph& g);

/// Solution of sum_j r_j A_i.A_j = A_i.(c1 A_C1 + c2 A_C2) over the unmarked
/// vertices i; a_j = -r_j are the discrepancies of (F, c1 C1 + c2 C2).
struct DiscrepancySolution {
    std::vector<std::string> ids;
    std::vector<Rational> r;
    std::vector<Rational> a;
};

DiscrepancySolution discrepancy_system(const DualGraph& g, const Rational& c1 = Rational(1, 2),
                                       const Rational& c2 = Rational(1, 4));

enum class KltVerdict { Klt, LcNotKlt, NotLc };

std::string to_string(KltVerdict v);

/// klt iff every a_j > -1, lc iff every a_j >= -1.
KltVerdict klt_verdict(const DiscrepancySolution& sol);

/// Exact Gaussian elimination with nonzero pivoting. Throws DomainError if
/// the matrix is singular.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

} // namespace lct
