#include "lct/dualgraph.hpp"

#include "lct/error.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace lct {

std::string to_string(VertexMark mark)
{
    switch (mark) {
    case VertexMark::None:
        return "none";
    case VertexMark::Circle:
        return "circle";
    case VertexMark::Star:
        return "star";
    case VertexMark::Bullet:
        return "bullet";
    case VertexMark::C1:
        return "C1";
    case VertexMark::C2:
        return "C2";
    }
    return "?";
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices))
{
    const std::size_t n = vertices_.size();
    if (n == 0)
        throw DomainError("dual graph has no vertices");
    std::map<std::string, std::size_t> index;
    int circles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex& v = vertices_[i];
        if (!index.emplace(v.id, i).second)
            throw DomainError("duplicate vertex id '" + v.id + "'");
        if (v.self_intersection > -2)
            throw DomainError("vertex '" + v.id + "' has self-intersection " + std::to_string(v.self_intersection) +
                              " > -2");
        switch (v.mark) {
        case VertexMark::Circle:
            ++circles;
            if (v.self_intersection != -3)
                throw DomainError("circle vertex '" + v.id + "' must have self-intersection -3");
            break;
        case VertexMark::Bullet:
            if (v.self_intersection != -2)
                throw DomainError("bullet vertex '" + v.id + "' must have self-intersection -2");
            break;
        case VertexMark::Star:
            if (v.self_intersection != -2 && v.self_intersection != -3)
                throw DomainError("star vertex '" + v.id + "' must have self-intersection -2 or -3");
            break;
        default:
            break;
        }
    }
    if (circles > 1)
        throw DomainError("at most one circle vertex is allowed");

    adjacency_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw DomainError("edge refers to unknown vertex '" + (ia == index.end() ? a : b) + "'");
        if (ia->second == ib->second)
            throw DomainError("loop at vertex '" + a + "'");
        if (adjacency_[ia->second][ib->second])
            throw DomainError("multiple edge between '" + a + "' and '" + b + "'");
        adjacency_[ia->second][ib->second] = adjacency_[ib->second][ia->second] = true;
        edges_.emplace_back(ia->second, ib->second);
    }

    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u)
            if (adjacency_[v][u] && !seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!seen[i])
            throw DomainError("dual graph is not connected ('" + vertices_[i].id + "' unreachable)");
}

namespace {

VertexMark parse_mark(const nlohmann::json& j)
{
    if (j.is_null())
        return VertexMark::None;
    if (!j.is_string())
        throw ParseError("vertex mark must be a string or null");
    static const std::map<std::string, VertexMark> names{{"circle", VertexMark::Circle},
                                                         {"star", VertexMark::Star},
                                                         {"bullet", VertexMark::Bullet},
                                                         {"C1", VertexMark::C1},
                                                         {"C2", VertexMark::C2}};
    auto it = names.find(j.get<std::string>());
    if (it == names.end())
        throw ParseError("unknown vertex mark '" + j.get<std::string>() + "'");
    return it->second;
}

} // namespace

DualGraph DualGraph::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON needs a 'vertices' array");
    std::vector<Vertex> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("selfInt") ||
            !v["selfInt"].is_number_integer())
            throw ParseError("vertex entries need string 'id' and integer 'selfInt'");
        if (v.contains("genus") && !(v["genus"].is_number_integer() && v["genus"].get<int>() == 0))
            throw DomainError("vertex '" + v["id"].get<std::string>() + "' is not a rational curve");
        vertices.push_back({v["id"].get<std::string>(), v["selfInt"].get<int>(),
                            parse_mark(v.value("mark", nlohmann::json()))});
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw ParseError("'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("edges are pairs of vertex ids");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph DualGraph::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return from_json(j);
}

std::size_t DualGraph::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id)
            return i;
    throw DomainError("no vertex '" + id + "'");
}

bool DualGraph::adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).at(b); }

// --- linear algebra -------------------------------------------------------

bool is_negative_definite(const IntMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = -m[i][j];
    // -M is positive definite iff elimination without row swaps meets only
    // positive pivots (the pivots are ratios of leading principal minors).
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            if (f == 0)
                continue;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

IntMatrix intersection_matrix(const DualGraph& g)
{
    const std::size_t n = g.size();
    IntMatrix m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = g.vertex(i).self_intersection;
    for (const auto& [a, b] : g.edges())
        m[a][b] = m[b][a] = 1;
    if (!is_negative_definite(m))
        throw DomainError("intersection matrix is not negative definite");
    return m;
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw DomainError("right-hand side has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            throw DomainError("linear system is singular");
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

// --- cycles ---------------------------------------------------------------

std::vector<long> intersect_with_vertices(const DualGraph& g, const Cycle& z)
{
    const std::size_t n = g.size();
    if (z.coefficients.size() != n)
        throw DomainError("cycle does not match the graph");
    std::vector<long> out(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = z.coefficients[j] * g.vertex(j).self_intersection;
    for (const auto& [a, b] : g.edges()) {
        out[a] += z.coefficients[b];
        out[b] += z.coefficients[a];
    }
    return out;
}

long intersect(const DualGraph& g, const Cycle& a, const Cycle& b)
{
    std::vector<long> ab = intersect_with_vertices(g, b);
    long s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        s += a.coefficients[i] * ab[i];
    return s;
}

Cycle fundamental_cycle(const DualGraph& g, LauferOrder order)
{
    intersection_matrix(g); // rejects graphs that are not negative definite
    const std::size_t n = g.size();
    Cycle z{std::vector<long>(n, 1)};
    // Each step raises sum z_i by one and Z stays below the fundamental
    // cycle, so this bound is never reached on valid input.
    constexpr long kMaxSteps = 1'000'000;
    for (long step = 0; step < kMaxSteps; ++step) {
        std::vector<long> za = intersect_with_vertices(g, z);
        std::optional<std::size_t> pick;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t j = order == LauferOrder::LowestFirst ? k : n - 1 - k;
            if (za[j] > 0) {
                pick = j;
                break;
            }
        }
        if (!pick)
            return z;
        ++z.coefficients[*pick];
    }
    throw std::logic_error("Laufer's procedure did not terminate");
}

EllipticInvariants elliptic_invariants(const DualGraph& g)
{
    Cycle z = fundamental_cycle(g);
    long zz = intersect(g, z, z);
    long kz = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        kz += z.coefficients[i] * (-g.vertex(i).self_intersection - 2);
    return {-zz, Rational(1) + make_rational(zz + kz, 2)};
}

// --- discrepancy systems ----------------------------------------------------

DiscrepancySolution discrepancy_system(const DualGraph& g, const Rational& c1, const Rational& c2)
{
    std::optional<std::size_t> first, second;
    std::vector<std::size_t> unknowns;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        if (v.mark == VertexMark::C1) {
            if (first)
                throw DomainError("more than one C1 vertex");
            first = i;
        } else if (v.mark == VertexMark::C2) {
            if (second)
                throw DomainError("more than one C2 vertex");
            second = i;
        } else {
            if (v.self_intersection != -2)
                throw DomainError("vertex '" + v.id + "' is not a -2 curve");
            unknowns.push_back(i);
        }
    }
    if (!first)
        throw DomainError("discrepancy system needs a C1 vertex");

    const std::size_t n = unknowns.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t i = unknowns[p];
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t j = unknowns[q];
            a[p][q] = i == j ? Rational(g.vertex(i).self_intersection) : Rational(g.adjacent(i, j) ? 1 : 0);
        }
        if (g.adjacent(i, *first))
            rhs[p] += c1;
        if (second && g.adjacent(i, *second))
            rhs[p] += c2;
    }
    std::vector<Rational> r = solve_linear_system(a, rhs);

    DiscrepancySolution sol;
    for (std::size_t p = 0; p < n; ++p) {
        sol.ids.push_back(g.vertex(unknowns[p]).id);
        sol.a.push_back(-r[p]);
    }
    sol.r = std::move(r);
    return sol;
}

std::string to_string(KltVerdict v)
{
    switch (v) {
    case KltVerdict::Klt:
        return "klt";
    case KltVerdict::LcNotKlt:
        return "lc_not_klt";
    case KltVerdict::NotLc:
        return "not_lc";
    }
    return "?";
}

KltVerdict klt_verdict(const DiscrepancySolution& sol)
{
    KltVerdict v = KltVerdict::Klt;
    for (const auto& a : sol.a) {
        if (a < -1)
            return KltVerdict::NotLc;
        if (a == -1)
            v = KltVerdict::LcNotKlt;
    }
    return v;
}

} // namespace lct
