#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

/// Primitive positive integer weight vector of length 2-4.
class Weight {
public:
    /// Throws DomainError unless every entry is >= 1, the length is 2-4
    /// and the gcd of the entries is 1.
    explicit Weight(std::vector<long> entries);
    Weight(std::initializer_list<long> entries) : Weight(std::vector<long>(entries)) {}

    /// Divides out the common gcd first, so (2,4) becomes (1,2).
    static Weight reduced(std::vector<long> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    long operator[](std::size_t i) const { return entries_[i]; }
    std::span<const long> entries() const noexcept { return entries_; }
    long sum() const noexcept;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// "6,14,21"
    std::string to_string() const;

private:
    std::vector<long> entries_;
};

/// Parses comma-separated positive integers ("6,14,21"). Throws ParseError on
/// bad syntax, DomainError on non-positive or non-primitive vectors.
Weight parse_weight(std::string_view text);

} // namespace lct
