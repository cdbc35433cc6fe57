#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace yf {

/// A snakeshape: a composition of n into parts 1 and 2, read left to
/// right. Part 1 is a single-boxed column, part 2 a two-boxed column.
/// The empty shape is written "e".
class Snakeshape {
public:
    Snakeshape() = default;
    explicit Snakeshape(std::vector<std::uint8_t> parts);

    /// Parses a word over {1,2}, or "e" for the empty shape.
    static Snakeshape parse(std::string_view text);

    const std::vector<std::uint8_t>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Shape with an extra part at the front.
    Snakeshape prepended(std::uint8_t part) const;
    /// Shape with an extra part at the back.
    Snakeshape appended(std::uint8_t part) const;

    std::string str() const;

    friend bool operator==(const Snakeshape&, const Snakeshape&) = default;
    friend auto operator<=>(const Snakeshape&, const Snakeshape&) = default;

private:
    std::vector<std::uint8_t> parts_;
};

/// Orders shapes of equal size the way the matrices print them:
/// descending lexicographic with '2' before '1'.
inline bool desc_lex_less(const Snakeshape& a, const Snakeshape& b) {
    return b.parts() < a.parts();
}

/// All snakeshapes of size n, in descending lexicographic order.
/// Counts follow the Fibonacci recurrence C(n) = C(n-1) + C(n-2).
std::vector<Snakeshape> shapes_of_size(int n);

/// Shapes covering u in the Young-Fibonacci lattice, descending lex.
/// The covers are: a single box attached in front; the first
/// single-boxed column promoted to height 2; a single-boxed column
/// inserted after each column of the maximal leading run of 2s.
std::vector<Snakeshape> covers_up(const Snakeshape& u);

/// Shapes covered by v, descending lex. Computed by deleting each
/// removable cell directly, so it can be cross-checked against
/// covers_up via duality.
std::vector<Snakeshape> covers_down(const Snakeshape& v);

/// The multiset v^(1-): one item per occurrence of part 1 (deleted)
/// and one per part 2 (decreased to 1 in place), in position order.
std::vector<Snakeshape> v_one_minus(const Snakeshape& v);

/// Number of saturated chains from the empty shape to u.
std::uint64_t chain_count(const Snakeshape& u);

}  // namespace yf
