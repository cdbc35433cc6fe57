#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "yf/permutation.hpp"
#include "yf/poset.hpp"
#include "yf/snakeshape.hpp"

namespace yf {

/// One column of a Young-Fibonacci tableau. top == 0 means the column
/// is single-boxed.
struct YfColumn {
    int bottom = 0;
    int top = 0;

    bool two_boxed() const { return top != 0; }
    int topmost() const { return two_boxed() ? top : bottom; }

    friend bool operator==(const YfColumn&, const YfColumn&) = default;
    friend auto operator<=>(const YfColumn&, const YfColumn&) = default;
};

/// A filling of a snakeshape, columns left to right. This is a plain
/// container: validity is a separate question (is_standard,
/// is_semistandard) because path tableaux reuse the same layout
/// without obeying the tableau rules.
///
/// Text form: columns "bottom" or "bottom:top" separated by spaces,
/// e.g. "3:7 4:6 5 1:2"; the empty tableau is "e".
class YfTableau {
public:
    YfTableau() = default;
    explicit YfTableau(std::vector<YfColumn> columns);

    static YfTableau parse(std::string_view text);

    const std::vector<YfColumn>& columns() const { return cols_; }
    int size() const;
    Snakeshape shape() const;
    bool empty() const { return cols_.empty(); }

    std::string str() const;

    friend bool operator==(const YfTableau&, const YfTableau&) = default;
    friend auto operator<=>(const YfTableau&, const YfTableau&) = default;

private:
    std::vector<YfColumn> cols_;
};

/// Standard: entries are exactly 1..n, columns strictly increase, and
/// the topmost entry of every column exceeds every entry to its right.
bool is_standard(const YfTableau& t);

/// Semistandard: positive entries with repeats allowed; columns still
/// strictly increase and no entry to the right of a topmost entry may
/// exceed it (equality is fine).
bool is_semistandard(const YfTableau& t);

/// Entry multiplicities as a shape-like content word: content(t)[i] is
/// the number of entries equal to i+1.
std::vector<int> tableau_content(const YfTableau& t);

/// All standard tableaux of shape u, sorted by column lists.
std::vector<YfTableau> enumerate_standard(const Snakeshape& u);

/// Count of standard tableaux of shape u by the right-to-left cell
/// labeling: counting cells right to left and bottom to top, multiply
/// the counter values of the first cell and of the bottom cell of
/// every two-boxed column.
std::uint64_t hook_count(const Snakeshape& u);

/// All semistandard tableaux of shape u with exactly v_i entries equal
/// to i, sorted by column lists. Requires |u| = |v|.
std::vector<YfTableau> enumerate_semistandard(const Snakeshape& u, const Snakeshape& v);

/// Minimal word of the class of t: read columns right to left, top
/// entry before bottom entry.
Permutation min_cano(const YfTableau& t);
/// Maximal word of the class of t: the top row left to right, then the
/// bottom row right to left.
Permutation max_cano(const YfTableau& t);
/// The involution whose cycles are the columns of t.
Permutation cano_involution(const YfTableau& t);

/// The poset on 1..n whose linear extensions form the class of t: the
/// bottom row read right to left is a chain, and the top entry of each
/// two-boxed column is covered by that column's bottom entry.
Poset cano_poset(const YfTableau& t);

/// Tableau of shape u with top cells labeled n, n-1, ... left to right
/// and bottom cells of two-boxed columns labeled 1, 2, ... left to
/// right. The rank-maximal tableau of its shape in the weak order.
YfTableau row_canonical(const Snakeshape& u);
/// Tableau of shape u numbered 1..n scanning columns right to left,
/// bottom cell before top cell. The rank-minimal tableau of its shape.
YfTableau column_canonical(const Snakeshape& u);

/// Minimal weak-order rank among tableaux of shape u: the number of
/// two-boxed columns.
int rho_min(const Snakeshape& u);
/// Maximal weak-order rank among tableaux of shape u: sum over bottom
/// cells of the number of two-boxed columns strictly to the left, plus
/// the same count plus one for each top cell of a two-boxed column.
int rho_max(const Snakeshape& u);

}  // namespace yf
