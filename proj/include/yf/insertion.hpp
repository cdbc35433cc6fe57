#pragma once

#include <map>
#include <utility>
#include <vector>

#include "yf/permutation.hpp"
#include "yf/tableau.hpp"

namespace yf {

/// Result of the right-to-left matching scan over a word with
/// distinct letters. Pairs are (smaller, larger) and are listed, like
/// the singles, by decreasing larger letter, which is the column order
/// of the insertion tableau.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singles;
    std::map<int, int> position;  // letter -> 1-based position in the word
};

/// Scans the word from right to left; each unmatched letter is paired
/// with the maximal unmatched letter strictly greater than it standing
/// strictly to its left, when such a letter exists.
Matching match_letters(const std::vector<int>& word);
Matching match_letters(const Permutation& sigma);

/// Insertion tableau: one column per pair (bottom the smaller letter),
/// one single column per lone letter, columns sorted by strictly
/// decreasing topmost entry.
YfTableau insert_p(const std::vector<int>& word);
YfTableau insert_p(const Permutation& sigma);

/// Insertion and recording tableaux. Q has the same column layout as
/// P; the column of a pair (a, b) records the position of b at the
/// bottom and the position of a on top, a single letter records its
/// position in a single column.
std::pair<YfTableau, YfTableau> insert_pq(const std::vector<int>& word);
std::pair<YfTableau, YfTableau> insert_pq(const Permutation& sigma);

/// All permutations whose insertion tableau is t, i.e. the linear
/// extensions of the canonical poset of t. Throws above the bound.
std::vector<Permutation> fibo_class(const YfTableau& t, int bound = 10);

}  // namespace yf
