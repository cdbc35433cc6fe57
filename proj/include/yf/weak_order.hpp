#pragma once

#include <vector>

#include "yf/permutation.hpp"
#include "yf/poset.hpp"
#include "yf/tableau.hpp"

namespace yf {

/// All tableaux reachable from t by shifting one entry. A bottom entry
/// moves one column to the left: onto a single-boxed neighbour it
/// climbs on top of, or into the bottom seat of a two-boxed neighbour
/// with a larger bottom entry, whose evicted entry lands back on the
/// right. Each output is a valid standard tableau of the same size.
std::vector<YfTableau> shift_targets(const YfTableau& t);

/// Every standard tableau of size n, over all shapes of size n in
/// descending lexicographic order, tableaux sorted within a shape.
std::vector<YfTableau> all_standard_tableaux(int n);

/// The graded weak order on standard Young-Fibonacci tableaux of size
/// n: covers are the shifts, the rank of a tableau is the inversion
/// count of its minimal canonical word.
struct YftWeakOrder {
    Poset poset;  // elements are indices into tableaux
    std::vector<YfTableau> tableaux;
    std::vector<int> rank;

    int index_of(const YfTableau& t) const;
};

YftWeakOrder weak_order_yft(int n, int bound = 8);

/// The right weak order on S_n: covers swap an ascent at adjacent
/// positions; the rank is the inversion count.
struct SnWeakOrder {
    Poset poset;  // elements are indices into perms
    std::vector<Permutation> perms;
    std::vector<int> rank;

    int index_of(const Permutation& sigma) const;
};

SnWeakOrder weak_order_sn(int n, int bound = 8);

}  // namespace yf
