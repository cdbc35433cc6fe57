#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yf/permutation.hpp"
#include "yf/snakeshape.hpp"
#include "yf/tableau.hpp"

namespace yf {

/// A saturated chain in the Young-Fibonacci lattice, starting at the
/// empty shape. Text form: shape words joined by commas, "e,1,11,21".
class ShapeChain {
public:
    ShapeChain();
    explicit ShapeChain(std::vector<Snakeshape> shapes);

    static ShapeChain parse(std::string_view text);

    /// Number of covers, i.e. the size of the final shape.
    int length() const { return static_cast<int>(shapes_.size()) - 1; }
    const std::vector<Snakeshape>& shapes() const { return shapes_; }
    const Snakeshape& final_shape() const { return shapes_.back(); }

    std::string str() const;

    friend bool operator==(const ShapeChain&, const ShapeChain&) = default;

private:
    std::vector<Snakeshape> shapes_;
};

/// The three ways a shape can grow by one box.
enum class CoverKind {
    PrependOne,          // a single-boxed column attached in front
    PromoteFirstSingle,  // the first single-boxed column grows to height 2
    InsertAfterTwo,      // a single-boxed column inserted inside the leading run of 2s
};

struct CoverStep {
    CoverKind kind;
    /// PromoteFirstSingle: 1-based position of the promoted column.
    /// InsertAfterTwo: 1-based position of the two-boxed column after
    /// which the new single column lands. Unused for PrependOne.
    int index = 0;
};

/// Identifies how `to` is obtained from `from`; throws when `to` does
/// not cover `from`.
CoverStep classify_cover(const Snakeshape& from, const Snakeshape& to);

/// Converts a saturated chain into a standard tableau. Label k goes
/// into the new front column when one is attached; otherwise the
/// topmost entries of the columns left of the new box shift one column
/// to the right (through the new box) and k lands on top of the first
/// column.
YfTableau chain_to_tableau(const ShapeChain& chain);

/// The unique chain converting to t, computed by inserting the growing
/// restrictions of the minimal canonical word of t. The round trip
/// through chain_to_tableau is checked before returning.
ShapeChain tableau_to_chain(const YfTableau& t);

/// All tableaux of size n-1 that the conversion step maps onto t, one
/// per compatible covering of the final shape. Used to invert the
/// conversion directly; emptiness or multiplicity would mean the
/// conversion is not reversible.
std::vector<YfTableau> reverse_step_candidates(const YfTableau& t);

/// Inverts chain_to_tableau step by step, insisting that exactly one
/// candidate survives at every step.
ShapeChain tableau_to_chain_by_reversal(const YfTableau& t);

/// Path tableau of a chain: label k sits in the box added at step k,
/// previously placed labels keep their boxes as columns slide.
YfTableau canonical_labeling(const ShapeChain& chain);

/// Local growth rule for one unit square: t bottom-left, x top-left,
/// y bottom-right, alpha the permutation-matrix entry; returns the
/// top-right shape. The published algorithm tests x != y first, which
/// misfires when x = t and y covers t, and leaves x = y != t implicit;
/// the rule used here treats the two degenerate edges independently:
///   x != t and y != t          -> t with a 2 in front
///   x != t and y == t          -> x
///   x == t and y != t          -> y
///   x == y == t and alpha == 1 -> t with a 1 in front
///   x == y == t and alpha == 0 -> t
Snakeshape local_rule(const Snakeshape& t, const Snakeshape& x, const Snakeshape& y, int alpha);

/// Growth diagram over the permutation matrix of sigma: an (n+1)x(n+1)
/// grid of shapes, empty on the left column and bottom row, filled by
/// the local rule. The cross of column j sits in unit cell (j, sigma(j)).
class GrowthDiagram {
public:
    explicit GrowthDiagram(const Permutation& sigma);

    int n() const { return sigma_.size(); }
    const Permutation& permutation() const { return sigma_; }
    /// Vertex shape, col and row in 0..n, row 0 at the bottom.
    const Snakeshape& at(int col, int row) const;

    /// Top boundary left to right.
    ShapeChain top_chain() const;
    /// Right boundary bottom to top.
    ShapeChain right_chain() const;

    /// Re-checks the local rule on every unit square and the
    /// equal-or-cover condition on every edge.
    bool audit() const;

private:
    Permutation sigma_;
    std::vector<std::vector<Snakeshape>> grid_;  // grid_[col][row]
};

/// Boundary chains (P-hat, Q-hat) = (right, top).
std::pair<ShapeChain, ShapeChain> boundary_chains(const GrowthDiagram& d);

/// Evacuates the letter a0, which must be the topmost entry of some
/// column. A single-boxed column is deleted outright; otherwise the
/// freed box is filled from the right neighbour's top while that
/// neighbour's topmost entry exceeds the entry under the hole, and the
/// final freed box disappears.
YfTableau evacuate_letter(const YfTableau& t, int a0);

/// Evacuates n, n-1, ..., 1 and returns the path tableau labeling the
/// chain of intermediate shapes.
YfTableau evacuation_tableau(const YfTableau& t);

/// The chain of shapes visited while evacuating n, n-1, ..., 1.
ShapeChain evacuation_chain(const YfTableau& t);

}  // namespace yf
