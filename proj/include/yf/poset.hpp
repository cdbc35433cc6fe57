#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yf {

/// A finite poset given by its elements (arbitrary distinct integers)
/// and its cover relation. The order relation is the reflexive
/// transitive closure of the covers, built lazily on first query.
class Poset {
public:
    Poset() = default;

    /// Covers are pairs (x, y) of element names meaning x is covered
    /// by y. Rejects unknown names, cycles, and transitive shortcuts.
    Poset(std::vector<int> elements, std::vector<std::pair<int, int>> covers);

    /// Builds a poset from an arbitrary set of (x <= y) pairs: takes
    /// the reflexive transitive closure, rejects cycles, and keeps the
    /// transitive reduction as the cover relation.
    static Poset from_relation(std::vector<int> elements,
                               const std::vector<std::pair<int, int>>& leq_pairs);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool contains(int element) const { return index_.count(element) != 0; }
    bool leq(int a, int b) const;

    /// Elements z with a <= z <= b. Requires a <= b.
    std::vector<int> interval(int a, int b) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// All linear extensions, each listed from least to greatest, in
    /// lexicographic order of element names.
    std::vector<std::vector<int>> linear_extensions() const;

    /// True when the longest-chain height rises by exactly one across
    /// every cover, i.e. a rank function compatible with the covers
    /// exists with minimal elements at rank 0.
    bool is_graded() const;
    /// Longest-chain height of each element, indexed like elements().
    std::vector<int> heights() const;

    /// True when every pair of elements has a join and a meet.
    bool is_lattice() const;

    /// DOT output with one rank=same layer per height, covers drawn
    /// upward. The label callback maps an element name to its label.
    std::string to_dot(const std::function<std::string(int)>& label = {},
                       const std::string& graph_name = "poset") const;

private:
    int id_of(int element) const;
    void ensure_closure() const;
    bool leq_ids(int a, int b) const;

    std::vector<int> elements_;
    std::unordered_map<int, int> index_;
    std::vector<std::pair<int, int>> covers_;      // names
    std::vector<std::vector<int>> up_adj_;         // ids, cover successors
    std::vector<std::vector<int>> down_adj_;       // ids, cover predecessors
    mutable std::vector<std::vector<std::uint64_t>> up_closure_;  // bit rows, lazily built
};

}  // namespace yf
