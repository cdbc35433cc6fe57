#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "yf/permutation.hpp"
#include "yf/poset.hpp"

namespace yf {

/// An integer partition, parts weakly decreasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

/// True when lam dominates mu: every prefix sum of lam is at least the
/// matching prefix sum of mu. Requires equal sizes.
bool dominance_leq(const Partition& mu, const Partition& lam);

/// A Young tableau in French convention: rows listed bottom to top,
/// the bottom row is the longest. Text form joins rows with ';' and
/// entries with spaces, bottom row first: "1 2 4 5;3".
class YoungTableau {
public:
    YoungTableau() = default;
    explicit YoungTableau(std::vector<std::vector<int>> rows);

    static YoungTableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const;
    Partition shape() const;

    std::string str() const;

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
    friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Standard: entries 1..n, rows increasing rightward, columns
/// increasing upward.
bool yt_is_standard(const YoungTableau& t);
/// Semistandard: rows weakly increasing, columns strictly increasing.
bool yt_is_semistandard(const YoungTableau& t);

/// Schensted row-insertion tableau of a word with distinct letters.
YoungTableau rsk_p(const std::vector<int>& word);
YoungTableau rsk_p(const Permutation& sigma);

std::vector<YoungTableau> enumerate_syt(const Partition& shape);
/// All standard Young tableaux of size n, shapes in descending
/// lexicographic order.
std::vector<YoungTableau> all_syt(int n);

/// Shape of the restriction of t to the entries i..j, lowered by i-1
/// and rectified by jeu de taquin.
Partition restricted_shape(const YoungTableau& t, int i, int j);

/// Chain order: t below t' when every jeu-de-taquin restriction shape
/// of t dominates the matching restriction shape of t'.
bool chain_leq(const YoungTableau& t, const YoungTableau& t_prime);

/// Weak order on standard Young tableaux: transitive closure of the
/// insertion images of the weak-order covers of S_n.
struct SytWeakOrder {
    Poset poset;  // elements are indices into tableaux
    std::vector<YoungTableau> tableaux;

    int index_of(const YoungTableau& t) const;
};

SytWeakOrder weak_order_syt(int n, int bound = 7);

/// Kostka number: semistandard tableaux of shape lam and content mu,
/// counted by direct enumeration.
std::int64_t kostka(const Partition& lam, const Partition& mu);

enum class SytOrder { Chain, Weak };

/// Kostka number as the count of standard tableaux of shape lam lying
/// between the one-row tableau and the row canonical tableau of mu.
std::int64_t kostka_by_interval(const Partition& lam, const Partition& mu, SytOrder order,
                                int bound = 7);

/// Standard tableau of shape mu filled 1..n left to right, bottom row
/// upward. The top of every Kostka interval.
YoungTableau yt_row_canonical(const Partition& mu);
/// The one-row tableau, minimum of the weak and chain orders.
YoungTableau yt_minimum(int n);

/// Kostka matrix over partitions of n in descending lexicographic
/// order, with a CSV rendering.
struct YoungKostkaMatrix {
    std::vector<Partition> order;
    std::vector<std::vector<std::int64_t>> entries;

    std::string to_csv() const;
};

YoungKostkaMatrix kostka_matrix(int n);

}  // namespace yf
