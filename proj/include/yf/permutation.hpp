#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yf {

/// A permutation of {1..n} in one-line notation. Serialized as a digit
/// string for n <= 9 and as comma-separated integers beyond.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    /// Image of position i, 1-based.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    bool is_involution() const;

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n);

/// Inversions (j, i) with i < j and j appearing left of i.
std::vector<std::pair<int, int>> inv_set(const Permutation& sigma);
/// Non-inversions (i, j) with i < j and i appearing left of j.
std::vector<std::pair<int, int>> noninv_set(const Permutation& sigma);
int inv_count(const Permutation& sigma);

/// Words covering sigma in the right weak order: swap an ascent at
/// adjacent positions, raising the inversion count by one.
std::vector<Permutation> weak_order_successors(const Permutation& sigma);

/// Serializes an arbitrary word with distinct letters (digits when all
/// letters fit, commas otherwise).
std::string word_str(const std::vector<int>& word);

}  // namespace yf
