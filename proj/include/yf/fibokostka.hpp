#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yf/snakeshape.hpp"
#include "yf/weak_order.hpp"

namespace yf {

/// A square matrix indexed by the shapes of one size, rows and columns
/// in descending lexicographic order.
struct KostkaMatrix {
    std::vector<Snakeshape> order;
    std::vector<std::vector<std::int64_t>> entries;  // [row u][column v]

    std::int64_t at(const Snakeshape& u, const Snakeshape& v) const;
    std::string to_csv() const;
};

/// Number of semistandard tableaux of shape u and content v, by the
/// two-sided recurrence peeling the front of u and the back of v:
///   N(e, e) = 1,  N(2, 2) = 0,
///   N(1u, v1) = N(u, v),             N(1u, v2) = N(u, v1),
///   N(2u, v1) = sum over w in v^(1-) of N(u, w),
///   N(2u, v2) = sum over w in v^(1-) of N(u, w1).
std::int64_t n_number(const Snakeshape& u, const Snakeshape& v);

KostkaMatrix n_matrix(int n);

/// Number of ordered shape pairs (u, v) of size n with no semistandard
/// tableau at all. Matches the count of shapes of size n-2.
std::int64_t zero_pair_count(int n);

/// Okada's transition coefficient, by the recurrence peeling the front
/// of both shapes:
///   K(e, e) = 1,
///   K(1u, 1v) = K(u, v),   K(2u, 2v) = K(u, v),   K(1u, 2v) = 0,
///   K(2u, 1v) = sum over covers w of u of K(w, v).
std::int64_t okada_k(const Snakeshape& u, const Snakeshape& v);

/// Same coefficient read off the weak order on tableaux: the number of
/// tableaux of shape u between the row canonical tableau of v and the
/// global maximum.
std::int64_t okada_k_by_interval(const Snakeshape& u, const Snakeshape& v,
                                 const YftWeakOrder& order);
std::int64_t okada_k_by_interval(const Snakeshape& u, const Snakeshape& v, int bound = 8);

enum class OkadaMethod { Recurrence, Interval };

KostkaMatrix okada_matrix(int n, OkadaMethod method = OkadaMethod::Recurrence, int bound = 8);

}  // namespace yf
