#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "yf/insertion.hpp"
#include "yf/snakeshape.hpp"
#include "yf/tableau.hpp"
#include "yf/weak_order.hpp"

using namespace yf;

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= static_cast<std::uint64_t>(k);
    }
    return f;
}

std::uint64_t involution_count(int n) {
    if (n <= 1) {
        return 1;
    }
    return involution_count(n - 1) + static_cast<std::uint64_t>(n - 1) * involution_count(n - 2);
}

// Brute-force enumeration oracle: try every permutation of 1..n as a
// cell filling and keep the valid ones.
std::vector<YfTableau> enumerate_standard_oracle(const Snakeshape& u) {
    const int n = u.size();
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    std::vector<YfTableau> out;
    do {
        std::vector<YfColumn> cols;
        std::size_t next = 0;
        for (auto part : u.parts()) {
            if (part == 1) {
                cols.push_back({entries[next], 0});
                next += 1;
            } else {
                cols.push_back({entries[next], entries[next + 1]});
                next += 2;
            }
        }
        YfTableau t{std::move(cols)};
        if (is_standard(t)) {
            out.push_back(std::move(t));
        }
    } while (std::next_permutation(entries.begin(), entries.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Snakeshape ones(int n) {
    return Snakeshape{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1)};
}

}  // namespace

TEST_CASE("serialization round trip") {
    auto t = YfTableau::parse("3:7 4:6 5 1:2");
    CHECK(t.str() == "3:7 4:6 5 1:2");
    CHECK(t.size() == 7);
    CHECK(t.shape().str() == "2212");
    CHECK(YfTableau::parse("e").empty());
    CHECK(YfTableau::parse("e").str() == "e");
    CHECK_THROWS_AS(YfTableau::parse("1:x"), std::invalid_argument);
    CHECK_THROWS_AS(YfTableau::parse(""), std::invalid_argument);
}

TEST_CASE("standardness") {
    CHECK(is_standard(YfTableau::parse("3:7 4:6 5 1:2")));
    // 5 is a topmost entry with the larger 7 sitting to its right
    CHECK_FALSE(is_standard(YfTableau::parse("2:6 5 7 1:3")));
    CHECK(is_standard(YfTableau::parse("1")));
    CHECK_FALSE(is_standard(YfTableau::parse("2:1")));
    CHECK_FALSE(is_standard(YfTableau::parse("1:2 1:2")));
}

TEST_CASE("standard enumeration") {
    auto two_one = enumerate_standard(Snakeshape::parse("21"));
    CHECK(two_one.size() == 2);
    CHECK(two_one == enumerate_standard_oracle(Snakeshape::parse("21")));

    for (int n = 1; n <= 5; ++n) {
        auto row = enumerate_standard(ones(n));
        REQUIRE(row.size() == 1);
        for (int c = 0; c < n; ++c) {
            CHECK(row[0].columns()[static_cast<std::size_t>(c)].bottom == n - c);
        }
    }

    CHECK(enumerate_standard(Snakeshape::parse("221")).size() == 8);

    for (int n = 0; n <= 5; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            CHECK(enumerate_standard(u) == enumerate_standard_oracle(u));
        }
    }
    for (int n = 0; n <= 7; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            CHECK(enumerate_standard(u).size() == hook_count(u));
        }
    }
}

TEST_CASE("hook counts") {
    CHECK(hook_count(Snakeshape::parse("2212")) == 24);
    CHECK(hook_count(Snakeshape::parse("222")) == 15);
    for (int n = 1; n <= 6; ++n) {
        CHECK(hook_count(ones(n)) == 1);
    }
    for (int n = 0; n <= 10; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            CHECK(hook_count(u) == chain_count(u));
        }
    }
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t total = 0;
        std::uint64_t squares = 0;
        for (const auto& u : shapes_of_size(n)) {
            auto f = hook_count(u);
            total += f;
            squares += f * f;
        }
        CHECK(total == involution_count(n));
        CHECK(squares == factorial(n));
    }
}

TEST_CASE("semistandard enumeration") {
    auto listed = enumerate_semistandard(Snakeshape::parse("221"), Snakeshape::parse("1211"));
    REQUIRE(listed.size() == 4);
    CHECK(std::find(listed.begin(), listed.end(), YfTableau::parse("1:4 2:3 2")) != listed.end());
    CHECK(std::find(listed.begin(), listed.end(), YfTableau::parse("2:4 1:3 2")) != listed.end());
    CHECK(std::find(listed.begin(), listed.end(), YfTableau::parse("2:4 2:3 1")) != listed.end());
    CHECK(std::find(listed.begin(), listed.end(), YfTableau::parse("3:4 1:2 2")) != listed.end());
    for (const auto& t : listed) {
        CHECK(is_semistandard(t));
        CHECK(tableau_content(t) == std::vector<int>{1, 2, 1, 1});
    }

    CHECK(enumerate_semistandard(Snakeshape::parse("2"), Snakeshape::parse("2")).empty());
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_semistandard(ones(n), ones(n)).size() == 1);
    }
    CHECK_THROWS_AS(enumerate_semistandard(Snakeshape::parse("2"), Snakeshape::parse("1")),
                    std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            CHECK(enumerate_semistandard(u, ones(n)) == enumerate_standard(u));
        }
    }
}

TEST_CASE("canonical words") {
    auto t = YfTableau::parse("4:8 7 2:6 5 1:3");
    CHECK(min_cano(t).str() == "31562784");
    CHECK(max_cano(t).str() == "86315274");
    CHECK(cano_involution(t).str() == "36185274");

    auto pair = YfTableau::parse("1:2");
    CHECK(min_cano(pair).str() == "21");
    CHECK(max_cano(pair).str() == "21");
    CHECK(cano_involution(pair).str() == "21");

    CHECK_THROWS_AS(min_cano(YfTableau::parse("2:1")), std::invalid_argument);

    for (int n = 1; n <= 6; ++n) {
        for (const auto& tab : all_standard_tableaux(n)) {
            auto lo = min_cano(tab);
            auto mid = cano_involution(tab);
            auto hi = max_cano(tab);
            CHECK(lo <= mid);
            CHECK(mid <= hi);
            CHECK(insert_p(lo) == tab);
            CHECK(insert_p(mid) == tab);
            CHECK(insert_p(hi) == tab);
        }
    }
}

TEST_CASE("canonical poset") {
    auto t = YfTableau::parse("4:7 1:6 5 2:3");
    auto poset = cano_poset(t);
    CHECK(poset.size() == 7);
    // chain 2 < 5 < 1 < 4 and the tops hang below their bottoms
    CHECK(poset.leq(2, 5));
    CHECK(poset.leq(5, 1));
    CHECK(poset.leq(1, 4));
    CHECK(poset.leq(3, 2));
    CHECK(poset.leq(6, 1));
    CHECK(poset.leq(7, 4));
    CHECK_FALSE(poset.leq(3, 6));
    CHECK(poset.covers().size() == 6);

    auto single = cano_poset(YfTableau::parse("1"));
    CHECK(single.size() == 1);
    CHECK(single.covers().empty());

    for (int n = 1; n <= 6; ++n) {
        for (const auto& tab : all_standard_tableaux(n)) {
            auto extensions = cano_poset(tab).linear_extensions();
            auto cls = fibo_class(tab);
            REQUIRE(extensions.size() == cls.size());
            for (std::size_t i = 0; i < cls.size(); ++i) {
                CHECK(extensions[i] == cls[i].word());
                CHECK(insert_p(cls[i]) == tab);
            }
        }
    }
}

TEST_CASE("canonical tableaux and rank extremes") {
    CHECK(row_canonical(Snakeshape::parse("2212")).str() == "1:7 2:6 5 3:4");
    CHECK(column_canonical(Snakeshape::parse("2212")).str() == "6:7 4:5 3 1:2");
    for (int n = 1; n <= 5; ++n) {
        CHECK(row_canonical(ones(n)) == column_canonical(ones(n)));
        CHECK(row_canonical(ones(n)) == enumerate_standard(ones(n)).front());
        CHECK(rho_min(ones(n)) == 0);
        CHECK(rho_max(ones(n)) == 0);
    }
    CHECK(rho_min(Snakeshape::parse("2212")) == 3);
    CHECK(rho_max(Snakeshape::parse("2212")) == 11);
    CHECK(rho_max(Snakeshape::parse("221")) == 6);
}
