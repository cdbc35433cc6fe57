#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "yf/insertion.hpp"
#include "yf/weak_order.hpp"

using namespace yf;

namespace {

bool has_target(const YfTableau& from, const char* to) {
    auto targets = shift_targets(from);
    return std::find(targets.begin(), targets.end(), YfTableau::parse(to)) != targets.end();
}

}  // namespace

TEST_CASE("single shifts") {
    CHECK(has_target(YfTableau::parse("2:5 4 3 1"), "2:5 4 1:3"));
    CHECK(has_target(YfTableau::parse("4:5 2:3 1"), "2:5 4 3 1"));
    CHECK(has_target(YfTableau::parse("2:5 1:4 3"), "1:5 2:4 3"));
    CHECK(has_target(YfTableau::parse("5 2:4 3 1"), "2:5 4 3 1"));

    auto row = shift_targets(YfTableau::parse("3 2 1"));
    REQUIRE(row.size() == 2);
    CHECK(has_target(YfTableau::parse("3 2 1"), "2:3 1"));
    CHECK(has_target(YfTableau::parse("3 2 1"), "3 1:2"));

    // the three tableaux shifting onto "3:5 4 1:2"
    std::vector<YfTableau> sources;
    for (const auto& t : all_standard_tableaux(5)) {
        if (has_target(t, "3:5 4 1:2")) {
            sources.push_back(t);
        }
    }
    std::vector<YfTableau> expected{YfTableau::parse("5 3:4 1:2"), YfTableau::parse("4:5 3 1:2"),
                                    YfTableau::parse("3:5 4 2 1")};
    std::sort(sources.begin(), sources.end());
    std::sort(expected.begin(), expected.end());
    CHECK(sources == expected);

    CHECK(shift_targets(YfTableau::parse("1")).empty());
    CHECK_THROWS_AS(shift_targets(YfTableau::parse("2:1")), std::invalid_argument);
}

TEST_CASE("shift covers raise the rank and are antisymmetric") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& t : all_standard_tableaux(n)) {
            const int rank = inv_count(min_cano(t));
            for (const auto& target : shift_targets(t)) {
                CHECK(is_standard(target));
                CHECK(target.size() == t.size());
                CHECK(inv_count(min_cano(target)) == rank + 1);
                auto back = shift_targets(target);
                CHECK(std::find(back.begin(), back.end(), t) == back.end());
            }
        }
    }
}

TEST_CASE("weak order on tableaux of size four") {
    // the complete Hasse diagram on the ten tableaux of size 4
    auto order = weak_order_yft(4);
    REQUIRE(order.poset.size() == 10);
    std::vector<std::pair<std::string, std::string>> expected{
        {"4 3 2 1", "4 3 1:2"},  {"4 3 2 1", "4 2:3 1"},  {"4 3 2 1", "3:4 2 1"},
        {"4 3 1:2", "4 1:3 2"},  {"4 3 1:2", "3:4 1:2"},  {"4 2:3 1", "4 1:3 2"},
        {"4 2:3 1", "2:4 3 1"},  {"3:4 2 1", "2:4 3 1"},  {"3:4 2 1", "3:4 1:2"},
        {"4 1:3 2", "1:4 3 2"},  {"3:4 1:2", "1:4 3 2"},  {"2:4 3 1", "2:4 1:3"},
        {"1:4 3 2", "1:4 2:3"},  {"2:4 1:3", "1:4 2:3"}};
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& [a, b] : order.poset.covers()) {
        got.emplace_back(order.tableaux[static_cast<std::size_t>(a)].str(),
                         order.tableaux[static_cast<std::size_t>(b)].str());
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}

TEST_CASE("weak order on tableaux of size five") {
    auto order = weak_order_yft(5);
    CHECK(order.poset.size() == 26);
    CHECK(order.poset.is_graded());
    CHECK_FALSE(order.poset.is_lattice());

    int min_rank = 100;
    int max_rank = -1;
    for (int r : order.rank) {
        min_rank = std::min(min_rank, r);
        max_rank = std::max(max_rank, r);
    }
    CHECK(min_rank == 0);
    CHECK(max_rank == 6);

    auto minima = order.poset.minimal_elements();
    REQUIRE(minima.size() == 1);
    CHECK(order.tableaux[static_cast<std::size_t>(minima[0])].str() == "5 4 3 2 1");
    auto maxima = order.poset.maximal_elements();
    REQUIRE(maxima.size() == 1);
    CHECK(order.tableaux[static_cast<std::size_t>(maxima[0])].str() == "1:5 2:4 3");

    CHECK(weak_order_yft(1).poset.size() == 1);
    CHECK_THROWS_AS(weak_order_yft(9), std::invalid_argument);
}

TEST_CASE("rank extremes per shape are the canonical tableaux") {
    for (int n = 1; n <= 6; ++n) {
        auto order = weak_order_yft(n);
        for (const auto& u : shapes_of_size(n)) {
            const auto ct = column_canonical(u);
            const auto rt = row_canonical(u);
            CHECK(order.rank[static_cast<std::size_t>(order.index_of(ct))] == rho_min(u));
            CHECK(order.rank[static_cast<std::size_t>(order.index_of(rt))] == rho_max(u));
            for (std::size_t i = 0; i < order.tableaux.size(); ++i) {
                if (order.tableaux[i].shape() != u) {
                    continue;
                }
                if (order.tableaux[i] != ct) {
                    CHECK(order.rank[i] > rho_min(u));
                }
                if (order.tableaux[i] != rt) {
                    CHECK(order.rank[i] < rho_max(u));
                }
            }
        }
    }
}

TEST_CASE("weak order on permutations") {
    auto s2 = weak_order_sn(2);
    CHECK(s2.poset.leq(s2.index_of(Permutation::parse("12")), s2.index_of(Permutation::parse("21"))));

    auto s3 = weak_order_sn(3);
    CHECK(s3.poset.size() == 6);
    CHECK(s3.poset.is_graded());
    CHECK(s3.poset.is_lattice());
    int top = s3.index_of(Permutation::parse("321"));
    CHECK(s3.rank[static_cast<std::size_t>(top)] == 3);
    CHECK(s3.poset.maximal_elements() == std::vector<int>{top});

    CHECK(weak_order_sn(4).poset.is_lattice());
    CHECK_THROWS_AS(weak_order_sn(9), std::invalid_argument);

    for (int n = 1; n <= 5; ++n) {
        auto sn = weak_order_sn(n);
        for (std::size_t a = 0; a < sn.perms.size(); ++a) {
            auto ia = inv_set(sn.perms[a]);
            auto na = noninv_set(sn.perms[a]);
            for (std::size_t b = 0; b < sn.perms.size(); ++b) {
                auto ib = inv_set(sn.perms[b]);
                auto nb = noninv_set(sn.perms[b]);
                const bool by_poset = sn.poset.leq(static_cast<int>(a), static_cast<int>(b));
                CHECK(by_poset == std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()));
                CHECK(by_poset == std::includes(na.begin(), na.end(), nb.begin(), nb.end()));
            }
        }
    }
}

TEST_CASE("insertion is order preserving onto the tableau order") {
    for (int n = 1; n <= 5; ++n) {
        auto yft = weak_order_yft(n);
        auto sn = weak_order_sn(n);
        // comparable words map to comparable tableaux
        for (std::size_t a = 0; a < sn.perms.size(); ++a) {
            const int ta = yft.index_of(insert_p(sn.perms[a]));
            for (std::size_t b = 0; b < sn.perms.size(); ++b) {
                if (sn.poset.leq(static_cast<int>(a), static_cast<int>(b))) {
                    CHECK(yft.poset.leq(ta, yft.index_of(insert_p(sn.perms[b]))));
                }
            }
        }
        // every shift cover is witnessed by a weak order cover upstairs
        for (const auto& t : yft.tableaux) {
            for (const auto& target : shift_targets(t)) {
                bool witnessed = false;
                for (const auto& tau : fibo_class(t)) {
                    for (const auto& successor : weak_order_successors(tau)) {
                        if (insert_p(successor) == target) {
                            witnessed = true;
                            break;
                        }
                    }
                    if (witnessed) {
                        break;
                    }
                }
                CHECK(witnessed);
            }
        }
    }
}

TEST_CASE("comparable tableaux need not come from comparable words") {
    // a two step chain in the size 4 order whose end classes admit no
    // comparable pair of words: every word of the lower class has the
    // inversion (3,2), no word of the upper class does
    auto yft = weak_order_yft(4);
    auto sn = weak_order_sn(4);
    const auto lower = YfTableau::parse("4 2:3 1");
    const auto upper = YfTableau::parse("1:4 3 2");
    CHECK(yft.poset.leq(yft.index_of(lower), yft.index_of(upper)));
    for (const auto& tau1 : fibo_class(lower)) {
        for (const auto& tau2 : fibo_class(upper)) {
            CHECK_FALSE(sn.poset.leq(sn.index_of(tau1), sn.index_of(tau2)));
        }
    }
}

TEST_CASE("unique global maximum") {
    for (int n = 1; n <= 7; ++n) {
        auto order = weak_order_yft(n);
        auto maxima = order.poset.maximal_elements();
        REQUIRE(maxima.size() == 1);
        CHECK(order.poset.minimal_elements().size() == 1);
        // the top is the row canonical tableau of the widest shape
        std::vector<std::uint8_t> parts(static_cast<std::size_t>(n / 2), 2);
        if (n % 2 == 1) {
            parts.push_back(1);
        }
        CHECK(order.tableaux[static_cast<std::size_t>(maxima[0])] ==
              row_canonical(Snakeshape{parts}));
    }
    // ranks 0..12 at size 7, the top two levels being the global
    // maximum and the row canonical tableau of 2212 among others
    auto seven = weak_order_yft(7);
    int top_rank = 0;
    for (int r : seven.rank) {
        top_rank = std::max(top_rank, r);
    }
    CHECK(top_rank == 12);
    CHECK(seven.rank[static_cast<std::size_t>(
              seven.index_of(row_canonical(Snakeshape::parse("2212"))))] == 11);
}

TEST_CASE("poset toolkit basics") {
    // a four element diamond
    Poset diamond{{1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}};
    CHECK(diamond.leq(1, 4));
    CHECK_FALSE(diamond.leq(2, 3));
    CHECK(diamond.interval(1, 4).size() == 4);
    CHECK(diamond.interval(2, 2) == std::vector<int>{2});
    CHECK_THROWS_AS(diamond.interval(2, 3), std::invalid_argument);
    CHECK(diamond.is_graded());
    CHECK(diamond.is_lattice());
    CHECK(diamond.linear_extensions().size() == 2);
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}), std::invalid_argument);

    // the tree counted by the hook product of 2212
    auto extensions = cano_poset(column_canonical(Snakeshape::parse("2212"))).linear_extensions();
    CHECK(extensions.size() == 24);

    auto order3 = weak_order_yft(3);
    auto dot = order3.poset.to_dot(
        [&](int id) { return order3.tableaux[static_cast<std::size_t>(id)].str(); }, "yft3");
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("digraph yft3") != std::string::npos);
}
