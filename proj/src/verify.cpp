#include "yf/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>

#include "yf/chains.hpp"
#include "yf/fibokostka.hpp"
#include "yf/insertion.hpp"
#include "yf/permutation.hpp"
#include "yf/poset.hpp"
#include "yf/snakeshape.hpp"
#include "yf/tableau.hpp"
#include "yf/weak_order.hpp"
#include "yf/youngside.hpp"

namespace yf {

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
    return involution_count(n - 1) +
           static_cast<std::uint64_t>(n - 1) * involution_count(n - 2);
}

struct Log {
    std::ostream& out;
    bool ok = true;

    bool fail(const std::string& what, const std::string& counterexample) {
        out << "FAIL " << what << ": " << counterexample << '\n';
        ok = false;
        return false;
    }
    void pass(const std::string& what) { out << "ok   " << what << '\n'; }
};

}  // namespace

bool verify_snakeshape(int bound, std::ostream& out) {
    // counting identities are cheap and always run at their full
    // range; only the exhaustive sweeps respect the bound
    (void)bound;
    Log log{out};
    for (int n = 2; n <= 20; ++n) {
        auto a = shapes_of_size(n).size();
        auto b = shapes_of_size(n - 1).size();
        auto c = shapes_of_size(n - 2).size();
        if (a != b + c) {
            return log.fail("fibonacci count recurrence", "n=" + std::to_string(n));
        }
    }
    log.pass("shape counts follow the fibonacci recurrence");
    for (int n = 0; n <= 8; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            for (const auto& v : covers_up(u)) {
                if (v.size() != u.size() + 1 ||
                    (v.length() != u.length() && v.length() != u.length() + 1)) {
                    return log.fail("cover size and length", u.str() + " -> " + v.str());
                }
                auto down = covers_down(v);
                if (std::find(down.begin(), down.end(), u) == down.end()) {
                    return log.fail("covers duality (up then down)", u.str() + " -> " + v.str());
                }
            }
            if (!u.empty()) {
                for (const auto& w : covers_down(u)) {
                    auto up = covers_up(w);
                    if (std::find(up.begin(), up.end(), u) == up.end()) {
                        return log.fail("covers duality (down then up)",
                                        u.str() + " -> " + w.str());
                    }
                }
            }
        }
    }
    log.pass("covers_up and covers_down are dual");
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t total = 0;
        for (const auto& u : shapes_of_size(n)) {
            std::uint64_t c = chain_count(u);
            total += c * c;
        }
        if (total != factorial(n)) {
            return log.fail("sum of squared chain counts is n!", "n=" + std::to_string(n));
        }
    }
    log.pass("sum of squared chain counts is n!");
    return log.ok;
}

bool verify_tableau(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 0; n <= 10; ++n) {
        for (const auto& u : shapes_of_size(n)) {
            if (hook_count(u) != chain_count(u)) {
                return log.fail("hook count equals chain count", u.str());
            }
        }
    }
    log.pass("hook count equals chain count");
    for (int n = 0; n <= std::min(bound, 7); ++n) {
        for (const auto& u : shapes_of_size(n)) {
            if (enumerate_standard(u).size() != hook_count(u)) {
                return log.fail("enumeration matches the hook count", u.str());
            }
        }
    }
    log.pass("standard enumeration matches the hook count");
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t total = 0;
        std::uint64_t squares = 0;
        for (const auto& u : shapes_of_size(n)) {
            auto f = hook_count(u);
            total += f;
            squares += f * f;
        }
        if (total != involution_count(n) || squares != factorial(n)) {
            return log.fail("hook count sums", "n=" + std::to_string(n));
        }
    }
    log.pass("hook counts sum to involution counts and squares to n!");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        for (const auto& t : all_standard_tableaux(n)) {
            auto lo = min_cano(t);
            auto mid = cano_involution(t);
            auto hi = max_cano(t);
            if (!(lo <= mid && mid <= hi)) {
                return log.fail("canonical words are ordered", t.str());
            }
            if (insert_p(lo) != t || insert_p(mid) != t || insert_p(hi) != t) {
                return log.fail("canonical words insert back to the tableau", t.str());
            }
        }
    }
    log.pass("canonical words are ordered and insert back");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        std::vector<std::uint8_t> ones(static_cast<std::size_t>(n), 1);
        const Snakeshape row{std::move(ones)};
        for (const auto& u : shapes_of_size(n)) {
            if (enumerate_semistandard(u, row) != enumerate_standard(u)) {
                return log.fail("semistandard with distinct content is standard", u.str());
            }
        }
    }
    log.pass("semistandard tableaux with content 1^n are the standard ones");
    return log.ok;
}

bool verify_insertion(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 1; n <= std::min(bound, 7); ++n) {
        std::map<std::pair<YfTableau, YfTableau>, int> seen;
        std::map<Snakeshape, std::uint64_t> by_shape;
        for (const auto& sigma : all_permutations(n)) {
            auto [p, q] = insert_pq(sigma);
            if (p.shape() != q.shape() || !is_standard(p) || !is_standard(q)) {
                return log.fail("insertion yields same-shape standard pairs", sigma.str());
            }
            if (insert_p(sigma.inverse()) != q) {
                return log.fail("P of the inverse equals Q", sigma.str());
            }
            if (sigma.is_involution() &&
                (cano_involution(p) != sigma || q != p)) {
                return log.fail("involutions read back from their columns", sigma.str());
            }
            if (++seen[{p, q}] > 1) {
                return log.fail("insertion is injective", sigma.str());
            }
            ++by_shape[p.shape()];
        }
        std::uint64_t squares = 0;
        for (const auto& u : shapes_of_size(n)) {
            auto f = hook_count(u);
            squares += f * f;
            auto it = by_shape.find(u);
            std::uint64_t got = it == by_shape.end() ? 0 : it->second;
            if (got != f * f) {
                return log.fail("image counts per shape", u.str());
            }
        }
        if (squares != factorial(n)) {
            return log.fail("squared hook counts sum to n!", "n=" + std::to_string(n));
        }
    }
    log.pass("inverse, involution, injectivity and image counts hold");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        auto sn = weak_order_sn(n);
        for (const auto& t : all_standard_tableaux(n)) {
            auto cls = fibo_class(t);
            const int lo = sn.index_of(min_cano(t));
            const int hi = sn.index_of(max_cano(t));
            auto interval = sn.poset.interval(lo, hi);
            if (interval.size() != cls.size()) {
                return log.fail("class equals the weak-order interval", t.str());
            }
            std::vector<Permutation> interval_perms;
            for (int id : interval) {
                interval_perms.push_back(sn.perms[static_cast<std::size_t>(id)]);
            }
            std::sort(interval_perms.begin(), interval_perms.end());
            std::sort(cls.begin(), cls.end());
            if (interval_perms != cls) {
                return log.fail("class equals the weak-order interval", t.str());
            }
        }
    }
    log.pass("classes are weak-order intervals between the canonical words");
    return log.ok;
}

bool verify_chains(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 1; n <= std::min(bound, 7); ++n) {
        for (const auto& t : all_standard_tableaux(n)) {
            auto chain = tableau_to_chain(t);
            if (chain_to_tableau(chain) != t) {
                return log.fail("tableau to chain round trip", t.str());
            }
            if (tableau_to_chain_by_reversal(t) != chain) {
                return log.fail("direct reversal agrees with the restriction chain", t.str());
            }
        }
    }
    log.pass("chain and tableau conversions are mutually inverse");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        for (const auto& sigma : all_permutations(n)) {
            GrowthDiagram d{sigma};
            if (!d.audit()) {
                return log.fail("growth diagram audit", sigma.str());
            }
            auto [p_hat, q_hat] = boundary_chains(d);
            auto [p, q] = insert_pq(sigma);
            if (chain_to_tableau(p_hat) != p || chain_to_tableau(q_hat) != q) {
                return log.fail("boundary chains convert to P and Q", sigma.str());
            }
        }
    }
    log.pass("growth diagrams reproduce the insertion pair");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        for (const auto& sigma : all_permutations(n)) {
            auto p = insert_p(sigma);
            for (const auto& col : p.columns()) {
                const int a0 = col.topmost();
                std::vector<int> shorter;
                for (int letter : sigma.word()) {
                    if (letter != a0) {
                        shorter.push_back(letter);
                    }
                }
                if (evacuate_letter(p, a0) != insert_p(shorter)) {
                    return log.fail("evacuation commutes with letter deletion",
                                    sigma.str() + " letter " + std::to_string(a0));
                }
            }
        }
    }
    log.pass("evacuating a letter matches deleting it before insertion");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        for (const auto& sigma : all_permutations(n)) {
            auto p = insert_p(sigma);
            if (evacuation_tableau(p) != canonical_labeling(tableau_to_chain(p))) {
                return log.fail("evacuation labels the boundary chain", sigma.str());
            }
        }
    }
    log.pass("evacuation produces the path tableau of the P chain");
    return log.ok;
}

bool verify_poset(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        for (const auto& t : all_standard_tableaux(n)) {
            const int rank = inv_count(min_cano(t));
            for (const auto& target : shift_targets(t)) {
                if (inv_count(min_cano(target)) != rank + 1) {
                    return log.fail("shifts raise the inversion rank by one",
                                    t.str() + " -> " + target.str());
                }
                auto back = shift_targets(target);
                if (std::find(back.begin(), back.end(), t) != back.end()) {
                    return log.fail("shifting is antisymmetric", t.str());
                }
            }
        }
    }
    log.pass("shift covers raise the rank by one and are antisymmetric");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        auto order = weak_order_yft(n);
        if (!order.poset.is_graded()) {
            return log.fail("weak order on tableaux is graded", "n=" + std::to_string(n));
        }
        std::map<Snakeshape, std::pair<std::vector<int>, std::vector<int>>> extremes;
        for (std::size_t i = 0; i < order.tableaux.size(); ++i) {
            const auto& t = order.tableaux[i];
            const int r = order.rank[i];
            auto& [mins, maxs] = extremes[t.shape()];
            if (mins.empty() || r < order.rank[static_cast<std::size_t>(mins.front())]) {
                mins = {static_cast<int>(i)};
            } else if (r == order.rank[static_cast<std::size_t>(mins.front())]) {
                mins.push_back(static_cast<int>(i));
            }
            if (maxs.empty() || r > order.rank[static_cast<std::size_t>(maxs.front())]) {
                maxs = {static_cast<int>(i)};
            } else if (r == order.rank[static_cast<std::size_t>(maxs.front())]) {
                maxs.push_back(static_cast<int>(i));
            }
        }
        for (const auto& [shape, pair] : extremes) {
            const auto& [mins, maxs] = pair;
            if (mins.size() != 1 ||
                order.tableaux[static_cast<std::size_t>(mins.front())] != column_canonical(shape) ||
                order.rank[static_cast<std::size_t>(mins.front())] != rho_min(shape)) {
                return log.fail("column canonical tableau is the unique rank minimum",
                                shape.str());
            }
            if (maxs.size() != 1 ||
                order.tableaux[static_cast<std::size_t>(maxs.front())] != row_canonical(shape) ||
                order.rank[static_cast<std::size_t>(maxs.front())] != rho_max(shape)) {
                return log.fail("row canonical tableau is the unique rank maximum", shape.str());
            }
        }
    }
    log.pass("rank extremes per shape are the canonical tableaux");
    for (int n = 1; n <= std::min(bound, 7); ++n) {
        auto order = weak_order_yft(n);
        if (order.poset.maximal_elements().size() != 1) {
            return log.fail("weak order has a unique maximum", "n=" + std::to_string(n));
        }
    }
    log.pass("weak order on tableaux has a unique maximum");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        auto sn = weak_order_sn(n);
        for (std::size_t a = 0; a < sn.perms.size(); ++a) {
            for (std::size_t b = 0; b < sn.perms.size(); ++b) {
                const bool by_poset = sn.poset.leq(static_cast<int>(a), static_cast<int>(b));
                auto na = noninv_set(sn.perms[a]);
                auto nb = noninv_set(sn.perms[b]);
                const bool by_noninv =
                    std::includes(na.begin(), na.end(), nb.begin(), nb.end());
                auto ia = inv_set(sn.perms[a]);
                auto ib = inv_set(sn.perms[b]);
                const bool by_inv = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
                if (by_poset != by_noninv || by_poset != by_inv) {
                    return log.fail("weak order equals inversion containment",
                                    sn.perms[a].str() + " vs " + sn.perms[b].str());
                }
            }
        }
    }
    log.pass("weak order on permutations matches inversion-set containment");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        auto yft = weak_order_yft(n);
        auto sn = weak_order_sn(n);
        // insertion is order preserving, and every shift cover is hit
        // by some weak order cover; a comparable tableau pair need not
        // lift to a comparable word pair once shifts are composed
        for (std::size_t a = 0; a < sn.perms.size(); ++a) {
            const int ta = yft.index_of(insert_p(sn.perms[a]));
            for (std::size_t b = 0; b < sn.perms.size(); ++b) {
                if (sn.poset.leq(static_cast<int>(a), static_cast<int>(b)) &&
                    !yft.poset.leq(ta, yft.index_of(insert_p(sn.perms[b])))) {
                    return log.fail("insertion preserves the weak order",
                                    sn.perms[a].str() + " vs " + sn.perms[b].str());
                }
            }
        }
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
                if (!witnessed) {
                    return log.fail("shift covers lift to weak order covers",
                                    t.str() + " -> " + target.str());
                }
            }
        }
    }
    log.pass("insertion projects the weak order onto the tableau order");
    if (bound >= 4) {
        if (!weak_order_sn(4).poset.is_lattice()) {
            return log.fail("weak order on S_4 is a lattice", "n=4");
        }
        log.pass("weak order on S_4 is a lattice");
    }
    if (bound >= 5) {
        if (weak_order_yft(5).poset.is_lattice()) {
            return log.fail("weak order on tableaux of size 5 is not a lattice", "n=5");
        }
        log.pass("weak order on tableaux of size 5 is not a lattice");
    }
    return log.ok;
}

bool verify_kostka(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        for (const auto& u : shapes_of_size(n)) {
            for (const auto& v : shapes_of_size(n)) {
                if (n_number(u, v) !=
                    static_cast<std::int64_t>(enumerate_semistandard(u, v).size())) {
                    return log.fail("recurrence matches the semistandard count",
                                    u.str() + "," + v.str());
                }
            }
        }
    }
    log.pass("the recurrence counts semistandard tableaux");
    for (int n = 2; n <= 12; ++n) {
        if (zero_pair_count(n) != static_cast<std::int64_t>(shapes_of_size(n - 2).size())) {
            return log.fail("zero pairs count shapes two sizes down", "n=" + std::to_string(n));
        }
    }
    log.pass("zero entries match the shape count two sizes down");
    for (int n = 1; n <= std::min(bound, 6); ++n) {
        auto order = weak_order_yft(n);
        for (const auto& u : shapes_of_size(n)) {
            for (const auto& v : shapes_of_size(n)) {
                if (okada_k(u, v) != okada_k_by_interval(u, v, order)) {
                    return log.fail("recurrence matches the interval count",
                                    u.str() + "," + v.str());
                }
            }
        }
    }
    log.pass("both Okada computations agree");
    for (int n = 0; n <= 8; ++n) {
        std::vector<std::uint8_t> ones(static_cast<std::size_t>(n), 1);
        const Snakeshape row{std::move(ones)};
        for (const auto& u : shapes_of_size(n)) {
            if (okada_k(u, row) != static_cast<std::int64_t>(hook_count(u))) {
                return log.fail("coefficient over 1^n is the tableau count", u.str());
            }
        }
    }
    log.pass("coefficients over 1^n are the tableau counts");
    return log.ok;
}

bool verify_young(int bound, std::ostream& out) {
    Log log{out};
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        for (const auto& lam : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                auto direct = kostka(lam, mu);
                if (direct != kostka_by_interval(lam, mu, SytOrder::Chain) ||
                    direct != kostka_by_interval(lam, mu, SytOrder::Weak)) {
                    return log.fail("Kostka numbers count interval tableaux",
                                    lam.str() + "," + mu.str());
                }
            }
        }
    }
    log.pass("Kostka numbers equal both interval counts");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        auto weak = weak_order_syt(n);
        const auto& ts = weak.tableaux;
        for (std::size_t a = 0; a < ts.size(); ++a) {
            if (!chain_leq(ts[a], ts[a])) {
                return log.fail("chain order is reflexive", ts[a].str());
            }
            for (std::size_t b = 0; b < ts.size(); ++b) {
                const bool by_chain = chain_leq(ts[a], ts[b]);
                if (a != b && by_chain && chain_leq(ts[b], ts[a])) {
                    return log.fail("chain order is antisymmetric",
                                    ts[a].str() + " vs " + ts[b].str());
                }
                if (by_chain != weak.poset.leq(static_cast<int>(a), static_cast<int>(b))) {
                    return log.fail("chain and weak orders coincide",
                                    ts[a].str() + " vs " + ts[b].str());
                }
            }
        }
    }
    log.pass("chain order is a partial order and coincides with the weak order");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        auto weak = weak_order_syt(n);
        const int bottom = weak.index_of(yt_minimum(n));
        for (std::size_t a = 0; a < weak.tableaux.size(); ++a) {
            if (!weak.poset.leq(bottom, static_cast<int>(a))) {
                return log.fail("the one-row tableau is the global minimum",
                                weak.tableaux[a].str());
            }
        }
        for (const auto& mu : partitions_of(n)) {
            const int top = weak.index_of(yt_row_canonical(mu));
            for (int id : weak.poset.interval(bottom, top)) {
                if (!weak.poset.leq(id, top)) {
                    return log.fail("row canonical tableau tops its interval", mu.str());
                }
            }
        }
    }
    log.pass("interval ends are the one-row and row canonical tableaux");
    return log.ok;
}

bool verify_all(int bound, std::ostream& out) {
    bool ok = true;
    for (const auto& name : verify_suite_names()) {
        if (name == "all") {
            continue;
        }
        out << "[" << name << "]\n";
        ok = run_verify_suite(name, bound, out) && ok;
    }
    return ok;
}

std::vector<std::string> verify_suite_names() {
    return {"all",   "snakeshape", "tableau", "insertion",
            "chains", "poset",     "kostka",  "young"};
}

bool run_verify_suite(const std::string& name, int bound, std::ostream& out) {
    if (name == "all") {
        return verify_all(bound, out);
    }
    if (name == "snakeshape") {
        return verify_snakeshape(bound, out);
    }
    if (name == "tableau") {
        return verify_tableau(bound, out);
    }
    if (name == "insertion") {
        return verify_insertion(bound, out);
    }
    if (name == "chains") {
        return verify_chains(bound, out);
    }
    if (name == "poset") {
        return verify_poset(bound, out);
    }
    if (name == "kostka") {
        return verify_kostka(bound, out);
    }
    if (name == "young") {
        return verify_young(bound, out);
    }
    throw std::invalid_argument("unknown verification suite \"" + name + "\"");
}

}  // namespace yf
