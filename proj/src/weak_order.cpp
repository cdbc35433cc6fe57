#include "yf/weak_order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace yf {

std::vector<YfTableau> shift_targets(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("shifting requires a standard tableau");
    }
    const auto& cols = t.columns();
    std::vector<YfTableau> out;
    for (std::size_t j = 1; j < cols.size(); ++j) {
        const int a = cols[j].bottom;
        const int b = cols[j].top;  // 0 when single
        const YfColumn& left = cols[j - 1];
        auto cand = cols;
        if (!left.two_boxed()) {
            // a climbs on top of the single-boxed neighbour; its old
            // top, if any, falls down
            cand[j - 1] = {a, left.bottom};
            if (b != 0) {
                cand[j] = {b, 0};
            } else {
                cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(j));
            }
        } else {
            const int c = left.bottom;
            const int d = left.top;
            if (a >= c) {
                continue;
            }
            cand[j - 1] = {a, d};
            if (b != 0 && c < b) {
                cand[j] = {c, b};
            } else if (b != 0) {
                // c parks as a single column and b falls down
                cand[j] = {c, 0};
                cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(j) + 1, {b, 0});
            } else {
                cand[j] = {c, 0};
            }
        }
        YfTableau target{std::move(cand)};
        if (!is_standard(target)) {
            throw std::logic_error("shift produced an invalid tableau from " + t.str());
        }
        out.push_back(std::move(target));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<YfTableau> all_standard_tableaux(int n) {
    std::vector<YfTableau> out;
    for (const auto& u : shapes_of_size(n)) {
        auto per_shape = enumerate_standard(u);
        out.insert(out.end(), per_shape.begin(), per_shape.end());
    }
    return out;
}

int YftWeakOrder::index_of(const YfTableau& t) const {
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        if (tableaux[i] == t) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("tableau " + t.str() + " is not an element of the poset");
}

YftWeakOrder weak_order_yft(int n, int bound) {
    if (n < 1 || n > bound) {
        throw std::invalid_argument("weak order on tableaux limited to 1 <= n <= " +
                                    std::to_string(bound));
    }
    YftWeakOrder order;
    order.tableaux = all_standard_tableaux(n);
    std::map<YfTableau, int> index;
    std::vector<int> elements;
    for (std::size_t i = 0; i < order.tableaux.size(); ++i) {
        index.emplace(order.tableaux[i], static_cast<int>(i));
        elements.push_back(static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < order.tableaux.size(); ++i) {
        for (const auto& target : shift_targets(order.tableaux[i])) {
            covers.emplace_back(static_cast<int>(i), index.at(target));
        }
    }
    order.poset = Poset{std::move(elements), std::move(covers)};
    order.rank.reserve(order.tableaux.size());
    for (const auto& t : order.tableaux) {
        order.rank.push_back(inv_count(min_cano(t)));
    }
    return order;
}

int SnWeakOrder::index_of(const Permutation& sigma) const {
    auto it = std::lower_bound(perms.begin(), perms.end(), sigma);
    if (it == perms.end() || *it != sigma) {
        throw std::invalid_argument("permutation " + sigma.str() +
                                    " is not an element of the poset");
    }
    return static_cast<int>(it - perms.begin());
}

SnWeakOrder weak_order_sn(int n, int bound) {
    if (n < 1 || n > bound) {
        throw std::invalid_argument("weak order on S_n limited to 1 <= n <= " +
                                    std::to_string(bound));
    }
    SnWeakOrder order;
    order.perms = all_permutations(n);  // already sorted
    std::vector<int> elements;
    for (std::size_t i = 0; i < order.perms.size(); ++i) {
        elements.push_back(static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < order.perms.size(); ++i) {
        for (const auto& tau : weak_order_successors(order.perms[i])) {
            covers.emplace_back(static_cast<int>(i), order.index_of(tau));
        }
    }
    order.poset = Poset{std::move(elements), std::move(covers)};
    order.rank.reserve(order.perms.size());
    for (const auto& sigma : order.perms) {
        order.rank.push_back(inv_count(sigma));
    }
    return order;
}

}  // namespace yf
