#include "yf/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace yf {

namespace {

constexpr std::size_t kWordBits = 64;

inline bool bit_test(const std::vector<std::uint64_t>& row, int i) {
    return (row[static_cast<std::size_t>(i) / kWordBits] >>
            (static_cast<std::size_t>(i) % kWordBits)) & 1u;
}

inline void bit_set(std::vector<std::uint64_t>& row, int i) {
    row[static_cast<std::size_t>(i) / kWordBits] |= std::uint64_t{1}
                                                    << (static_cast<std::size_t>(i) % kWordBits);
}

inline void bit_or(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) {
        dst[w] |= src[w];
    }
}

// Topological order of a DAG given by successor lists; throws on cycles.
std::vector<int> topo_order(const std::vector<std::vector<int>>& up_adj) {
    const int n = static_cast<int>(up_adj.size());
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& succs : up_adj) {
        for (int s : succs) {
            ++indeg[static_cast<std::size_t>(s)];
        }
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::queue<int> ready;
    for (int v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) {
            ready.push(v);
        }
    }
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        order.push_back(v);
        for (int s : up_adj[static_cast<std::size_t>(v)]) {
            if (--indeg[static_cast<std::size_t>(s)] == 0) {
                ready.push(s);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("cover relation contains a cycle");
    }
    return order;
}

}  // namespace

Poset::Poset(std::vector<int> elements, std::vector<std::pair<int, int>> covers)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate poset element");
        }
    }
    up_adj_.assign(elements_.size(), {});
    down_adj_.assign(elements_.size(), {});
    for (const auto& [x, y] : covers_) {
        int a = id_of(x);
        int b = id_of(y);
        if (a == b) {
            throw std::invalid_argument("cover from an element to itself");
        }
        up_adj_[static_cast<std::size_t>(a)].push_back(b);
        down_adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    topo_order(up_adj_);  // rejects cycles
    // reject transitive shortcuts: a cover must not be reachable by a
    // longer path
    ensure_closure();
    for (const auto& [x, y] : covers_) {
        int a = id_of(x);
        int b = id_of(y);
        for (int mid : up_adj_[static_cast<std::size_t>(a)]) {
            if (mid != b && leq_ids(mid, b)) {
                throw std::invalid_argument("cover relation has a transitive shortcut");
            }
        }
    }
}

Poset Poset::from_relation(std::vector<int> elements,
                           const std::vector<std::pair<int, int>>& leq_pairs) {
    std::unordered_map<int, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate poset element");
        }
    }
    const int n = static_cast<int>(elements.size());
    const std::size_t words = (static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [x, y] : leq_pairs) {
        auto ix = index.find(x);
        auto iy = index.find(y);
        if (ix == index.end() || iy == index.end()) {
            throw std::invalid_argument("relation pair over unknown element");
        }
        if (ix->second != iy->second) {
            adj[static_cast<std::size_t>(ix->second)].push_back(iy->second);
        }
    }
    for (auto& succs : adj) {
        std::sort(succs.begin(), succs.end());
        succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
    }
    auto order = topo_order(adj);  // rejects non-antisymmetric input
    std::vector<std::vector<std::uint64_t>> up(static_cast<std::size_t>(n),
                                               std::vector<std::uint64_t>(words, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bit_set(up[static_cast<std::size_t>(v)], v);
        for (int s : adj[static_cast<std::size_t>(v)]) {
            bit_or(up[static_cast<std::size_t>(v)], up[static_cast<std::size_t>(s)]);
        }
    }
    // transitive reduction: keep y among successors of x when no
    // intermediate z has x < z < y
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !bit_test(up[static_cast<std::size_t>(a)], b)) {
                continue;
            }
            bool shortcut = false;
            for (int c = 0; c < n && !shortcut; ++c) {
                if (c != a && c != b && bit_test(up[static_cast<std::size_t>(a)], c) &&
                    bit_test(up[static_cast<std::size_t>(c)], b)) {
                    shortcut = true;
                }
            }
            if (!shortcut) {
                covers.emplace_back(elements[static_cast<std::size_t>(a)],
                                    elements[static_cast<std::size_t>(b)]);
            }
        }
    }
    return Poset{std::move(elements), std::move(covers)};
}

int Poset::id_of(int element) const {
    auto it = index_.find(element);
    if (it == index_.end()) {
        throw std::invalid_argument("unknown poset element " + std::to_string(element));
    }
    return it->second;
}

void Poset::ensure_closure() const {
    if (!up_closure_.empty() || elements_.empty()) {
        return;
    }
    const int n = size();
    const std::size_t words = (static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits;
    up_closure_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
    auto order = topo_order(up_adj_);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bit_set(up_closure_[static_cast<std::size_t>(v)], v);
        for (int s : up_adj_[static_cast<std::size_t>(v)]) {
            bit_or(up_closure_[static_cast<std::size_t>(v)], up_closure_[static_cast<std::size_t>(s)]);
        }
    }
}

bool Poset::leq_ids(int a, int b) const {
    ensure_closure();
    return bit_test(up_closure_[static_cast<std::size_t>(a)], b);
}

bool Poset::leq(int a, int b) const {
    return leq_ids(id_of(a), id_of(b));
}

std::vector<int> Poset::interval(int a, int b) const {
    int ia = id_of(a);
    int ib = id_of(b);
    if (!leq_ids(ia, ib)) {
        throw std::invalid_argument("interval endpoints are not comparable");
    }
    std::vector<int> out;
    for (int z = 0; z < size(); ++z) {
        if (leq_ids(ia, z) && leq_ids(z, ib)) {
            out.push_back(elements_[static_cast<std::size_t>(z)]);
        }
    }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        if (down_adj_[static_cast<std::size_t>(v)].empty()) {
            out.push_back(elements_[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        if (up_adj_[static_cast<std::size_t>(v)].empty()) {
            out.push_back(elements_[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

std::vector<std::vector<int>> Poset::linear_extensions() const {
    const int n = size();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        indeg[static_cast<std::size_t>(v)] = static_cast<int>(down_adj_[static_cast<std::size_t>(v)].size());
    }
    // visit available elements in increasing name order so the output
    // is lexicographically sorted
    std::vector<int> by_name(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        by_name[static_cast<std::size_t>(v)] = v;
    }
    std::sort(by_name.begin(), by_name.end(), [&](int a, int b) {
        return elements_[static_cast<std::size_t>(a)] < elements_[static_cast<std::size_t>(b)];
    });
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    current.reserve(static_cast<std::size_t>(n));
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == n) {
            out.push_back(current);
            return;
        }
        for (int v : by_name) {
            if (used[static_cast<std::size_t>(v)] || indeg[static_cast<std::size_t>(v)] != 0) {
                continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            for (int s : up_adj_[static_cast<std::size_t>(v)]) {
                --indeg[static_cast<std::size_t>(s)];
            }
            current.push_back(elements_[static_cast<std::size_t>(v)]);
            self(self);
            current.pop_back();
            for (int s : up_adj_[static_cast<std::size_t>(v)]) {
                ++indeg[static_cast<std::size_t>(s)];
            }
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    recurse(recurse);
    return out;
}

std::vector<int> Poset::heights() const {
    const int n = size();
    std::vector<int> height(static_cast<std::size_t>(n), 0);
    for (int v : topo_order(up_adj_)) {
        for (int p : down_adj_[static_cast<std::size_t>(v)]) {
            height[static_cast<std::size_t>(v)] =
                std::max(height[static_cast<std::size_t>(v)], height[static_cast<std::size_t>(p)] + 1);
        }
    }
    return height;
}

bool Poset::is_graded() const {
    auto height = heights();
    for (const auto& [x, y] : covers_) {
        if (height[static_cast<std::size_t>(id_of(y))] !=
            height[static_cast<std::size_t>(id_of(x))] + 1) {
            return false;
        }
    }
    return true;
}

bool Poset::is_lattice() const {
    ensure_closure();
    const int n = size();
    if (n == 0) {
        return true;
    }
    const std::size_t words = up_closure_.front().size();
    // down-sets, from the transpose of the up closure
    std::vector<std::vector<std::uint64_t>> down(static_cast<std::size_t>(n),
                                                 std::vector<std::uint64_t>(words, 0));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (bit_test(up_closure_[static_cast<std::size_t>(a)], b)) {
                bit_set(down[static_cast<std::size_t>(b)], a);
            }
        }
    }
    auto has_least = [&](const std::vector<std::uint64_t>& candidates,
                         const std::vector<std::vector<std::uint64_t>>& up) {
        // least element of the candidate set: a member below all others
        for (int v = 0; v < n; ++v) {
            if (!bit_test(candidates, v)) {
                continue;
            }
            bool below_all = true;
            for (std::size_t w = 0; w < words && below_all; ++w) {
                if ((candidates[w] & ~up[static_cast<std::size_t>(v)][w]) != 0) {
                    below_all = false;
                }
            }
            if (below_all) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::uint64_t> common(words, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = up_closure_[static_cast<std::size_t>(a)][w] &
                            up_closure_[static_cast<std::size_t>(b)][w];
            }
            if (!has_least(common, up_closure_)) {
                return false;
            }
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = down[static_cast<std::size_t>(a)][w] & down[static_cast<std::size_t>(b)][w];
            }
            // greatest element of the common down-set: a member above all others
            bool found = false;
            for (int v = 0; v < n && !found; ++v) {
                if (!bit_test(common, v)) {
                    continue;
                }
                bool above_all = true;
                for (std::size_t w = 0; w < words && above_all; ++w) {
                    if ((common[w] & ~down[static_cast<std::size_t>(v)][w]) != 0) {
                        above_all = false;
                    }
                }
                found = above_all;
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

std::string Poset::to_dot(const std::function<std::string(int)>& label,
                          const std::string& graph_name) const {
    auto name_of = [&](int element) {
        return label ? label(element) : std::to_string(element);
    };
    auto height = heights();
    int max_height = 0;
    for (int h : height) {
        max_height = std::max(max_height, h);
    }
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (int v = 0; v < size(); ++v) {
        out << "  n" << v << " [label=\"" << name_of(elements_[static_cast<std::size_t>(v)])
            << "\"];\n";
    }
    for (int h = 0; h <= max_height; ++h) {
        std::vector<int> layer;
        for (int v = 0; v < size(); ++v) {
            if (height[static_cast<std::size_t>(v)] == h) {
                layer.push_back(v);
            }
        }
        if (layer.empty()) {
            continue;
        }
        out << "  { rank=same;";
        for (int v : layer) {
            out << " n" << v << ";";
        }
        out << " }\n";
    }
    for (const auto& [x, y] : covers_) {
        out << "  n" << id_of(x) << " -> n" << id_of(y) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace yf
