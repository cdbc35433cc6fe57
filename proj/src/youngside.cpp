#include "yf/youngside.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace yf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw std::invalid_argument("partition parts must be positive and weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    if (text == "e") {
        return Partition{};
    }
    if (text.empty()) {
        throw std::invalid_argument("empty partition text, use \"e\"");
    }
    std::vector<int> parts;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                            "' in partition \"" + std::string(text) + "\"");
            }
            parts.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) {
                next = text.size();
            }
            std::string token(text.substr(pos, next - pos));
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument("invalid token \"" + token + "\" in partition");
            }
            parts.push_back(value);
            pos = next + 1;
            if (next == text.size()) {
                break;
            }
        }
    }
    return Partition{std::move(parts)};
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    if (parts_.empty()) {
        return "e";
    }
    bool digits = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 9; });
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!digits && i > 0) {
            out.push_back(',');
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{current});
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) {
        throw std::invalid_argument("dominance compares partitions of the same size");
    }
    const auto& m = mu.parts();
    const auto& l = lam.parts();
    int sum_m = 0;
    int sum_l = 0;
    for (std::size_t i = 0; i < std::min(m.size(), l.size()); ++i) {
        sum_m += m[i];
        sum_l += l[i];
        if (sum_l < sum_m) {
            return false;
        }
    }
    return true;
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size())) {
            throw std::invalid_argument("row lengths must be positive and weakly decreasing");
        }
        for (int v : rows_[r]) {
            if (v < 1) {
                throw std::invalid_argument("tableau entries must be positive");
            }
        }
    }
}

YoungTableau YoungTableau::parse(std::string_view text) {
    if (text == "e") {
        return YoungTableau{};
    }
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        if (next == std::string_view::npos) {
            next = text.size();
        }
        std::string row_text(text.substr(pos, next - pos));
        std::vector<int> row;
        std::istringstream in(row_text);
        int value = 0;
        while (in >> value) {
            row.push_back(value);
        }
        if (!in.eof()) {
            throw std::invalid_argument("invalid tableau row \"" + row_text + "\"");
        }
        rows.push_back(std::move(row));
        pos = next + 1;
        if (next == text.size()) {
            break;
        }
    }
    return YoungTableau{std::move(rows)};
}

int YoungTableau::size() const {
    int n = 0;
    for (const auto& row : rows_) {
        n += static_cast<int>(row.size());
    }
    return n;
}

Partition YoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) {
        parts.push_back(static_cast<int>(row.size()));
    }
    return Partition{std::move(parts)};
}

std::string YoungTableau::str() const {
    if (rows_.empty()) {
        return "e";
    }
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) {
            out.push_back(';');
        }
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0) {
                out.push_back(' ');
            }
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

namespace {

bool yt_valid(const YoungTableau& t, bool standard) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && (standard ? rows[r][c] <= rows[r][c - 1] : rows[r][c] < rows[r][c - 1])) {
                return false;
            }
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) {
                return false;
            }
        }
    }
    if (standard) {
        const int n = t.size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const auto& row : rows) {
            for (int v : row) {
                if (v > n || seen[static_cast<std::size_t>(v)]) {
                    return false;
                }
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    return true;
}

}  // namespace

bool yt_is_standard(const YoungTableau& t) {
    return yt_valid(t, true);
}

bool yt_is_semistandard(const YoungTableau& t) {
    return yt_valid(t, false);
}

YoungTableau rsk_p(const std::vector<int>& word) {
    std::vector<std::vector<int>> rows;
    for (int letter : word) {
        int value = letter;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({value});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), value);
            if (it == rows[r].end()) {
                rows[r].push_back(value);
                break;
            }
            std::swap(*it, value);
        }
    }
    return YoungTableau{std::move(rows)};
}

YoungTableau rsk_p(const Permutation& sigma) {
    return rsk_p(sigma.word());
}

std::vector<YoungTableau> enumerate_syt(const Partition& shape) {
    const auto& parts = shape.parts();
    const int n = shape.size();
    std::vector<std::vector<int>> rows(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        rows[r].assign(static_cast<std::size_t>(parts[r]), 0);
    }
    std::vector<YoungTableau> out;
    // place 1..n in order; each entry goes into the leftmost empty cell
    // of some row whose left neighbour is filled and whose cell below
    // is filled
    std::vector<std::size_t> filled(parts.size(), 0);
    auto recurse = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(YoungTableau{rows});
            return;
        }
        for (std::size_t r = 0; r < parts.size(); ++r) {
            std::size_t c = filled[r];
            if (c >= rows[r].size()) {
                continue;
            }
            if (r > 0 && filled[r - 1] <= c) {
                continue;
            }
            rows[r][c] = next;
            ++filled[r];
            self(self, next + 1);
            --filled[r];
            rows[r][c] = 0;
        }
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungTableau> all_syt(int n) {
    std::vector<YoungTableau> out;
    for (const auto& shape : partitions_of(n)) {
        auto per_shape = enumerate_syt(shape);
        out.insert(out.end(), per_shape.begin(), per_shape.end());
    }
    return out;
}

namespace {

// Cell states for the sliding grid.
constexpr int kOutside = -1;
constexpr int kHole = 0;

// Jeu de taquin rectification of the cells of t whose entries lie in
// [i, j]. Entries below i leave holes that are slid out one by one.
std::vector<std::vector<int>> restricted_grid(const YoungTableau& t, int i, int j) {
    const auto& rows = t.rows();
    std::vector<std::vector<int>> grid(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        grid[r].assign(rows[r].size(), kOutside);
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] >= i && rows[r][c] <= j) {
                grid[r][c] = rows[r][c] - (i - 1);
            } else if (rows[r][c] < i) {
                grid[r][c] = kHole;
            }
        }
    }
    return grid;
}

}  // namespace

Partition restricted_shape(const YoungTableau& t, int i, int j) {
    if (!yt_is_standard(t)) {
        throw std::invalid_argument("restriction requires a standard tableau");
    }
    if (i < 1 || j > t.size() || i > j) {
        throw std::invalid_argument("invalid restriction range");
    }
    auto grid = restricted_grid(t, i, j);
    auto occupied = [&](std::size_t r, std::size_t c) {
        return r < grid.size() && c < grid[r].size() && grid[r][c] > 0;
    };
    auto is_hole = [&](std::size_t r, std::size_t c) {
        return r < grid.size() && c < grid[r].size() && grid[r][c] == kHole;
    };
    while (true) {
        // innermost hole: a hole with no hole above or to its right
        std::size_t hr = grid.size();
        std::size_t hc = 0;
        for (std::size_t r = grid.size(); r-- > 0 && hr == grid.size();) {
            for (std::size_t c = grid[r].size(); c-- > 0;) {
                if (grid[r][c] == kHole) {
                    hr = r;
                    hc = c;
                    break;
                }
            }
        }
        if (hr == grid.size()) {
            break;
        }
        if (is_hole(hr + 1, hc) || is_hole(hr, hc + 1)) {
            throw std::logic_error("hole region is not a partition shape");
        }
        // slide the hole outward, always pulling in the smaller neighbour
        std::size_t r = hr;
        std::size_t c = hc;
        while (true) {
            const bool up = occupied(r + 1, c);
            const bool right = occupied(r, c + 1);
            if (!up && !right) {
                grid[r][c] = kOutside;
                break;
            }
            bool take_up = up && (!right || grid[r + 1][c] < grid[r][c + 1]);
            if (take_up) {
                grid[r][c] = grid[r + 1][c];
                grid[r + 1][c] = kHole;
                ++r;
            } else {
                grid[r][c] = grid[r][c + 1];
                grid[r][c + 1] = kHole;
                ++c;
            }
        }
    }
    std::vector<int> parts;
    for (const auto& row : grid) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && row[static_cast<std::size_t>(len)] > 0) {
            ++len;
        }
        if (len > 0) {
            parts.push_back(len);
        }
    }
    return Partition{std::move(parts)};
}

bool chain_leq(const YoungTableau& t, const YoungTableau& t_prime) {
    if (t.size() != t_prime.size()) {
        throw std::invalid_argument("chain order compares tableaux of the same size");
    }
    const int n = t.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (!dominance_leq(restricted_shape(t_prime, i, j), restricted_shape(t, i, j))) {
                return false;
            }
        }
    }
    return true;
}

int SytWeakOrder::index_of(const YoungTableau& t) const {
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        if (tableaux[i] == t) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("tableau " + t.str() + " is not an element of the poset");
}

SytWeakOrder weak_order_syt(int n, int bound) {
    if (n < 1 || n > bound) {
        throw std::invalid_argument("weak order on Young tableaux limited to 1 <= n <= " +
                                    std::to_string(bound));
    }
    SytWeakOrder order;
    order.tableaux = all_syt(n);
    std::map<YoungTableau, int> index;
    std::vector<int> elements;
    for (std::size_t i = 0; i < order.tableaux.size(); ++i) {
        index.emplace(order.tableaux[i], static_cast<int>(i));
        elements.push_back(static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> relation;
    for (const auto& sigma : all_permutations(n)) {
        const int from = index.at(rsk_p(sigma));
        for (const auto& tau : weak_order_successors(sigma)) {
            relation.emplace_back(from, index.at(rsk_p(tau)));
        }
    }
    order.poset = Poset::from_relation(std::move(elements), relation);
    return order;
}

std::int64_t kostka(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) {
        throw std::invalid_argument("shape and content sizes differ");
    }
    const auto& shape = lam.parts();
    std::vector<int> counts(mu.parts().begin(), mu.parts().end());
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) {
        rows[r].assign(static_cast<std::size_t>(shape[r]), 0);
    }
    std::int64_t total = 0;
    auto recurse = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            ++total;
            return;
        }
        std::size_t nr = r;
        std::size_t nc = c + 1;
        if (nc == rows[r].size()) {
            ++nr;
            nc = 0;
        }
        const int low = std::max(c > 0 ? rows[r][c - 1] : 1,
                                 r > 0 && c < rows[r - 1].size() ? rows[r - 1][c] + 1 : 1);
        for (int v = low; v <= static_cast<int>(counts.size()); ++v) {
            if (counts[static_cast<std::size_t>(v) - 1] == 0) {
                continue;
            }
            --counts[static_cast<std::size_t>(v) - 1];
            rows[r][c] = v;
            self(self, nr, nc);
            ++counts[static_cast<std::size_t>(v) - 1];
        }
    };
    if (rows.empty()) {
        return 1;
    }
    recurse(recurse, 0, 0);
    return total;
}

YoungTableau yt_row_canonical(const Partition& mu) {
    std::vector<std::vector<int>> rows(mu.parts().size());
    int next = 1;
    for (std::size_t r = 0; r < mu.parts().size(); ++r) {
        for (int c = 0; c < mu.parts()[r]; ++c) {
            rows[r].push_back(next++);
        }
    }
    return YoungTableau{std::move(rows)};
}

YoungTableau yt_minimum(int n) {
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    return YoungTableau{{row}};
}

std::int64_t kostka_by_interval(const Partition& lam, const Partition& mu, SytOrder order,
                                int bound) {
    if (lam.size() != mu.size()) {
        throw std::invalid_argument("shape and content sizes differ");
    }
    const int n = lam.size();
    if (n > bound) {
        throw std::invalid_argument("interval method limited to n <= " + std::to_string(bound));
    }
    const YoungTableau top = yt_row_canonical(mu);
    std::int64_t count = 0;
    if (order == SytOrder::Weak) {
        auto weak = weak_order_syt(n, bound);
        const int bottom_id = weak.index_of(yt_minimum(n));
        const int top_id = weak.index_of(top);
        for (int id : weak.poset.interval(bottom_id, top_id)) {
            if (weak.tableaux[static_cast<std::size_t>(id)].shape() == lam) {
                ++count;
            }
        }
    } else {
        const YoungTableau bottom = yt_minimum(n);
        for (const auto& t : all_syt(n)) {
            if (t.shape() == lam && chain_leq(bottom, t) && chain_leq(t, top)) {
                ++count;
            }
        }
    }
    return count;
}

YoungKostkaMatrix kostka_matrix(int n) {
    YoungKostkaMatrix m;
    m.order = partitions_of(n);
    m.entries.assign(m.order.size(), std::vector<std::int64_t>(m.order.size(), 0));
    for (std::size_t r = 0; r < m.order.size(); ++r) {
        for (std::size_t c = 0; c < m.order.size(); ++c) {
            m.entries[r][c] = kostka(m.order[r], m.order[c]);
        }
    }
    return m;
}

std::string YoungKostkaMatrix::to_csv() const {
    std::ostringstream out;
    out << "shape";
    for (const auto& v : order) {
        out << ',' << v.str();
    }
    out << '\n';
    for (std::size_t r = 0; r < order.size(); ++r) {
        out << order[r].str();
        for (std::size_t c = 0; c < order.size(); ++c) {
            out << ',' << entries[r][c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace yf
