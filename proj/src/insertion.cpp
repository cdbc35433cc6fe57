#include "yf/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace yf {

Matching match_letters(const std::vector<int>& word) {
    Matching m;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1 || !m.position.emplace(word[i], static_cast<int>(i) + 1).second) {
            throw std::invalid_argument("word letters must be positive and distinct");
        }
    }
    std::vector<bool> matched(word.size(), false);
    for (std::size_t i = word.size(); i-- > 0;) {
        if (matched[i]) {
            continue;
        }
        int best = -1;
        for (std::size_t j = 0; j < i; ++j) {
            if (!matched[j] && word[j] > word[i] && (best == -1 || word[j] > word[best])) {
                best = static_cast<int>(j);
            }
        }
        if (best >= 0) {
            matched[i] = true;
            matched[static_cast<std::size_t>(best)] = true;
            m.pairs.emplace_back(word[i], word[static_cast<std::size_t>(best)]);
        } else {
            m.singles.push_back(word[i]);
        }
    }
    std::sort(m.pairs.begin(), m.pairs.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    std::sort(m.singles.begin(), m.singles.end(), std::greater<>());
    return m;
}

Matching match_letters(const Permutation& sigma) {
    return match_letters(sigma.word());
}

namespace {

// Column layout shared by P and Q: merge pair columns and single
// columns by strictly decreasing topmost letter of P.
struct Layout {
    // each entry: (topmost letter of P's column, pair index or -1, single letter)
    struct Column {
        int key;
        int pair_index;  // -1 for singles
        int single_letter;
    };
    std::vector<Column> columns;
};

Layout column_layout(const Matching& m) {
    Layout layout;
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        layout.columns.push_back({m.pairs[k].second, static_cast<int>(k), 0});
    }
    for (int s : m.singles) {
        layout.columns.push_back({s, -1, s});
    }
    std::sort(layout.columns.begin(), layout.columns.end(),
              [](const auto& a, const auto& b) { return a.key > b.key; });
    return layout;
}

}  // namespace

YfTableau insert_p(const std::vector<int>& word) {
    if (word.empty()) {
        return YfTableau{};
    }
    Matching m = match_letters(word);
    Layout layout = column_layout(m);
    std::vector<YfColumn> cols;
    cols.reserve(layout.columns.size());
    for (const auto& col : layout.columns) {
        if (col.pair_index >= 0) {
            const auto& [a, b] = m.pairs[static_cast<std::size_t>(col.pair_index)];
            cols.push_back({a, b});
        } else {
            cols.push_back({col.single_letter, 0});
        }
    }
    return YfTableau{std::move(cols)};
}

YfTableau insert_p(const Permutation& sigma) {
    return insert_p(sigma.word());
}

std::pair<YfTableau, YfTableau> insert_pq(const std::vector<int>& word) {
    if (word.empty()) {
        return {YfTableau{}, YfTableau{}};
    }
    Matching m = match_letters(word);
    Layout layout = column_layout(m);
    std::vector<YfColumn> p_cols;
    std::vector<YfColumn> q_cols;
    for (const auto& col : layout.columns) {
        if (col.pair_index >= 0) {
            const auto& [a, b] = m.pairs[static_cast<std::size_t>(col.pair_index)];
            p_cols.push_back({a, b});
            q_cols.push_back({m.position.at(b), m.position.at(a)});
        } else {
            p_cols.push_back({col.single_letter, 0});
            q_cols.push_back({m.position.at(col.single_letter), 0});
        }
    }
    return {YfTableau{std::move(p_cols)}, YfTableau{std::move(q_cols)}};
}

std::pair<YfTableau, YfTableau> insert_pq(const Permutation& sigma) {
    return insert_pq(sigma.word());
}

std::vector<Permutation> fibo_class(const YfTableau& t, int bound) {
    if (!is_standard(t)) {
        throw std::invalid_argument("class enumeration requires a standard tableau");
    }
    if (t.size() > bound) {
        throw std::invalid_argument("tableau too large for class enumeration (bound " +
                                    std::to_string(bound) + ")");
    }
    std::vector<Permutation> out;
    for (auto& extension : cano_poset(t).linear_extensions()) {
        out.push_back(Permutation{std::move(extension)});
    }
    return out;
}

}  // namespace yf
