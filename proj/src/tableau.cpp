#include "yf/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace yf {

YfTableau::YfTableau(std::vector<YfColumn> columns) : cols_(std::move(columns)) {
    for (const auto& col : cols_) {
        if (col.bottom < 1 || col.top < 0) {
            throw std::invalid_argument("tableau entries must be positive");
        }
    }
}

YfTableau YfTableau::parse(std::string_view text) {
    if (text == "e") {
        return YfTableau{};
    }
    std::vector<YfColumn> cols;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(' ', pos);
        if (next == std::string_view::npos) {
            next = text.size();
        }
        std::string token(text.substr(pos, next - pos));
        if (!token.empty()) {
            YfColumn col;
            std::size_t colon = token.find(':');
            try {
                if (colon == std::string::npos) {
                    std::size_t used = 0;
                    col.bottom = std::stoi(token, &used);
                    if (used != token.size()) {
                        throw std::invalid_argument(token);
                    }
                } else {
                    std::size_t used = 0;
                    col.bottom = std::stoi(token.substr(0, colon), &used);
                    if (used != colon) {
                        throw std::invalid_argument(token);
                    }
                    col.top = std::stoi(token.substr(colon + 1), &used);
                    if (used != token.size() - colon - 1) {
                        throw std::invalid_argument(token);
                    }
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid tableau column \"" + token + "\"");
            }
            cols.push_back(col);
        }
        pos = next + 1;
    }
    if (cols.empty()) {
        throw std::invalid_argument("empty tableau text, use \"e\"");
    }
    return YfTableau{std::move(cols)};
}

int YfTableau::size() const {
    int n = 0;
    for (const auto& col : cols_) {
        n += col.two_boxed() ? 2 : 1;
    }
    return n;
}

Snakeshape YfTableau::shape() const {
    std::vector<std::uint8_t> parts;
    parts.reserve(cols_.size());
    for (const auto& col : cols_) {
        parts.push_back(col.two_boxed() ? 2 : 1);
    }
    return Snakeshape{std::move(parts)};
}

std::string YfTableau::str() const {
    if (cols_.empty()) {
        return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out += std::to_string(cols_[i].bottom);
        if (cols_[i].two_boxed()) {
            out.push_back(':');
            out += std::to_string(cols_[i].top);
        }
    }
    return out;
}

namespace {

// Shared validity scan. Standard mode additionally requires the
// entries to be a permutation of 1..n.
bool valid_filling(const YfTableau& t, bool standard) {
    const auto& cols = t.columns();
    for (const auto& col : cols) {
        if (col.bottom < 1) {
            return false;
        }
        if (col.two_boxed() && col.bottom >= col.top) {
            return false;
        }
    }
    int right_max = 0;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        if (it->topmost() < right_max || (standard && it->topmost() == right_max)) {
            return false;
        }
        right_max = std::max({right_max, it->bottom, it->top});
    }
    if (standard) {
        const int n = t.size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const auto& col : cols) {
            for (int v : {col.bottom, col.top}) {
                if (v == 0) {
                    continue;
                }
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

bool is_standard(const YfTableau& t) {
    return valid_filling(t, true);
}

bool is_semistandard(const YfTableau& t) {
    return valid_filling(t, false);
}

std::vector<int> tableau_content(const YfTableau& t) {
    int max_entry = 0;
    for (const auto& col : t.columns()) {
        max_entry = std::max({max_entry, col.bottom, col.top});
    }
    std::vector<int> content(static_cast<std::size_t>(max_entry), 0);
    for (const auto& col : t.columns()) {
        ++content[static_cast<std::size_t>(col.bottom) - 1];
        if (col.two_boxed()) {
            ++content[static_cast<std::size_t>(col.top) - 1];
        }
    }
    return content;
}

namespace {

// Fills columns right to left. Every topmost entry must beat the
// maximum placed so far (strictly for standard tableaux, weakly for
// semistandard ones), which is exactly the right-dominance rule.
void fill_columns(const std::vector<std::uint8_t>& parts, int col, int right_max, bool strict,
                  std::vector<int>& counts, std::vector<YfColumn>& cols,
                  std::vector<YfTableau>& out) {
    if (col < 0) {
        std::vector<YfColumn> ordered(cols.rbegin(), cols.rend());
        out.emplace_back(std::move(ordered));
        return;
    }
    const int values = static_cast<int>(counts.size());
    auto take = [&](int v) { --counts[static_cast<std::size_t>(v) - 1]; };
    auto give = [&](int v) { ++counts[static_cast<std::size_t>(v) - 1]; };
    if (parts[static_cast<std::size_t>(col)] == 1) {
        for (int v = strict ? right_max + 1 : right_max; v <= values; ++v) {
            if (v < 1 || counts[static_cast<std::size_t>(v) - 1] == 0) {
                continue;
            }
            take(v);
            cols.push_back({v, 0});
            fill_columns(parts, col - 1, std::max(right_max, v), strict, counts, cols, out);
            cols.pop_back();
            give(v);
        }
    } else {
        for (int top = strict ? right_max + 1 : right_max; top <= values; ++top) {
            if (top < 1 || counts[static_cast<std::size_t>(top) - 1] == 0) {
                continue;
            }
            take(top);
            for (int bottom = 1; bottom < top; ++bottom) {
                if (counts[static_cast<std::size_t>(bottom) - 1] == 0) {
                    continue;
                }
                take(bottom);
                cols.push_back({bottom, top});
                fill_columns(parts, col - 1, std::max(right_max, top), strict, counts, cols, out);
                cols.pop_back();
                give(bottom);
            }
            give(top);
        }
    }
}

}  // namespace

std::vector<YfTableau> enumerate_standard(const Snakeshape& u) {
    std::vector<int> counts(static_cast<std::size_t>(u.size()), 1);
    std::vector<YfColumn> cols;
    std::vector<YfTableau> out;
    fill_columns(u.parts(), u.length() - 1, 0, true, counts, cols, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YfTableau> enumerate_semistandard(const Snakeshape& u, const Snakeshape& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("shape and content must have the same size");
    }
    std::vector<int> counts(v.parts().begin(), v.parts().end());
    std::vector<YfColumn> cols;
    std::vector<YfTableau> out;
    fill_columns(u.parts(), u.length() - 1, 0, false, counts, cols, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t hook_count(const Snakeshape& u) {
    const auto& parts = u.parts();
    std::uint64_t product = 1;
    int counter = 0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        ++counter;  // bottom cell; the very first cell contributes a factor 1
        if (*it == 2) {
            if (counter > 1) {
                product *= static_cast<std::uint64_t>(counter);
            }
            ++counter;  // top cell, never a factor
        }
    }
    return product;
}

Permutation min_cano(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("minimal canonical word requires a standard tableau");
    }
    std::vector<int> word;
    const auto& cols = t.columns();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        if (it->two_boxed()) {
            word.push_back(it->top);
        }
        word.push_back(it->bottom);
    }
    return Permutation{std::move(word)};
}

Permutation max_cano(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("maximal canonical word requires a standard tableau");
    }
    std::vector<int> word;
    const auto& cols = t.columns();
    for (const auto& col : cols) {
        if (col.two_boxed()) {
            word.push_back(col.top);
        }
    }
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        word.push_back(it->bottom);
    }
    return Permutation{std::move(word)};
}

Permutation cano_involution(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("canonical involution requires a standard tableau");
    }
    std::vector<int> word(static_cast<std::size_t>(t.size()));
    for (const auto& col : t.columns()) {
        if (col.two_boxed()) {
            word[static_cast<std::size_t>(col.bottom) - 1] = col.top;
            word[static_cast<std::size_t>(col.top) - 1] = col.bottom;
        } else {
            word[static_cast<std::size_t>(col.bottom) - 1] = col.bottom;
        }
    }
    return Permutation{std::move(word)};
}

Poset cano_poset(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("canonical poset requires a standard tableau");
    }
    std::vector<int> elements;
    for (int v = 1; v <= t.size(); ++v) {
        elements.push_back(v);
    }
    std::vector<std::pair<int, int>> covers;
    const auto& cols = t.columns();
    int previous = 0;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        if (previous != 0) {
            covers.emplace_back(previous, it->bottom);
        }
        previous = it->bottom;
    }
    for (const auto& col : cols) {
        if (col.two_boxed()) {
            covers.emplace_back(col.top, col.bottom);
        }
    }
    return Poset{std::move(elements), std::move(covers)};
}

YfTableau row_canonical(const Snakeshape& u) {
    const auto& parts = u.parts();
    std::vector<YfColumn> cols(parts.size());
    int top_label = u.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 2) {
            cols[i].top = top_label--;
        } else {
            cols[i].bottom = top_label--;
        }
    }
    int bottom_label = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 2) {
            cols[i].bottom = bottom_label++;
        }
    }
    return u.empty() ? YfTableau{} : YfTableau{std::move(cols)};
}

YfTableau column_canonical(const Snakeshape& u) {
    const auto& parts = u.parts();
    std::vector<YfColumn> cols(parts.size());
    int label = 1;
    for (std::size_t r = parts.size(); r-- > 0;) {
        cols[r].bottom = label++;
        if (parts[r] == 2) {
            cols[r].top = label++;
        }
    }
    return u.empty() ? YfTableau{} : YfTableau{std::move(cols)};
}

int rho_min(const Snakeshape& u) {
    int count = 0;
    for (auto p : u.parts()) {
        if (p == 2) {
            ++count;
        }
    }
    return count;
}

int rho_max(const Snakeshape& u) {
    int total = 0;
    int twos_left = 0;
    for (auto p : u.parts()) {
        total += twos_left;  // bottom cell
        if (p == 2) {
            total += twos_left + 1;  // top cell
            ++twos_left;
        }
    }
    return total;
}

}  // namespace yf
