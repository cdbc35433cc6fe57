#include "yf/chains.hpp"

#include <algorithm>
#include <stdexcept>

#include "yf/insertion.hpp"

namespace yf {

ShapeChain::ShapeChain() : shapes_{Snakeshape{}} {}

ShapeChain::ShapeChain(std::vector<Snakeshape> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty() || !shapes_.front().empty()) {
        throw std::invalid_argument("a chain must start at the empty shape");
    }
    for (std::size_t k = 0; k + 1 < shapes_.size(); ++k) {
        classify_cover(shapes_[k], shapes_[k + 1]);
    }
}

ShapeChain ShapeChain::parse(std::string_view text) {
    std::vector<Snakeshape> shapes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) {
            next = text.size();
        }
        shapes.push_back(Snakeshape::parse(text.substr(pos, next - pos)));
        pos = next + 1;
        if (next == text.size()) {
            break;
        }
    }
    return ShapeChain{std::move(shapes)};
}

std::string ShapeChain::str() const {
    std::string out;
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
        if (k > 0) {
            out.push_back(',');
        }
        out += shapes_[k].str();
    }
    return out;
}

CoverStep classify_cover(const Snakeshape& from, const Snakeshape& to) {
    if (to.size() != from.size() + 1) {
        throw std::invalid_argument("shape " + to.str() + " does not cover " + from.str());
    }
    const auto& f = from.parts();
    const auto& t = to.parts();
    if (to.length() == from.length()) {
        // one column grew from height 1 to height 2
        auto first_single = std::find(f.begin(), f.end(), std::uint8_t{1});
        if (first_single != f.end()) {
            auto promoted = f;
            promoted[static_cast<std::size_t>(first_single - f.begin())] = 2;
            if (promoted == t) {
                return {CoverKind::PromoteFirstSingle,
                        static_cast<int>(first_single - f.begin()) + 1};
            }
        }
        throw std::invalid_argument("shape " + to.str() + " does not cover " + from.str());
    }
    if (to.length() == from.length() + 1) {
        if (!t.empty() && t.front() == 1 &&
            std::equal(t.begin() + 1, t.end(), f.begin(), f.end())) {
            return {CoverKind::PrependOne, 0};
        }
        // the new single column sits right after the leading run of 2s
        auto first_single = std::find(t.begin(), t.end(), std::uint8_t{1});
        if (first_single != t.end() && first_single != t.begin()) {
            std::size_t i = static_cast<std::size_t>(first_single - t.begin());
            auto erased = t;
            erased.erase(erased.begin() + static_cast<std::ptrdiff_t>(i));
            if (erased == f) {
                return {CoverKind::InsertAfterTwo, static_cast<int>(i)};
            }
        }
    }
    throw std::invalid_argument("shape " + to.str() + " does not cover " + from.str());
}

namespace {

// One conversion step: grow `cols` (a tableau of size k-1) into the
// covering shape, placing the label k.
void conversion_step(std::vector<YfColumn>& cols, const CoverStep& step, int k) {
    switch (step.kind) {
        case CoverKind::PrependOne:
            cols.insert(cols.begin(), {k, 0});
            break;
        case CoverKind::PromoteFirstSingle: {
            // tops of the columns left of the promoted one move right
            for (int j = step.index; j >= 2; --j) {
                cols[static_cast<std::size_t>(j) - 1].top =
                    cols[static_cast<std::size_t>(j) - 2].top;
            }
            cols[0].top = k;
            break;
        }
        case CoverKind::InsertAfterTwo: {
            const int i = step.index;
            cols.insert(cols.begin() + i, {cols[static_cast<std::size_t>(i) - 1].top, 0});
            for (int j = i; j >= 2; --j) {
                cols[static_cast<std::size_t>(j) - 1].top =
                    cols[static_cast<std::size_t>(j) - 2].top;
            }
            cols[0].top = k;
            break;
        }
    }
}

}  // namespace

YfTableau chain_to_tableau(const ShapeChain& chain) {
    std::vector<YfColumn> cols;
    const auto& shapes = chain.shapes();
    for (std::size_t k = 0; k + 1 < shapes.size(); ++k) {
        conversion_step(cols, classify_cover(shapes[k], shapes[k + 1]), static_cast<int>(k) + 1);
    }
    YfTableau t{std::move(cols)};
    if (t.shape() != chain.final_shape() || !is_standard(t)) {
        throw std::logic_error("chain conversion produced an invalid tableau");
    }
    return t;
}

ShapeChain tableau_to_chain(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("chain extraction requires a standard tableau");
    }
    const auto word = min_cano(t).word();
    std::vector<Snakeshape> shapes;
    shapes.reserve(word.size() + 1);
    for (int k = 0; k <= static_cast<int>(word.size()); ++k) {
        std::vector<int> restricted;
        for (int letter : word) {
            if (letter <= k) {
                restricted.push_back(letter);
            }
        }
        shapes.push_back(insert_p(restricted).shape());
    }
    ShapeChain chain{std::move(shapes)};
    if (chain_to_tableau(chain) != t) {
        throw std::logic_error("chain extraction failed the round trip");
    }
    return chain;
}

std::vector<YfTableau> reverse_step_candidates(const YfTableau& t) {
    if (!is_standard(t) || t.empty()) {
        throw std::invalid_argument("reversal requires a nonempty standard tableau");
    }
    const int n = t.size();
    const auto& cols = t.columns();
    std::vector<YfTableau> out;
    for (const auto& prev_shape : covers_down(t.shape())) {
        CoverStep step = classify_cover(prev_shape, t.shape());
        std::vector<YfColumn> cand = cols;
        switch (step.kind) {
            case CoverKind::PrependOne:
                if (cand.front().two_boxed()) {
                    continue;
                }
                cand.erase(cand.begin());
                break;
            case CoverKind::PromoteFirstSingle: {
                if (!cand.front().two_boxed()) {
                    continue;
                }
                for (int j = 2; j <= step.index; ++j) {
                    cand[static_cast<std::size_t>(j) - 2].top =
                        cand[static_cast<std::size_t>(j) - 1].top;
                }
                cand[static_cast<std::size_t>(step.index) - 1].top = 0;
                break;
            }
            case CoverKind::InsertAfterTwo: {
                const int i = step.index;
                if (cand[static_cast<std::size_t>(i)].two_boxed() || !cand.front().two_boxed()) {
                    continue;
                }
                int moved = cand[static_cast<std::size_t>(i)].bottom;
                cand.erase(cand.begin() + i);
                for (int j = 2; j <= i; ++j) {
                    cand[static_cast<std::size_t>(j) - 2].top =
                        cand[static_cast<std::size_t>(j) - 1].top;
                }
                cand[static_cast<std::size_t>(i) - 1].top = moved;
                break;
            }
        }
        YfTableau candidate{std::move(cand)};
        if (candidate.size() != n - 1 || candidate.shape() != prev_shape ||
            !is_standard(candidate)) {
            continue;
        }
        auto replay = candidate.columns();
        conversion_step(replay, step, n);
        if (YfTableau{std::move(replay)} == t) {
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

ShapeChain tableau_to_chain_by_reversal(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("chain extraction requires a standard tableau");
    }
    std::vector<Snakeshape> shapes{t.shape()};
    YfTableau current = t;
    while (!current.empty()) {
        auto candidates = reverse_step_candidates(current);
        if (candidates.size() != 1) {
            throw std::logic_error("conversion reversal is not unique at " + current.str());
        }
        current = std::move(candidates.front());
        shapes.push_back(current.shape());
    }
    std::reverse(shapes.begin(), shapes.end());
    return ShapeChain{std::move(shapes)};
}

YfTableau canonical_labeling(const ShapeChain& chain) {
    std::vector<YfColumn> cols;
    const auto& shapes = chain.shapes();
    for (std::size_t k = 0; k + 1 < shapes.size(); ++k) {
        CoverStep step = classify_cover(shapes[k], shapes[k + 1]);
        const int label = static_cast<int>(k) + 1;
        switch (step.kind) {
            case CoverKind::PrependOne:
                cols.insert(cols.begin(), {label, 0});
                break;
            case CoverKind::PromoteFirstSingle:
                cols[static_cast<std::size_t>(step.index) - 1].top = label;
                break;
            case CoverKind::InsertAfterTwo:
                cols.insert(cols.begin() + step.index, {label, 0});
                break;
        }
    }
    return YfTableau{std::move(cols)};
}

Snakeshape local_rule(const Snakeshape& t, const Snakeshape& x, const Snakeshape& y, int alpha) {
    auto is_edge = [&](const Snakeshape& s) {
        if (s == t) {
            return true;
        }
        auto ups = covers_up(t);
        return std::find(ups.begin(), ups.end(), s) != ups.end();
    };
    if (alpha != 0 && alpha != 1) {
        throw std::invalid_argument("alpha must be 0 or 1");
    }
    if (!is_edge(x) || !is_edge(y)) {
        throw std::invalid_argument("local rule inputs must equal or cover the corner shape");
    }
    if (alpha == 1 && (x != t || y != t)) {
        throw std::invalid_argument("a cross requires both incoming edges degenerate");
    }
    const bool x_grew = x != t;
    const bool y_grew = y != t;
    if (x_grew && y_grew) {
        return t.prepended(2);
    }
    if (x_grew) {
        return x;
    }
    if (y_grew) {
        return y;
    }
    return alpha == 1 ? t.prepended(1) : t;
}

GrowthDiagram::GrowthDiagram(const Permutation& sigma) : sigma_(sigma) {
    const int n = sigma_.size();
    grid_.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<Snakeshape>(static_cast<std::size_t>(n) + 1));
    for (int col = 1; col <= n; ++col) {
        for (int row = 1; row <= n; ++row) {
            const int alpha = sigma_(col) == row ? 1 : 0;
            grid_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] =
                local_rule(grid_[static_cast<std::size_t>(col) - 1][static_cast<std::size_t>(row) - 1],
                           grid_[static_cast<std::size_t>(col) - 1][static_cast<std::size_t>(row)],
                           grid_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row) - 1],
                           alpha);
        }
    }
}

const Snakeshape& GrowthDiagram::at(int col, int row) const {
    if (col < 0 || col > n() || row < 0 || row > n()) {
        throw std::out_of_range("growth diagram index out of range");
    }
    return grid_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
}

ShapeChain GrowthDiagram::top_chain() const {
    std::vector<Snakeshape> shapes;
    for (int col = 0; col <= n(); ++col) {
        shapes.push_back(at(col, n()));
    }
    return ShapeChain{std::move(shapes)};
}

ShapeChain GrowthDiagram::right_chain() const {
    std::vector<Snakeshape> shapes;
    for (int row = 0; row <= n(); ++row) {
        shapes.push_back(at(n(), row));
    }
    return ShapeChain{std::move(shapes)};
}

bool GrowthDiagram::audit() const {
    auto edge_ok = [&](const Snakeshape& a, const Snakeshape& b) {
        if (a == b) {
            return true;
        }
        auto ups = covers_up(a);
        return std::find(ups.begin(), ups.end(), b) != ups.end();
    };
    for (int col = 0; col <= n(); ++col) {
        if (!at(col, 0).empty() || !at(0, col).empty()) {
            return false;
        }
    }
    for (int col = 1; col <= n(); ++col) {
        for (int row = 1; row <= n(); ++row) {
            if (!edge_ok(at(col - 1, row), at(col, row)) ||
                !edge_ok(at(col, row - 1), at(col, row))) {
                return false;
            }
            const int alpha = sigma_(col) == row ? 1 : 0;
            if (at(col, row) !=
                local_rule(at(col - 1, row - 1), at(col - 1, row), at(col, row - 1), alpha)) {
                return false;
            }
        }
    }
    return true;
}

std::pair<ShapeChain, ShapeChain> boundary_chains(const GrowthDiagram& d) {
    return {d.right_chain(), d.top_chain()};
}

YfTableau evacuate_letter(const YfTableau& t, int a0) {
    if (!is_standard(t)) {
        throw std::invalid_argument("evacuation requires a standard tableau");
    }
    auto cols = t.columns();
    std::size_t j = 0;
    while (j < cols.size() && cols[j].topmost() != a0) {
        ++j;
    }
    if (j == cols.size()) {
        throw std::invalid_argument("letter " + std::to_string(a0) +
                                    " is not a topmost entry of " + t.str());
    }
    if (!cols[j].two_boxed()) {
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        return YfTableau{std::move(cols)};
    }
    // hole at the top of column j; pull tops in from the right while
    // they dominate the entry under the hole
    while (true) {
        const int below = cols[j].bottom;
        if (j + 1 == cols.size() || cols[j + 1].topmost() < below) {
            cols[j].top = 0;
            break;
        }
        if (cols[j + 1].two_boxed()) {
            cols[j].top = cols[j + 1].top;
            ++j;
        } else {
            cols[j].top = cols[j + 1].bottom;
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            break;
        }
    }
    return YfTableau{std::move(cols)};
}

ShapeChain evacuation_chain(const YfTableau& t) {
    if (!is_standard(t)) {
        throw std::invalid_argument("evacuation requires a standard tableau");
    }
    std::vector<Snakeshape> shapes(static_cast<std::size_t>(t.size()) + 1);
    YfTableau current = t;
    for (int k = t.size(); k >= 1; --k) {
        shapes[static_cast<std::size_t>(k)] = current.shape();
        current = evacuate_letter(current, k);
    }
    shapes[0] = Snakeshape{};
    return ShapeChain{std::move(shapes)};
}

YfTableau evacuation_tableau(const YfTableau& t) {
    return canonical_labeling(evacuation_chain(t));
}

}  // namespace yf
