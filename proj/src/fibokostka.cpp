#include "yf/fibokostka.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace yf {

std::int64_t KostkaMatrix::at(const Snakeshape& u, const Snakeshape& v) const {
    auto find = [&](const Snakeshape& s) {
        auto it = std::find(order.begin(), order.end(), s);
        if (it == order.end()) {
            throw std::invalid_argument("shape " + s.str() + " is not indexed by this matrix");
        }
        return static_cast<std::size_t>(it - order.begin());
    };
    return entries[find(u)][find(v)];
}

std::string KostkaMatrix::to_csv() const {
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

namespace {

using ShapePair = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;

std::int64_t n_number_memo(const Snakeshape& u, const Snakeshape& v,
                           std::map<ShapePair, std::int64_t>& memo) {
    if (u.empty()) {
        return 1;  // sizes match, so v is empty too
    }
    ShapePair key{u.parts(), v.parts()};
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    std::int64_t result = 0;
    const Snakeshape u_rest{std::vector<std::uint8_t>(u.parts().begin() + 1, u.parts().end())};
    const Snakeshape v_front{
        std::vector<std::uint8_t>(v.parts().begin(), v.parts().end() - 1)};
    const bool v_ends_one = v.parts().back() == 1;
    if (u.parts().front() == 1) {
        result = v_ends_one ? n_number_memo(u_rest, v_front, memo)
                            : n_number_memo(u_rest, v_front.appended(1), memo);
    } else {
        for (const auto& w : v_one_minus(v_front)) {
            result += v_ends_one ? n_number_memo(u_rest, w, memo)
                                 : n_number_memo(u_rest, w.appended(1), memo);
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

std::int64_t n_number(const Snakeshape& u, const Snakeshape& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("shape and content sizes differ");
    }
    std::map<ShapePair, std::int64_t> memo;
    return n_number_memo(u, v, memo);
}

KostkaMatrix n_matrix(int n) {
    KostkaMatrix m;
    m.order = shapes_of_size(n);
    std::map<ShapePair, std::int64_t> memo;
    m.entries.assign(m.order.size(), std::vector<std::int64_t>(m.order.size(), 0));
    for (std::size_t r = 0; r < m.order.size(); ++r) {
        for (std::size_t c = 0; c < m.order.size(); ++c) {
            m.entries[r][c] = n_number_memo(m.order[r], m.order[c], memo);
        }
    }
    return m;
}

std::int64_t zero_pair_count(int n) {
    if (n < 2) {
        throw std::invalid_argument("zero pair count needs n >= 2");
    }
    auto m = n_matrix(n);
    std::int64_t zeros = 0;
    for (const auto& row : m.entries) {
        zeros += std::count(row.begin(), row.end(), std::int64_t{0});
    }
    return zeros;
}

namespace {

std::int64_t okada_memo(const Snakeshape& u, const Snakeshape& v,
                        std::map<ShapePair, std::int64_t>& memo) {
    if (u.empty()) {
        return 1;
    }
    if (u.parts().front() == 1 && v.parts().front() == 2) {
        return 0;
    }
    ShapePair key{u.parts(), v.parts()};
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    const Snakeshape u_rest{std::vector<std::uint8_t>(u.parts().begin() + 1, u.parts().end())};
    const Snakeshape v_rest{std::vector<std::uint8_t>(v.parts().begin() + 1, v.parts().end())};
    std::int64_t result = 0;
    if (u.parts().front() == v.parts().front()) {
        result = okada_memo(u_rest, v_rest, memo);
    } else {
        // u starts with 2, v with 1
        for (const auto& w : covers_up(u_rest)) {
            result += okada_memo(w, v_rest, memo);
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

std::int64_t okada_k(const Snakeshape& u, const Snakeshape& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("shape sizes differ");
    }
    std::map<ShapePair, std::int64_t> memo;
    return okada_memo(u, v, memo);
}

std::int64_t okada_k_by_interval(const Snakeshape& u, const Snakeshape& v,
                                 const YftWeakOrder& order) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("shape sizes differ");
    }
    auto maxima = order.poset.maximal_elements();
    if (maxima.size() != 1) {
        throw std::logic_error("weak order has no unique maximum");
    }
    const int top = maxima.front();
    const int bottom = order.index_of(row_canonical(v));
    std::int64_t count = 0;
    for (int id : order.poset.interval(bottom, top)) {
        if (order.tableaux[static_cast<std::size_t>(id)].shape() == u) {
            ++count;
        }
    }
    return count;
}

std::int64_t okada_k_by_interval(const Snakeshape& u, const Snakeshape& v, int bound) {
    return okada_k_by_interval(u, v, weak_order_yft(u.size(), bound));
}

KostkaMatrix okada_matrix(int n, OkadaMethod method, int bound) {
    KostkaMatrix m;
    m.order = shapes_of_size(n);
    m.entries.assign(m.order.size(), std::vector<std::int64_t>(m.order.size(), 0));
    if (method == OkadaMethod::Recurrence) {
        std::map<ShapePair, std::int64_t> memo;
        for (std::size_t r = 0; r < m.order.size(); ++r) {
            for (std::size_t c = 0; c < m.order.size(); ++c) {
                m.entries[r][c] = okada_memo(m.order[r], m.order[c], memo);
            }
        }
    } else {
        auto order = weak_order_yft(n, bound);
        for (std::size_t r = 0; r < m.order.size(); ++r) {
            for (std::size_t c = 0; c < m.order.size(); ++c) {
                m.entries[r][c] = okada_k_by_interval(m.order[r], m.order[c], order);
            }
        }
    }
    return m;
}

}  // namespace yf
