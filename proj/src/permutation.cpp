#include "yf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace yf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return Permutation{std::move(word)};
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                            "' in permutation \"" + std::string(text) + "\"");
            }
            word.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) {
                next = text.size();
            }
            std::string token(text.substr(pos, next - pos));
            if (token.empty()) {
                throw std::invalid_argument("empty token in permutation");
            }
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument("invalid token \"" + token + "\" in permutation");
            }
            word.push_back(value);
            pos = next + 1;
            if (next == text.size()) {
                break;
            }
        }
    }
    return Permutation{std::move(word)};
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) {
        inv[static_cast<std::size_t>(word_[i]) - 1] = static_cast<int>(i) + 1;
    }
    return Permutation{std::move(inv)};
}

bool Permutation::is_involution() const {
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (word_[static_cast<std::size_t>(word_[i]) - 1] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

std::string Permutation::str() const {
    return word_str(word_);
}

std::string word_str(const std::vector<int>& word) {
    bool digits = word.size() <= 9 &&
                  std::all_of(word.begin(), word.end(), [](int v) { return v >= 1 && v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + word[i]));
        } else {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(word[i]);
        }
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{word});
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<std::pair<int, int>> inv_set(const Permutation& sigma) {
    const auto& w = sigma.word();
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] > w[b]) {
                out.emplace_back(w[a], w[b]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> noninv_set(const Permutation& sigma) {
    const auto& w = sigma.word();
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] < w[b]) {
                out.emplace_back(w[a], w[b]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int inv_count(const Permutation& sigma) {
    const auto& w = sigma.word();
    int count = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] > w[b]) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<Permutation> weak_order_successors(const Permutation& sigma) {
    const auto& w = sigma.word();
    std::vector<Permutation> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] < w[i + 1]) {
            auto next = w;
            std::swap(next[i], next[i + 1]);
            out.push_back(Permutation{std::move(next)});
        }
    }
    return out;
}

}  // namespace yf
