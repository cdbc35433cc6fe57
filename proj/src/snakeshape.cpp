#include "yf/snakeshape.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace yf {

Snakeshape::Snakeshape(std::vector<std::uint8_t> parts) : parts_(std::move(parts)) {
    for (auto p : parts_) {
        if (p != 1 && p != 2) {
            throw std::invalid_argument("snakeshape parts must be 1 or 2");
        }
    }
}

Snakeshape Snakeshape::parse(std::string_view text) {
    if (text == "e") {
        return Snakeshape{};
    }
    if (text.empty()) {
        throw std::invalid_argument("empty shape word, use \"e\" for the empty shape");
    }
    std::vector<std::uint8_t> parts;
    parts.reserve(text.size());
    for (char c : text) {
        if (c == '1') {
            parts.push_back(1);
        } else if (c == '2') {
            parts.push_back(2);
        } else {
            throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                        "' in shape word \"" + std::string(text) + "\"");
        }
    }
    return Snakeshape{std::move(parts)};
}

int Snakeshape::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Snakeshape Snakeshape::prepended(std::uint8_t part) const {
    std::vector<std::uint8_t> parts;
    parts.reserve(parts_.size() + 1);
    parts.push_back(part);
    parts.insert(parts.end(), parts_.begin(), parts_.end());
    return Snakeshape{std::move(parts)};
}

Snakeshape Snakeshape::appended(std::uint8_t part) const {
    std::vector<std::uint8_t> parts = parts_;
    parts.push_back(part);
    return Snakeshape{std::move(parts)};
}

std::string Snakeshape::str() const {
    if (parts_.empty()) {
        return "e";
    }
    std::string out;
    out.reserve(parts_.size());
    for (auto p : parts_) {
        out.push_back(static_cast<char>('0' + p));
    }
    return out;
}

std::vector<Snakeshape> shapes_of_size(int n) {
    if (n < 0) {
        throw std::invalid_argument("shape size must be nonnegative");
    }
    if (n == 0) {
        return {Snakeshape{}};
    }
    std::vector<Snakeshape> out;
    if (n >= 2) {
        for (const auto& s : shapes_of_size(n - 2)) {
            out.push_back(s.prepended(2));
        }
    }
    for (const auto& s : shapes_of_size(n - 1)) {
        out.push_back(s.prepended(1));
    }
    return out;
}

std::vector<Snakeshape> covers_up(const Snakeshape& u) {
    const auto& parts = u.parts();
    std::vector<Snakeshape> out;
    out.push_back(u.prepended(1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 1) {
            // first single-boxed column grows to height 2
            auto grown = parts;
            grown[i] = 2;
            out.emplace_back(std::move(grown));
            break;
        }
    }
    for (std::size_t i = 0; i < parts.size() && parts[i] == 2; ++i) {
        // a single-boxed column slipped in after column i+1 of the leading run
        auto inserted = parts;
        inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        out.emplace_back(std::move(inserted));
    }
    std::sort(out.begin(), out.end(), desc_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Snakeshape> covers_down(const Snakeshape& v) {
    const auto& parts = v.parts();
    if (parts.empty()) {
        throw std::invalid_argument("the empty shape covers nothing");
    }
    std::vector<Snakeshape> out;
    if (parts.front() == 1) {
        out.emplace_back(std::vector<std::uint8_t>(parts.begin() + 1, parts.end()));
    }
    for (std::size_t i = 0; i < parts.size() && parts[i] == 2; ++i) {
        auto demoted = parts;
        demoted[i] = 1;
        out.emplace_back(std::move(demoted));
    }
    // a single-boxed column preceded only by 2s is a removable inner corner
    std::size_t run = 0;
    while (run < parts.size() && parts[run] == 2) {
        ++run;
    }
    if (run >= 1 && run < parts.size() && parts[run] == 1) {
        auto erased = parts;
        erased.erase(erased.begin() + static_cast<std::ptrdiff_t>(run));
        out.emplace_back(std::move(erased));
    }
    std::sort(out.begin(), out.end(), desc_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Snakeshape> v_one_minus(const Snakeshape& v) {
    const auto& parts = v.parts();
    std::vector<Snakeshape> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto item = parts;
        if (parts[i] == 1) {
            item.erase(item.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            item[i] = 1;
        }
        out.emplace_back(std::move(item));
    }
    return out;
}

std::uint64_t chain_count(const Snakeshape& u) {
    static thread_local std::map<std::vector<std::uint8_t>, std::uint64_t> memo;
    auto it = memo.find(u.parts());
    if (it != memo.end()) {
        return it->second;
    }
    std::uint64_t count = 0;
    if (u.empty()) {
        count = 1;
    } else {
        for (const auto& w : covers_down(u)) {
            count += chain_count(w);
        }
    }
    memo.emplace(u.parts(), count);
    return count;
}

}  // namespace yf
