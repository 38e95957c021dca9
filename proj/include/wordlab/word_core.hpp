#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wordlab/palindrome_index.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

inline bool is_palindrome(std::string_view w) noexcept {
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

/// All start positions of u in w, ascending, overlaps included.
inline std::vector<std::size_t> occurrences(std::string_view w, std::string_view u) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    std::vector<std::size_t> out;
    for (auto p = w.find(u); p != std::string_view::npos; p = w.find(u, p + 1)) {
        out.push_back(p);
    }
    return out;
}

inline std::size_t count_occurrences(std::string_view w, std::string_view u) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    std::size_t n = 0;
    for (auto p = w.find(u); p != std::string_view::npos; p = w.find(u, p + 1)) ++n;
    return n;
}

/// Spans w[i .. j+|u|) for each pair of consecutive occurrences i < j of u.
inline std::vector<FactorOccurrence> complete_return_spans(std::string_view w, std::string_view u) {
    const auto occ = occurrences(w, u);
    std::vector<FactorOccurrence> spans;
    for (std::size_t k = 1; k < occ.size(); ++k) {
        spans.push_back({occ[k - 1], occ[k] + u.size() - occ[k - 1]});
    }
    return spans;
}

/// Distinct complete returns to u in w.
inline std::set<Word> complete_returns(std::string_view w, std::string_view u) {
    std::set<Word> out;
    for (const auto& span : complete_return_spans(w, u)) {
        out.emplace(w.substr(span.start, span.length));
    }
    return out;
}

/// Reference enumeration of the distinct palindromic factors of w, ε included.
/// Expands around every centre, so each palindromic occurrence is visited once.
inline std::set<Word> palindromic_factors(std::string_view w) {
    std::unordered_set<std::string_view> seen;
    seen.insert(std::string_view{});
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    for (std::ptrdiff_t centre = 0; centre < 2 * n - 1; ++centre) {
        std::ptrdiff_t lo = centre / 2;
        std::ptrdiff_t hi = lo + centre % 2;
        while (lo >= 0 && hi < n && w[static_cast<std::size_t>(lo)] == w[static_cast<std::size_t>(hi)]) {
            seen.insert(w.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
            --lo;
            ++hi;
        }
    }
    std::set<Word> out;
    for (auto v : seen) out.emplace(v);
    return out;
}

/// Longest proper prefix of w that is also a suffix (ε when |w| <= 1).
inline Word longest_border(std::string_view w) {
    for (std::size_t len = w.empty() ? 0 : w.size() - 1; len > 0; --len) {
        if (w.substr(0, len) == w.substr(w.size() - len)) return Word(w.substr(0, len));
    }
    return Word{};
}

/// Number of distinct non-empty palindromic factors, via PalindromeIndex.
inline std::size_t index_count_palindromes(std::string_view w) {
    return PalindromeIndex(w).distinct_count();
}

}  // namespace wordlab
