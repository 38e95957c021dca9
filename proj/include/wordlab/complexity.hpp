#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wordlab/word.hpp"
#include "wordlab/word_core.hpp"

namespace wordlab {

/// C_W(n) for n = 0..N+1; the trailing entry is always 0.
struct ComplexityProfile {
    std::vector<long> values;

    [[nodiscard]] long at(std::size_t n) const { return n < values.size() ? values[n] : 0; }
    friend bool operator==(const ComplexityProfile&, const ComplexityProfile&) = default;
};

/// P_W(n) for n = 0..N+1; the trailing entry is always 0.
struct PalindromeProfile {
    std::vector<long> values;

    [[nodiscard]] long at(std::size_t n) const { return n < values.size() ? values[n] : 0; }
    friend bool operator==(const PalindromeProfile&, const PalindromeProfile&) = default;
};

/// Run lengths of a difference profile shaped 1^r 0^s (-1)^r.
struct TrapezoidRuns {
    std::size_t r = 0;
    std::size_t s = 0;
    friend bool operator==(const TrapezoidRuns&, const TrapezoidRuns&) = default;
};

/// D_W(n) = C_W(n+1) - C_W(n) for n = 0..N-1.
struct DifferenceProfile {
    std::vector<long> values;
    std::optional<TrapezoidRuns> runs;
};

struct StructuralIndices {
    std::size_t r_index = 0;
    std::size_t k_index = 0;
    std::size_t min_period = 0;  // 0 only for ε, where the period is undefined
};

inline ComplexityProfile subword_complexity(std::string_view w) {
    const std::size_t n = w.size();
    ComplexityProfile c;
    c.values.assign(n + 2, 0);
    c.values[0] = 1;
    std::unordered_set<std::string_view> seen;
    for (std::size_t len = 1; len <= n; ++len) {
        seen.clear();
        for (std::size_t i = 0; i + len <= n; ++i) seen.insert(w.substr(i, len));
        c.values[len] = static_cast<long>(seen.size());
    }
    return c;
}

inline PalindromeProfile palindromic_complexity(std::string_view w) {
    PalindromeProfile p;
    p.values.assign(w.size() + 2, 0);
    for (const auto& u : palindromic_factors(w)) ++p.values[u.size()];
    return p;
}

/// Matches values against 1^r 0^s (-1)^r exactly.
inline std::optional<TrapezoidRuns> trapezoid_runs(const std::vector<long>& d) {
    std::size_t i = 0;
    while (i < d.size() && d[i] == 1) ++i;
    const std::size_t r = i;
    while (i < d.size() && d[i] == 0) ++i;
    const std::size_t s = i - r;
    if (d.size() - i != r) return std::nullopt;
    for (; i < d.size(); ++i) {
        if (d[i] != -1) return std::nullopt;
    }
    return TrapezoidRuns{r, s};
}

inline DifferenceProfile difference_profile(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("difference profile undefined for ε");
    const auto c = subword_complexity(w);
    DifferenceProfile d;
    d.values.reserve(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) d.values.push_back(c.values[n + 1] - c.values[n]);
    d.runs = trapezoid_runs(d.values);
    return d;
}

/// Length-n factors u such that ux and uy are factors for two symbols x != y.
inline std::set<Word> right_special_factors(std::string_view w, std::size_t n) {
    if (n > w.size()) throw std::invalid_argument("length exceeds word");
    std::unordered_map<std::string_view, char> first_follower;
    std::unordered_set<std::string_view> special;
    for (std::size_t i = 0; i + n < w.size(); ++i) {
        const auto u = w.substr(i, n);
        const char next = w[i + n];
        auto [it, inserted] = first_follower.try_emplace(u, next);
        if (!inserted && it->second != next) special.insert(u);
    }
    return {special.begin(), special.end()};
}

/// Smallest p with no right special factor of length p.
/// Suffixes of right special factors are right special, so the first gap ends the scan.
inline std::size_t r_index(std::string_view w) {
    std::size_t p = 0;
    while (p < w.size() && !right_special_factors(w, p).empty()) ++p;
    return p;
}

/// Length of the shortest suffix occurring exactly once; 0 for ε.
inline std::size_t k_index(std::string_view w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        if (count_occurrences(w, w.substr(w.size() - k)) == 1) return k;
    }
    return 0;
}

/// Smallest period, from the prefix-function border of the whole word.
inline std::size_t minimal_period(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("period undefined for ε");
    std::vector<std::size_t> fail(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = fail[i - 1];
        while (j > 0 && w[i] != w[j]) j = fail[j - 1];
        if (w[i] == w[j]) ++j;
        fail[i] = j;
    }
    return w.size() - fail.back();
}

inline StructuralIndices structural_indices(std::string_view w) {
    return {r_index(w), k_index(w), w.empty() ? 0 : minimal_period(w)};
}

}  // namespace wordlab
