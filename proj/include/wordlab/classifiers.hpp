#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/complexity.hpp"
#include "wordlab/word.hpp"
#include "wordlab/word_core.hpp"

namespace wordlab {

/// Outcome of a pointwise integer identity check over n = 0, 1, ...
struct IdentityCheck {
    struct Failure {
        std::size_t n = 0;
        long lhs = 0;
        long rhs = 0;
    };

    std::optional<Failure> first_failure;

    [[nodiscard]] bool holds() const noexcept { return !first_failure.has_value(); }
    explicit operator bool() const noexcept { return holds(); }
};

inline bool is_rich_by_count(std::string_view w) {
    return index_count_palindromes(w) == w.size();
}

/// Every complete return to every non-empty palindromic factor is a palindrome.
inline bool is_rich_by_returns(std::string_view w) {
    for (const auto& u : palindromic_factors(w)) {
        if (u.empty()) continue;
        for (const auto& span : complete_return_spans(w, u)) {
            if (!is_palindrome(w.substr(span.start, span.length))) return false;
        }
    }
    return true;
}

inline bool is_trapezoidal(std::string_view w) {
    return w.size() == r_index(w) + k_index(w);
}

inline std::optional<TrapezoidRuns> has_trapezoidal_profile(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("trapezoidal profile undefined for ε");
    return difference_profile(w).runs;
}

namespace detail {

inline void require_binary(std::string_view w) {
    if (distinct_symbols(w).size() > 2) throw std::invalid_argument("balance defined for binary words");
}

}  // namespace detail

/// For every length, each symbol's count over the length-n windows spans at most two adjacent values.
inline bool is_balanced(std::string_view w) {
    detail::require_binary(w);
    const std::string symbols = distinct_symbols(w);
    const std::size_t n = w.size();
    for (char x : symbols) {
        for (std::size_t len = 1; len <= n; ++len) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < len; ++i) count += (w[i] == x);
            std::size_t lo = count;
            std::size_t hi = count;
            for (std::size_t i = len; i < n; ++i) {
                count += (w[i] == x);
                count -= (w[i - len] == x);
                lo = std::min(lo, count);
                hi = std::max(hi, count);
            }
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

/// Shortest palindrome U with xUx and yUy both factors (x != y); ties by byte order.
inline std::optional<Word> unbalance_witness(std::string_view w) {
    detail::require_binary(w);
    const std::string symbols = distinct_symbols(w);
    if (symbols.size() < 2) return std::nullopt;
    std::optional<Word> best;
    for (std::size_t len = 0; len + 2 <= w.size(); ++len) {
        for (std::size_t i = 0; i + len + 2 <= w.size(); ++i) {
            if (w[i] != symbols[0] || w[i + len + 1] != symbols[0]) continue;
            const auto inner = w.substr(i + 1, len);
            if (!is_palindrome(inner)) continue;
            if (best && inner >= best->view()) continue;
            const std::string other = symbols[1] + std::string(inner) + symbols[1];
            if (w.find(other) != std::string_view::npos) best = Word(inner);
        }
        if (best) return best;
    }
    return std::nullopt;
}

/// Binary (or unary) and balanced.
inline bool is_finite_sturmian(std::string_view w) {
    return distinct_symbols(w).size() <= 2 && is_balanced(w);
}

inline bool is_sturmian_palindrome(std::string_view w) {
    return is_palindrome(w) && is_finite_sturmian(w);
}

/// P(n) + P(n+1) == C(n+1) - C(n) + 2 for 0 <= n <= N, with C(N+1) = P(N+1) = 0.
inline IdentityCheck check_condition_B(const ComplexityProfile& c, const PalindromeProfile& p,
                                       std::size_t length) {
    IdentityCheck out;
    for (std::size_t n = 0; n <= length; ++n) {
        const long lhs = p.at(n) + p.at(n + 1);
        const long rhs = c.at(n + 1) - c.at(n) + 2;
        if (lhs != rhs && !out.first_failure) out.first_failure = IdentityCheck::Failure{n, lhs, rhs};
    }
    return out;
}

inline IdentityCheck check_condition_B(std::string_view w) {
    return check_condition_B(subword_complexity(w), palindromic_complexity(w), w.size());
}

inline bool condition_B(std::string_view w) { return check_condition_B(w).holds(); }

/// P(n) + P(N-n) == 2 for 0 <= n <= N.
inline IdentityCheck check_condition_B_prime(const PalindromeProfile& p, std::size_t length) {
    IdentityCheck out;
    for (std::size_t n = 0; n <= length; ++n) {
        const long lhs = p.at(n) + p.at(length - n);
        if (lhs != 2 && !out.first_failure) out.first_failure = IdentityCheck::Failure{n, lhs, 2};
    }
    return out;
}

inline IdentityCheck check_condition_B_prime(std::string_view w) {
    return check_condition_B_prime(palindromic_complexity(w), w.size());
}

inline bool condition_B_prime(std::string_view w) { return check_condition_B_prime(w).holds(); }

/// The involution 0 <-> 2, 1 -> 1 on profile values.
struct ThetaInvolution {
    [[nodiscard]] static long apply(long v) {
        if (v < 0 || v > 2) throw std::invalid_argument("profile not over {0,1,2}");
        return 2 - v;
    }
};

/// True iff the sequence equals the θ-image of its reversal.
inline bool theta_palindrome_check(std::span<const long> values) {
    for (long v : values) {
        if (v < 0 || v > 2) throw std::invalid_argument("profile not over {0,1,2}");
    }
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] != ThetaInvolution::apply(values[n - 1 - i])) return false;
    }
    return true;
}

/// Theta check on P(0..N), dropping the trailing N+1 entry.
inline bool theta_palindrome_check(const PalindromeProfile& p) {
    return theta_palindrome_check(std::span<const long>(p.values).first(p.values.size() - 1));
}

struct ClassificationReport {
    bool is_palindrome = false;
    bool is_rich = false;
    bool is_trapezoidal = false;
    std::optional<bool> is_balanced;  // empty for words on three or more symbols
    bool is_finite_sturmian = false;
    bool is_sturmian_palindrome = false;
    bool condition_B = false;
    bool condition_B_prime = false;
    StructuralIndices indices;
    std::size_t palindrome_count = 0;  // distinct palindromic factors including ε
    std::optional<Word> unbalance_witness;
};

inline ClassificationReport classify(std::string_view w) {
    ClassificationReport r;
    const auto c = subword_complexity(w);
    const auto p = palindromic_complexity(w);
    r.is_palindrome = is_palindrome(w);
    r.palindrome_count = index_count_palindromes(w) + 1;
    r.is_rich = r.palindrome_count == w.size() + 1;
    r.indices = structural_indices(w);
    r.is_trapezoidal = w.size() == r.indices.r_index + r.indices.k_index;
    if (distinct_symbols(w).size() <= 2) {
        r.is_balanced = is_balanced(w);
        r.unbalance_witness = unbalance_witness(w);
        r.is_finite_sturmian = *r.is_balanced;
    }
    r.is_sturmian_palindrome = r.is_palindrome && r.is_finite_sturmian;
    r.condition_B = check_condition_B(c, p, w.size()).holds();
    r.condition_B_prime = check_condition_B_prime(p, w.size()).holds();
    return r;
}

}  // namespace wordlab
