#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wordlab/classifiers.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/word.hpp"
#include "wordlab/word_core.hpp"

namespace wordlab {

enum class Claim {
    prop1,
    prop2,
    thm_fgc,
    thm_main,
    pal_bound,
    period_ineq,
    binary_trap,
    profile_equiv,
};

inline constexpr std::array<std::pair<Claim, std::string_view>, 8> claim_names{{
    {Claim::prop1, "PROP1"},
    {Claim::prop2, "PROP2"},
    {Claim::thm_fgc, "THM_FGC"},
    {Claim::thm_main, "THM_MAIN"},
    {Claim::pal_bound, "PAL_BOUND"},
    {Claim::period_ineq, "PERIOD_INEQ"},
    {Claim::binary_trap, "BINARY_TRAP"},
    {Claim::profile_equiv, "PROFILE_EQUIV"},
}};

inline std::string_view claim_name(Claim c) {
    for (const auto& [claim, name] : claim_names) {
        if (claim == c) return name;
    }
    return "?";
}

inline Claim parse_claim(std::string_view name) {
    for (const auto& [claim, n] : claim_names) {
        if (n == name) return claim;
    }
    throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

struct Counterexample {
    Word word;
    std::string diagnostic;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    Claim claim = Claim::prop1;
    Alphabet alphabet{"ab"};
    std::size_t max_len = 0;
    std::uint64_t words_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::nanoseconds elapsed{0};

    [[nodiscard]] bool verified() const noexcept { return counterexamples.empty(); }
};

struct RunOptions {
    static constexpr std::uint64_t default_budget = std::uint64_t{1} << 26;

    std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    bool sequential = false;
    std::uint64_t budget = default_budget;
};

/// Σ_{n=0..max_len} |A|^n, refusing anything above the budget.
inline std::uint64_t word_space_size(const Alphabet& alphabet, std::size_t max_len, std::uint64_t budget) {
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t n = 0; n <= max_len; ++n) {
        total += layer;
        if (total > budget) {
            throw budget_exceeded("budget exceeded: more than " + std::to_string(budget) + " words");
        }
        if (n < max_len) {
            if (layer > budget) throw budget_exceeded("budget exceeded");
            layer *= alphabet.size();
        }
    }
    return total;
}

/// A contiguous lexicographic range of words of one length: all words sharing a fixed prefix.
struct WordBlock {
    std::size_t length = 0;
    std::uint64_t first = 0;
    std::uint64_t count = 0;
};

/// Splits lengths 0..max_len into prefix blocks. The split depends only on
/// the alphabet and max_len, never on the worker count.
inline std::vector<WordBlock> partition_word_space(const Alphabet& alphabet, std::size_t max_len) {
    constexpr std::uint64_t target_block = 1024;
    std::vector<WordBlock> blocks;
    std::uint64_t layer = 1;
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::uint64_t block = layer;
        std::size_t suffix = n;
        // block size = |A|^(n-k) for the prefix length k
        while (block > target_block && suffix > 0) {
            block /= alphabet.size();
            --suffix;
        }
        for (std::uint64_t first = 0; first < layer; first += block) {
            blocks.push_back({n, first, block});
        }
        layer *= alphabet.size();
    }
    return blocks;
}

/// Maps every block through fn and returns the results in block order.
template <class Fn>
auto map_blocks(const std::vector<WordBlock>& blocks, const RunOptions& options, Fn fn)
    -> std::vector<decltype(fn(blocks.front()))> {
    using Result = decltype(fn(blocks.front()));
    std::vector<Result> results(blocks.size());
    const std::size_t workers = options.sequential ? 1 : std::max<std::size_t>(1, options.workers);
    if (workers == 1 || blocks.size() < 2) {
        for (std::size_t i = 0; i < blocks.size(); ++i) results[i] = fn(blocks[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < blocks.size(); i = next++) results[i] = fn(blocks[i]);
        });
    }
    pool.clear();
    return results;
}

namespace detail {

using Diagnostic = std::optional<std::string>;

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline Diagnostic check_prop1(std::string_view w) {
    const bool by_count = is_rich_by_count(w);
    const bool by_returns = is_rich_by_returns(w);
    if (by_count == by_returns) return std::nullopt;
    std::ostringstream os;
    os << "rich_by_count=" << yes_no(by_count) << " rich_by_returns=" << yes_no(by_returns)
       << " palindromic_factors=" << index_count_palindromes(w) + 1;
    return os.str();
}

inline Diagnostic check_prop2(std::string_view w) {
    if (!is_trapezoidal(w) || is_rich_by_count(w)) return std::nullopt;
    std::ostringstream os;
    os << "trapezoidal but not rich: R=" << r_index(w) << " K=" << k_index(w)
       << " palindromic_factors=" << index_count_palindromes(w) + 1;
    return os.str();
}

inline std::string describe(const IdentityCheck& check, std::string_view lhs_name, std::string_view rhs_name) {
    if (check.holds()) return "identity holds for every n";
    const auto& f = *check.first_failure;
    std::ostringstream os;
    os << "first failing n=" << f.n << ": " << lhs_name << "=" << f.lhs << " " << rhs_name << "=" << f.rhs;
    return os.str();
}

inline Diagnostic check_thm_fgc(std::string_view w) {
    const bool rich_palindrome = is_palindrome(w) && is_rich_by_count(w);
    const auto b = check_condition_B(w);
    if (rich_palindrome == b.holds()) return std::nullopt;
    return std::string("A=") + yes_no(rich_palindrome) + " B=" + yes_no(b.holds()) + "; " +
           describe(b, "P(n)+P(n+1)", "C(n+1)-C(n)+2");
}

inline Diagnostic check_thm_main(std::string_view w) {
    const bool a = is_sturmian_palindrome(w);
    const auto b = check_condition_B_prime(w);
    const bool c = is_palindrome(w) && is_trapezoidal(w);
    if (a == b.holds() && b.holds() == c) return std::nullopt;
    return std::string("A'=") + yes_no(a) + " B'=" + yes_no(b.holds()) + " C'=" + yes_no(c) + "; " +
           describe(b, "P(n)+P(N-n)", "expected");
}

inline Diagnostic check_pal_bound(std::string_view w) {
    const std::size_t count = palindromic_factors(w).size();
    const bool rich = is_rich_by_count(w);
    if (count <= w.size() + 1 && (count == w.size() + 1) == rich) return std::nullopt;
    std::ostringstream os;
    os << "palindromic_factors=" << count << " bound=" << w.size() + 1 << " rich=" << yes_no(rich);
    return os.str();
}

inline std::size_t period_by_scan(std::string_view w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w.substr(p) == w.substr(0, w.size() - p)) return p;
    }
    return w.size();
}

inline Diagnostic check_period_ineq(std::string_view w) {
    if (w.empty()) return std::nullopt;
    const std::size_t pi = minimal_period(w);
    const std::size_t r = r_index(w);
    const std::size_t border = longest_border(w).size();
    const std::size_t scanned = period_by_scan(w);
    if (pi >= r + 1 && pi + border == w.size() && pi == scanned) return std::nullopt;
    std::ostringstream os;
    os << "pi=" << pi << " R+1=" << r + 1 << " N-|border|=" << w.size() - border << " scanned=" << scanned;
    return os.str();
}

inline Diagnostic check_binary_trap(std::string_view w) {
    const auto symbols = distinct_symbols(w);
    if (symbols.size() < 3 || !is_trapezoidal(w)) return std::nullopt;
    std::ostringstream os;
    os << "trapezoidal on " << symbols.size() << " symbols: R=" << r_index(w) << " K=" << k_index(w);
    return os.str();
}

inline Diagnostic check_profile_equiv(std::string_view w) {
    if (w.empty()) return std::nullopt;
    const bool by_index = is_trapezoidal(w);
    const auto d = difference_profile(w);
    if (by_index == d.runs.has_value()) return std::nullopt;
    std::ostringstream os;
    os << "R+K trapezoidal=" << yes_no(by_index) << " profile trapezoidal=" << yes_no(d.runs.has_value())
       << " D=[";
    for (std::size_t i = 0; i < d.values.size(); ++i) os << (i ? "," : "") << d.values[i];
    os << "]";
    return os.str();
}

}  // namespace detail

/// The per-word check behind a claim; empty result means the word complies.
inline std::function<std::optional<std::string>(std::string_view)> claim_checker(Claim claim) {
    switch (claim) {
        case Claim::prop1: return detail::check_prop1;
        case Claim::prop2: return detail::check_prop2;
        case Claim::thm_fgc: return detail::check_thm_fgc;
        case Claim::thm_main: return detail::check_thm_main;
        case Claim::pal_bound: return detail::check_pal_bound;
        case Claim::period_ineq: return detail::check_period_ineq;
        case Claim::binary_trap: return detail::check_binary_trap;
        case Claim::profile_equiv: return detail::check_profile_equiv;
    }
    throw std::invalid_argument("unknown claim");
}

/// Runs check over every word of length 0..max_len and collects the words it
/// flags, in (length, lexicographic) order.
template <class Check>
std::vector<Counterexample> find_counterexamples(const Alphabet& alphabet, std::size_t max_len,
                                                 const RunOptions& options, Check check) {
    word_space_size(alphabet, max_len, options.budget);
    const auto partial = map_blocks(partition_word_space(alphabet, max_len), options, [&](const WordBlock& b) {
        std::vector<Counterexample> found;
        for (std::uint64_t i = 0; i < b.count; ++i) {
            Word w = word_at(alphabet, b.length, b.first + i);
            if (auto diag = check(w.view())) found.push_back({std::move(w), std::move(*diag)});
        }
        return found;
    });
    std::vector<Counterexample> out;
    for (const auto& block : partial) out.insert(out.end(), block.begin(), block.end());
    return out;
}

inline VerificationReport verify_claim(Claim claim, const Alphabet& alphabet, std::size_t max_len,
                                       const RunOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{claim, alphabet, max_len, word_space_size(alphabet, max_len, options.budget), {}, {}};
    report.counterexamples = find_counterexamples(alphabet, max_len, options, claim_checker(claim));
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// Conjunction of possibly negated word-class atoms, e.g. "rich&!trapezoidal".
class ClassPredicate {
public:
    enum class Atom {
        palindrome,
        rich,
        trapezoidal,
        trapezoidal_profile,
        balanced,
        finite_sturmian,
        sturmian_palindrome,
        condition_B,
        condition_B_prime,
    };

    static ClassPredicate parse(std::string_view text) {
        ClassPredicate pred;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find_first_of("&,", pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view term = text.substr(pos, end - pos);
            bool negated = false;
            if (!term.empty() && (term.front() == '!' || term.front() == '~')) {
                negated = true;
                term.remove_prefix(1);
            }
            pred.terms_.push_back({parse_atom(term), negated});
            pos = end + 1;
        }
        return pred;
    }

    [[nodiscard]] bool operator()(std::string_view w) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return evaluate(t.atom, w) != t.negated; });
    }

private:
    struct Term {
        Atom atom;
        bool negated;
    };

    static Atom parse_atom(std::string_view name) {
        static constexpr std::array<std::pair<std::string_view, Atom>, 13> names{{
            {"palindrome", Atom::palindrome},
            {"rich", Atom::rich},
            {"trapezoidal", Atom::trapezoidal},
            {"trapezoidal_profile", Atom::trapezoidal_profile},
            {"balanced", Atom::balanced},
            {"finite_sturmian", Atom::finite_sturmian},
            {"sturmian", Atom::finite_sturmian},
            {"sturmian_palindrome", Atom::sturmian_palindrome},
            {"condition_B", Atom::condition_B},
            {"B", Atom::condition_B},
            {"condition_B_prime", Atom::condition_B_prime},
            {"B_prime", Atom::condition_B_prime},
            {"Bprime", Atom::condition_B_prime},
        }};
        for (const auto& [n, atom] : names) {
            if (n == name) return atom;
        }
        throw std::invalid_argument("unknown predicate '" + std::string(name) + "'");
    }

    static bool evaluate(Atom atom, std::string_view w) {
        switch (atom) {
            case Atom::palindrome: return is_palindrome(w);
            case Atom::rich: return is_rich_by_count(w);
            case Atom::trapezoidal: return is_trapezoidal(w);
            case Atom::trapezoidal_profile: return !w.empty() && has_trapezoidal_profile(w).has_value();
            // words on three or more symbols fall outside the balanced class
            case Atom::balanced: return distinct_symbols(w).size() <= 2 && is_balanced(w);
            case Atom::finite_sturmian: return is_finite_sturmian(w);
            case Atom::sturmian_palindrome: return is_sturmian_palindrome(w);
            case Atom::condition_B: return condition_B(w);
            case Atom::condition_B_prime: return condition_B_prime(w);
        }
        return false;
    }

    std::vector<Term> terms_;
};

/// All words of exactly `length` satisfying the predicate, lexicographic.
inline std::vector<Word> find_class_members(std::string_view predicate, const Alphabet& alphabet,
                                            std::size_t length) {
    const auto pred = ClassPredicate::parse(predicate);
    std::vector<Word> out;
    for (const auto& w : all_words(alphabet, length)) {
        if (pred(w)) out.push_back(w);
    }
    return out;
}

struct CensusRow {
    std::size_t length = 0;
    std::uint64_t total = 0;
    std::uint64_t rich = 0;
    std::uint64_t trapezoidal = 0;
    std::uint64_t balanced = 0;
    std::uint64_t sturmian_palindrome = 0;
    std::uint64_t condition_B = 0;
    std::uint64_t condition_B_prime = 0;
    std::uint64_t palindromes = 0;
    std::uint64_t trapezoidal_palindromes = 0;

    CensusRow& operator+=(const CensusRow& o) {
        total += o.total;
        rich += o.rich;
        trapezoidal += o.trapezoidal;
        balanced += o.balanced;
        sturmian_palindrome += o.sturmian_palindrome;
        condition_B += o.condition_B;
        condition_B_prime += o.condition_B_prime;
        palindromes += o.palindromes;
        trapezoidal_palindromes += o.trapezoidal_palindromes;
        return *this;
    }

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// One row per length 1..max_len.
struct CensusTable {
    Alphabet alphabet{"ab"};
    std::size_t max_len = 0;
    std::vector<CensusRow> rows;

    template <class Field>
    [[nodiscard]] std::vector<std::uint64_t> column(Field field) const {
        std::vector<std::uint64_t> out;
        for (const auto& row : rows) out.push_back(row.*field);
        return out;
    }
};

inline CensusTable census(const Alphabet& alphabet, std::size_t max_len, const RunOptions& options = {}) {
    word_space_size(alphabet, max_len, options.budget);
    CensusTable table{alphabet, max_len, {}};
    for (std::size_t n = 1; n <= max_len; ++n) table.rows.push_back(CensusRow{n});
    const auto partial = map_blocks(partition_word_space(alphabet, max_len), options, [&](const WordBlock& b) {
        CensusRow row{b.length};
        for (std::uint64_t i = 0; i < b.count; ++i) {
            const Word w = word_at(alphabet, b.length, b.first + i);
            const auto r = classify(w);
            ++row.total;
            row.rich += r.is_rich;
            row.trapezoidal += r.is_trapezoidal;
            row.balanced += r.is_balanced.value_or(false);
            row.sturmian_palindrome += r.is_sturmian_palindrome;
            row.condition_B += r.condition_B;
            row.condition_B_prime += r.condition_B_prime;
            row.palindromes += r.is_palindrome;
            row.trapezoidal_palindromes += r.is_palindrome && r.is_trapezoidal;
        }
        return row;
    });
    for (const auto& row : partial) {
        if (row.length >= 1) table.rows[row.length - 1] += row;
    }
    return table;
}

}  // namespace wordlab
