#pragma once

// Brute-force reference implementations used only by tests. Each follows the
// textbook definition directly and shares no code with the library paths.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::set<std::string> factors(const std::string& w) {
    std::set<std::string> out{""};
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) out.insert(w.substr(i, j - i));
    }
    return out;
}

inline bool palindrome(const std::string& w) {
    return std::string(w.rbegin(), w.rend()) == w;
}

inline std::set<std::string> palindromes(const std::string& w) {
    std::set<std::string> out;
    for (const auto& f : factors(w)) {
        if (palindrome(f)) out.insert(f);
    }
    return out;
}

inline std::vector<long> complexity(const std::string& w) {
    std::vector<long> c(w.size() + 2, 0);
    for (const auto& f : factors(w)) ++c[f.size()];
    return c;
}

inline std::vector<long> palindromic_complexity(const std::string& w) {
    std::vector<long> p(w.size() + 2, 0);
    for (const auto& f : palindromes(w)) ++p[f.size()];
    return p;
}

inline std::vector<std::size_t> occurrences(const std::string& w, const std::string& u) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        if (w.compare(i, u.size(), u) == 0) out.push_back(i);
    }
    return out;
}

inline std::size_t period(const std::string& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size(); ++i) ok = ok && w[i] == w[i + p];
        if (ok) return p;
    }
    return 0;
}

inline std::string border(const std::string& w) {
    std::string best;
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (w.substr(0, len) == w.substr(w.size() - len)) best = w.substr(0, len);
    }
    return best;
}

inline std::set<std::string> right_special(const std::string& w, std::size_t n) {
    const auto fs = factors(w);
    std::set<char> symbols(w.begin(), w.end());
    std::set<std::string> out;
    for (const auto& u : fs) {
        if (u.size() != n) continue;
        int extensions = 0;
        for (char x : symbols) extensions += fs.count(u + x) ? 1 : 0;
        if (extensions >= 2) out.insert(u);
    }
    return out;
}

inline std::size_t r_index(const std::string& w) {
    for (std::size_t p = 0;; ++p) {
        if (right_special(w, p).empty()) return p;
    }
}

inline std::size_t k_index(const std::string& w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        if (occurrences(w, w.substr(w.size() - k)).size() == 1) return k;
    }
    return 0;
}

/// Any two equal-length factors differ by at most one in each letter count.
inline bool balanced(const std::string& w) {
    const auto fs = factors(w);
    std::set<char> symbols(w.begin(), w.end());
    for (const auto& u : fs) {
        for (const auto& v : fs) {
            if (u.size() != v.size()) continue;
            for (char x : symbols) {
                const auto cu = std::count(u.begin(), u.end(), x);
                const auto cv = std::count(v.begin(), v.end(), x);
                if (cu - cv > 1 || cv - cu > 1) return false;
            }
        }
    }
    return true;
}

/// Every word of length n over symbols, lexicographic.
inline std::vector<std::string> words(const std::string& symbols, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            for (char c : symbols) next.push_back(w + c);
        }
        out = std::move(next);
    }
    return out;
}

inline void for_each_word(const std::string& symbols, std::size_t max_len,
                          const std::function<void(const std::string&)>& fn) {
    for (std::size_t n = 0; n <= max_len; ++n) {
        for (const auto& w : words(symbols, n)) fn(w);
    }
}

}  // namespace oracle
