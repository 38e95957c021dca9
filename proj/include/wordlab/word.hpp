#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordlab {

/// Thrown when a numeric word-count bound would be exceeded.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_symbol_char(char c) {
    return std::isgraph(static_cast<unsigned char>(c)) != 0;
}

/// A finite word: an immutable sequence of printable ASCII symbols.
/// The empty word is the default-constructed value.
class Word {
public:
    Word() = default;

    explicit Word(std::string_view symbols) : symbols_(symbols) {
        for (char c : symbols_) {
            if (!is_symbol_char(c)) {
                throw std::invalid_argument("non-printable symbol in word");
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] char operator[](std::size_t i) const { return symbols_[i]; }

    [[nodiscard]] std::string_view view() const noexcept { return symbols_; }
    [[nodiscard]] const std::string& str() const noexcept { return symbols_; }
    operator std::string_view() const noexcept { return symbols_; }  // NOLINT

    [[nodiscard]] Word factor(std::size_t start, std::size_t length) const {
        Word w;
        w.symbols_ = symbols_.substr(start, length);
        return w;
    }

    [[nodiscard]] Word reversed() const {
        Word w;
        w.symbols_.assign(symbols_.rbegin(), symbols_.rend());
        return w;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string symbols_;
};

inline Word operator""_w(const char* s, std::size_t n) { return Word(std::string_view(s, n)); }

/// Ordered set of distinct printable symbols. The order drives enumeration.
class Alphabet {
public:
    static constexpr std::size_t max_size = 26;

    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.empty() || symbols_.size() > max_size) {
            throw std::invalid_argument("alphabet must have 1..26 symbols");
        }
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (!is_symbol_char(symbols_[i])) {
                throw std::invalid_argument("alphabet symbols must be printable");
            }
            if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
                throw std::invalid_argument("alphabet symbols must be distinct");
            }
        }
    }

    /// Sorted distinct symbols of a nonempty word.
    static Alphabet infer_from(std::string_view w) {
        std::string s(w);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return Alphabet(s);
    }

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] char operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }
    [[nodiscard]] bool contains(char c) const noexcept {
        return symbols_.find(c) != std::string::npos;
    }

    /// Validates membership of every symbol.
    [[nodiscard]] Word word(std::string_view s) const {
        for (char c : s) {
            if (!contains(c)) {
                throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
            }
        }
        return Word(s);
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

/// Position and length of one occurrence of a factor inside a host word.
struct FactorOccurrence {
    std::size_t start = 0;
    std::size_t length = 0;

    [[nodiscard]] std::size_t end() const noexcept { return start + length; }
    friend bool operator==(const FactorOccurrence&, const FactorOccurrence&) = default;
};

/// Distinct symbols of w in byte order.
inline std::string distinct_symbols(std::string_view w) {
    std::string s(w);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace wordlab
