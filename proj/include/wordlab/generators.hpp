#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Lexicographic enumeration of all words of one length over an alphabet.
class AllWords {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using pointer = const Word*;
        using reference = const Word&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            // odometer increment, rightmost position fastest
            std::size_t i = digits_.size();
            while (i > 0) {
                --i;
                if (++digits_[i] < alphabet_->size()) {
                    rebuild();
                    return *this;
                }
                digits_[i] = 0;
            }
            done_ = true;
            return *this;
        }

        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class AllWords;

        iterator(const Alphabet* alphabet, std::size_t length)
            : alphabet_(alphabet), digits_(length, 0) {
            rebuild();
        }

        void rebuild() {
            std::string s(digits_.size(), '\0');
            for (std::size_t i = 0; i < digits_.size(); ++i) s[i] = (*alphabet_)[digits_[i]];
            current_ = Word(s);
        }

        const Alphabet* alphabet_ = nullptr;
        std::vector<std::size_t> digits_;
        Word current_;
        bool done_ = false;
    };

    AllWords(Alphabet alphabet, std::size_t length) : alphabet_(std::move(alphabet)), length_(length) {}

    [[nodiscard]] iterator begin() const { return iterator(&alphabet_, length_); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    Alphabet alphabet_;
    std::size_t length_;
};

inline AllWords all_words(const Alphabet& alphabet, std::size_t length) { return {alphabet, length}; }

/// The index-th word of the given length in lexicographic order (base-|A| digits).
inline Word word_at(const Alphabet& alphabet, std::size_t length, std::uint64_t index) {
    std::string s(length, alphabet[0]);
    for (std::size_t i = length; i > 0; --i) {
        s[i - 1] = alphabet[index % alphabet.size()];
        index /= alphabet.size();
    }
    return Word(s);
}

struct ChristoffelParams {
    std::uint64_t p = 1;
    std::uint64_t q = 1;

    void validate() const {
        if (p == 0 || q == 0 || std::gcd(p, q) != 1) {
            throw std::invalid_argument("requires coprime parameters");
        }
    }
};

/// Lower Christoffel word of slope p/(p+q): q letters a and p letters b.
inline Word lower_christoffel(const ChristoffelParams& params) {
    params.validate();
    const std::uint64_t n = params.p + params.q;
    std::string s;
    s.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const bool step = ((i + 1) * params.p) / n != (i * params.p) / n;
        s.push_back(step ? 'b' : 'a');
    }
    return Word(s);
}

/// The lower Christoffel word without its first and last letters.
inline Word central_word(const ChristoffelParams& params) {
    const Word c = lower_christoffel(params);
    return c.factor(1, c.size() - 2);
}

/// All factors of length <= max_factor_len of the periodic words c^ω,
/// c ranging over lower Christoffel words with p + q <= max_denominator.
inline std::set<Word> sturmian_corpus(std::size_t max_denominator, std::size_t max_factor_len) {
    std::set<Word> out;
    out.emplace();
    for (std::uint64_t total = 2; total <= max_denominator; ++total) {
        for (std::uint64_t p = 1; p < total; ++p) {
            const std::uint64_t q = total - p;
            if (std::gcd(p, q) != 1) continue;
            const std::string period = lower_christoffel({p, q}).str();
            std::string text;
            while (text.size() < period.size() + max_factor_len) text += period;
            for (std::size_t start = 0; start < period.size(); ++start) {
                for (std::size_t len = 1; len <= max_factor_len; ++len) {
                    out.emplace(std::string_view(text).substr(start, len));
                }
            }
        }
    }
    return out;
}

/// Uniform random words from a seeded mt19937_64.
inline std::vector<Word> random_words(const Alphabet& alphabet, std::size_t length, std::size_t count,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::vector<Word> out;
    out.reserve(count);
    std::string s(length, '\0');
    for (std::size_t k = 0; k < count; ++k) {
        for (auto& c : s) c = alphabet[pick(rng)];
        out.emplace_back(s);
    }
    return out;
}

}  // namespace wordlab
