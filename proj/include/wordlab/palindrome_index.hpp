#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Incremental index of distinct palindromic factors (an eertree).
///
/// Two roots: node 0 has length -1 (the imaginary root), node 1 is the empty
/// palindrome. Every further node is one distinct non-empty palindromic factor
/// of the text seen so far. Appending a symbol creates at most one node.
class PalindromeIndex {
public:
    PalindromeIndex() {
        nodes_.push_back(Node{-1, 0, 0});
        nodes_.push_back(Node{0, 0, 0});
    }

    explicit PalindromeIndex(std::string_view w) : PalindromeIndex() {
        text_.reserve(w.size());
        prefix_counts_.reserve(w.size());
        for (char c : w) push_back(c);
    }

    void push_back(char c) {
        text_.push_back(c);
        const std::size_t pos = text_.size() - 1;

        int cur = suffix_extendable(last_, pos);
        if (int child = edge(cur, c); child != 0) {
            last_ = child;
            prefix_counts_.push_back(distinct_count());
            return;
        }

        Node fresh;
        fresh.length = nodes_[cur].length + 2;
        fresh.end = pos + 1;
        if (fresh.length == 1) {
            fresh.link = 1;
        } else {
            int l = suffix_extendable(nodes_[cur].link, pos);
            fresh.link = edge(l, c);
        }
        nodes_.push_back(fresh);
        const int id = static_cast<int>(nodes_.size() - 1);
        nodes_[cur].edges.emplace_back(c, id);
        last_ = id;
        prefix_counts_.push_back(distinct_count());
    }

    /// Number of distinct non-empty palindromic factors.
    [[nodiscard]] std::size_t distinct_count() const noexcept { return nodes_.size() - 2; }

    /// Distinct palindromic factors including the empty word.
    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size() - 1; }

    /// prefix_counts()[i] is distinct_count() after the first i+1 symbols.
    [[nodiscard]] const std::vector<std::size_t>& prefix_counts() const noexcept {
        return prefix_counts_;
    }

    /// Every distinct palindromic factor (including ε) in creation order.
    [[nodiscard]] std::vector<Word> palindromes() const {
        std::vector<Word> out;
        out.reserve(node_count());
        out.emplace_back();
        for (std::size_t i = 2; i < nodes_.size(); ++i) {
            const auto len = static_cast<std::size_t>(nodes_[i].length);
            out.emplace_back(std::string_view(text_).substr(nodes_[i].end - len, len));
        }
        return out;
    }

private:
    struct Node {
        int length = 0;
        int link = 0;
        std::size_t end = 0;  // one past the first occurrence
        std::vector<std::pair<char, int>> edges{};
    };

    [[nodiscard]] int edge(int node, char c) const {
        for (const auto& [sym, to] : nodes_[node].edges) {
            if (sym == c) return to;
        }
        return 0;
    }

    // Walks suffix links from `node` until text[pos - len - 1] == text[pos].
    [[nodiscard]] int suffix_extendable(int node, std::size_t pos) const {
        for (;;) {
            const int len = nodes_[node].length;
            const auto before = static_cast<std::ptrdiff_t>(pos) - len - 1;
            if (before >= 0 && text_[static_cast<std::size_t>(before)] == text_[pos]) return node;
            node = nodes_[node].link;
        }
    }

    std::vector<Node> nodes_;
    std::string text_;
    std::vector<std::size_t> prefix_counts_;
    int last_ = 1;
};

}  // namespace wordlab
