#pragma once

// Minimal forbidden words of the k-differentiable languages C^k and their
// tries.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cinf/derivative.hpp"
#include "cinf/errors.hpp"
#include "cinf/word.hpp"

namespace cinf {

/// MF(C^k), stratified by height. Words are kept in shortlex order.
struct MfCatalog {
    std::size_t k = 0;
    std::vector<Word> words;
    std::map<std::size_t, std::vector<Word>> by_height;
};

/// MF(C^1) = {111, 222}; each further stratum is made of the two shortest
/// primitives of every word of the previous one.
inline MfCatalog mf_set(std::size_t k) {
    MfCatalog cat;
    cat.k = k;
    if (k == 0) return cat;
    std::vector<Word> stratum{"111"_w, "222"_w};
    for (std::size_t h = 1; h <= k; ++h) {
        if (h > 1) {
            std::vector<Word> next;
            next.reserve(2 * stratum.size());
            for (const Word& w : stratum) {
                auto ps = detail::synthesize_primitives(w, /*shortest_only=*/true, false);
                next.insert(next.end(), ps.begin(), ps.end());
            }
            normalize(next);
            stratum = std::move(next);
        }
        cat.by_height[h] = stratum;
        cat.words.insert(cat.words.end(), stratum.begin(), stratum.end());
    }
    normalize(cat.words);
    return cat;
}

/// Whether w is a minimal forbidden word of C-infinity.
///
/// Two characterizations are evaluated: the definition (w is not
/// C-infinity but both maximal proper factors are), and the test that
/// flipping both end letters yields a minimal C-infinity word with root 1.
/// Throws InternalInconsistency if they disagree.
inline bool is_minimal_forbidden(const Word& w) {
    if (w.size() < 3) return false;
    const bool by_definition =
        !is_cinf(w) && is_cinf(w.prefix(w.size() - 1)) && is_cinf(w.suffix(w.size() - 1));

    const Word flipped = flip(w.front()) + w.substr(1, w.size() - 2) + flip(w.back());
    bool by_flip = false;
    if (is_cinf(flipped)) {
        by_flip = classify(flipped).minimal() && root(flipped) == "1"_w;
    }
    if (by_definition != by_flip) {
        throw InternalInconsistency("minimal forbidden tests disagree on " + w.str());
    }
    return by_definition;
}

/// The h with D^{h-1}(w) in {111, 222}.
inline std::size_t mf_height(const Word& w) {
    if (!is_minimal_forbidden(w)) {
        throw NotMinimalForbidden("not a minimal forbidden word: " + w.display());
    }
    return *failing_order(w);
}

/// Prefix tree of a set of words. Node 0 is the empty prefix.
class Trie {
public:
    static constexpr std::int32_t none = -1;

    struct Node {
        std::array<std::int32_t, 2> child{none, none};
        std::int32_t parent = none;
        std::size_t depth = 0;
        bool terminal = false;
    };

    Trie() : nodes_(1) {}

    template <class Range>
    explicit Trie(const Range& words) : Trie() {
        for (const Word& w : words) insert(w);
    }

    void insert(const Word& w) {
        std::int32_t cur = 0;
        for (Symbol s : w) {
            auto& slot = nodes_[static_cast<std::size_t>(cur)].child[index(s)];
            if (slot == none) {
                Node n;
                n.parent = cur;
                n.depth = nodes_[static_cast<std::size_t>(cur)].depth + 1;
                nodes_.push_back(n);
                // `slot` may dangle after push_back.
                nodes_[static_cast<std::size_t>(cur)].child[index(s)] =
                    static_cast<std::int32_t>(nodes_.size() - 1);
            }
            cur = nodes_[static_cast<std::size_t>(cur)].child[index(s)];
        }
        nodes_[static_cast<std::size_t>(cur)].terminal = true;
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    const Node& node(std::size_t i) const { return nodes_.at(i); }
    std::span<const Node> nodes() const noexcept { return nodes_; }

    std::int32_t child(std::size_t i, Symbol s) const { return nodes_.at(i).child[index(s)]; }

    std::size_t terminal_count() const {
        std::size_t n = 0;
        for (const auto& node : nodes_) n += node.terminal ? 1 : 0;
        return n;
    }

    /// The prefix spelled by the path from the root to node i.
    Word label(std::size_t i) const {
        Word::container out;
        auto cur = static_cast<std::int32_t>(i);
        while (cur > 0) {
            const Node& n = nodes_[static_cast<std::size_t>(cur)];
            const Node& p = nodes_[static_cast<std::size_t>(n.parent)];
            out.push_back(p.child[0] == cur ? Symbol::One : Symbol::Two);
            cur = n.parent;
        }
        return Word(out.rbegin(), out.rend());
    }

    static constexpr std::size_t index(Symbol s) noexcept { return s == Symbol::One ? 0 : 1; }

private:
    std::vector<Node> nodes_;
};

inline Trie build_trie(const MfCatalog& catalog) { return Trie(catalog.words); }

}  // namespace cinf
