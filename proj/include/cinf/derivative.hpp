#pragma once

// Derivative calculus on words over {1,2}: run-length encoding, the
// derivative D, membership in C^k and C-infinity, height and root,
// primitives, the extendability classification, and simple
// (maximal) extensions.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cinf/errors.hpp"
#include "cinf/word.hpp"

namespace cinf {

/// Lengths of the maximal blocks of a word, in order.
struct RunSequence {
    std::vector<std::size_t> runs;

    /// Comma-separated form, e.g. "2,2". Empty for the empty word.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(runs[i]);
        }
        return out;
    }

    friend bool operator==(const RunSequence&, const RunSequence&) = default;
};

inline RunSequence rle(const Word& w) {
    RunSequence out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == w[i]) ++j;
        out.runs.push_back(j - i);
        i = j;
    }
    return out;
}

namespace detail {

/// Writes D(w) into `out`. Returns false (leaving `out` unspecified) when w
/// has a run of length >= 3.
inline bool derive_into(std::span<const Symbol> w, std::vector<Symbol>& out) {
    out.clear();
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && w[j] == w[i]) ++j;
        if (j - i > 2) return false;
        out.push_back(symbol_of(static_cast<int>(j - i)));
        i = j;
    }
    // Discard a unit run at the end, then at the start. A single unit run is
    // discarded once.
    if (!out.empty() && out.back() == Symbol::One) out.pop_back();
    if (!out.empty() && out.front() == Symbol::One) out.erase(out.begin());
    return true;
}

/// Index of the first non-differentiable level of the derivative chain, or
/// nullopt when the chain reaches the empty word. Levels past `max_levels`
/// are not examined (nullopt is returned if none of the first `max_levels`
/// fails).
inline std::optional<std::size_t> first_failing_level(std::span<const Symbol> w,
                                                      std::size_t max_levels = SIZE_MAX) {
    std::vector<Symbol> cur(w.begin(), w.end());
    std::vector<Symbol> next;
    for (std::size_t level = 0; level < max_levels; ++level) {
        if (cur.empty()) return std::nullopt;
        if (!derive_into(cur, next)) return level;
        cur.swap(next);
    }
    return std::nullopt;
}

}  // namespace detail

/// D(w). Throws NotDifferentiable when w contains 111 or 222.
inline Word derivative(const Word& w) {
    std::vector<Symbol> out;
    if (!detail::derive_into(w.span(), out)) {
        throw NotDifferentiable("not differentiable: " + w.str() + " has a run of length >= 3");
    }
    return Word(std::move(out));
}

/// The chain w, D(w), D^2(w), ..., ending with the empty word.
struct DerivativeChain {
    std::vector<Word> levels;

    std::size_t height() const noexcept { return levels.size() - 1; }
    const Word& word() const noexcept { return levels.front(); }
    /// D^{height-1}(w); requires height() >= 1.
    const Word& root() const {
        if (height() == 0) throw RootOfEmpty();
        return levels[levels.size() - 2];
    }
};

/// Throws NotCInfinity carrying the first non-differentiable level.
inline DerivativeChain derivative_chain(const Word& w) {
    DerivativeChain chain;
    chain.levels.push_back(w);
    std::vector<Symbol> next;
    while (!chain.levels.back().empty()) {
        if (!detail::derive_into(chain.levels.back().span(), next)) {
            throw NotCInfinity(w.str(), chain.levels.size() - 1);
        }
        chain.levels.emplace_back(next);
    }
    return chain;
}

/// True iff D^j(w) is differentiable for every 0 <= j < k.
inline bool is_k_differentiable(const Word& w, std::size_t k) {
    return !detail::first_failing_level(w.span(), k).has_value();
}

inline bool is_cinf(const Word& w) { return !detail::first_failing_level(w.span()).has_value(); }

/// Smallest k such that w is not in C^k, or nullopt for a C-infinity word.
inline std::optional<std::size_t> failing_order(const Word& w) {
    auto level = detail::first_failing_level(w.span());
    if (!level) return std::nullopt;
    return *level + 1;
}

inline std::size_t height(const Word& w) { return derivative_chain(w).height(); }

inline Word root(const Word& w) {
    if (w.empty()) throw RootOfEmpty();
    return derivative_chain(w).root();
}

namespace detail {

/// All p with D(p) = w, built from the run-length shapes 1?w1? and both
/// starting letters. A side where w begins (ends) with 1 must carry the wrap
/// run, otherwise that unit run of p would be discarded by D.
inline std::vector<Word> synthesize_primitives(const Word& w, bool shortest_only, bool longest_only) {
    std::vector<Word> out;
    auto emit = [&](bool wrap_left, bool wrap_right) {
        std::vector<Symbol> runs;
        if (wrap_left) runs.push_back(Symbol::One);
        runs.insert(runs.end(), w.begin(), w.end());
        if (wrap_right) runs.push_back(Symbol::One);
        for (Symbol start : {Symbol::One, Symbol::Two}) {
            Word p;
            Symbol letter = start;
            for (Symbol r : runs) {
                for (int i = 0; i < value_of(r); ++i) p.push_back(letter);
                letter = flip(letter);
            }
            out.push_back(std::move(p));
        }
    };
    if (w.empty()) {
        // Run-length shapes "1" (from 1w or w1) and "11" (from 1w1).
        if (!longest_only) emit(true, false);
        if (!shortest_only) emit(true, true);
        normalize(out);
        return out;
    }
    const bool left_forced = w.front() == Symbol::One;
    const bool right_forced = w.back() == Symbol::One;
    for (bool wl : {false, true}) {
        if (!wl && left_forced) continue;
        if (shortest_only && wl && !left_forced) continue;
        if (longest_only && !wl) continue;
        for (bool wr : {false, true}) {
            if (!wr && right_forced) continue;
            if (shortest_only && wr && !right_forced) continue;
            if (longest_only && !wr) continue;
            emit(wl, wr);
        }
    }
    normalize(out);
    return out;
}

inline void require_cinf(const Word& w) {
    if (auto level = first_failing_level(w.span())) throw NotCInfinity(w.str(), *level);
}

}  // namespace detail

/// Every primitive of a C-infinity word (between two and eight of them),
/// in shortlex order.
inline std::vector<Word> primitives(const Word& w) {
    detail::require_cinf(w);
    return detail::synthesize_primitives(w, false, false);
}

enum class Extremal { Min, Max };

/// The two shortest (or longest) primitives; they are complements of each
/// other. The lexicographically smaller one comes first.
inline std::pair<Word, Word> extremal_primitives(const Word& w, Extremal mode) {
    detail::require_cinf(w);
    auto ps = detail::synthesize_primitives(w, mode == Extremal::Min, mode == Extremal::Max);
    return {ps.at(0), ps.at(1)};
}

struct ExtensionProfile {
    bool left_minimal = false;
    bool right_minimal = false;
    bool left_maximal = false;
    bool right_maximal = false;
    bool left_doubly_ext = false;
    bool right_doubly_ext = false;
    bool fully_ext = false;
    bool single_rooted = false;

    bool minimal() const noexcept { return left_minimal && right_minimal; }
    bool maximal() const noexcept { return left_maximal && right_maximal; }

    friend bool operator==(const ExtensionProfile&, const ExtensionProfile&) = default;
};

/// Extendability profile of a nonempty C-infinity word.
///
/// Maximality on a side holds iff w and every derivative longer than one
/// starts (ends) with two distinct letters. Minimality on a side holds iff
/// w and every derivative longer than two avoids the prefixes 122, 211
/// (suffixes 221, 112). Doubly extendable sides coincide with maximal ones
/// and full extendability means double-rooted and maximal.
inline ExtensionProfile classify(const Word& w) {
    const auto chain = derivative_chain(w);
    if (w.empty()) throw RootOfEmpty();
    ExtensionProfile p;
    p.left_minimal = p.right_minimal = p.left_maximal = p.right_maximal = true;
    for (std::size_t j = 0; j + 1 < chain.levels.size(); ++j) {
        const Word& d = chain.levels[j];
        const std::size_t n = d.size();
        if (n > 1) {
            if (d[0] == d[1]) p.left_maximal = false;
            if (d[n - 1] == d[n - 2]) p.right_maximal = false;
        }
        if (n > 2) {
            // prefix 122 or 211: first letter differs from the next two, which agree.
            if (d[1] == d[2] && d[0] != d[1]) p.left_minimal = false;
            if (d[n - 2] == d[n - 3] && d[n - 1] != d[n - 2]) p.right_minimal = false;
        }
    }
    p.single_rooted = chain.root().size() == 1;
    p.left_doubly_ext = p.left_maximal;
    p.right_doubly_ext = p.right_maximal;
    p.fully_ext = !p.single_rooted && p.left_maximal && p.right_maximal;
    return p;
}

inline bool is_minimal_word(const Word& w) { return classify(w).minimal(); }

enum class Side { Left, Right, Both };

namespace detail {

inline Word extend_right(Word cur) {
    for (;;) {
        Word one = cur + Symbol::One;
        Word two = cur + Symbol::Two;
        const bool c1 = is_cinf(one);
        const bool c2 = is_cinf(two);
        if (c1 && c2) return cur;
        if (c1) {
            cur = std::move(one);
        } else if (c2) {
            cur = std::move(two);
        } else {
            throw InternalInconsistency("C-infinity word " + cur.str() +
                                        " has no right extension");
        }
    }
}

}  // namespace detail

/// Left, right or two-sided maximal extension of a nonempty C-infinity
/// word: letters are added while exactly one choice stays in C-infinity.
/// The two-sided extension extends to the left first.
inline Word extend(const Word& w, Side side) {
    detail::require_cinf(w);
    if (w.empty()) throw RootOfEmpty();
    switch (side) {
        case Side::Right:
            return detail::extend_right(w);
        case Side::Left:
            return reversal(detail::extend_right(reversal(w)));
        case Side::Both:
            return detail::extend_right(reversal(detail::extend_right(reversal(w))));
    }
    return w;
}

}  // namespace cinf
