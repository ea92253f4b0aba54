#pragma once

// Vertical representation of C-infinity words: left/right frontiers over
// {0,1,2}, exact reconstruction from a frontier pair, and the vertical
// ultra-compacted automaton (VUCA) built directly or from the compacted
// automaton.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cinf/automaton.hpp"
#include "cinf/derivative.hpp"
#include "cinf/errors.hpp"
#include "cinf/word.hpp"

namespace cinf {

/// Letter fronted by a frontier symbol: 0 stands for a 2.
constexpr Symbol decode(FrontierSymbol s) noexcept {
    return s == FrontierSymbol::One ? Symbol::One : Symbol::Two;
}

constexpr FrontierSymbol encode(Symbol s) noexcept {
    return s == Symbol::One ? FrontierSymbol::One : FrontierSymbol::Two;
}

inline Frontier to_frontier(const Word& w) {
    Frontier f;
    for (Symbol s : w) f.push_back(encode(s));
    return f;
}

/// Left frontier: first letter of every chain level, with a 2 written as 0
/// when the level below starts with two distinct letters.
inline Frontier psi(const Word& w) {
    const auto chain = derivative_chain(w);
    Frontier out;
    for (std::size_t i = 0; i < chain.height(); ++i) {
        const Word& d = chain.levels[i];
        if (i > 0) {
            const Word& below = chain.levels[i - 1];
            if (d[0] == Symbol::Two && below[0] != below[1]) {
                out.push_back(FrontierSymbol::Zero);
                continue;
            }
        }
        out.push_back(encode(d[0]));
    }
    return out;
}

struct VerticalRepr {
    Frontier left;
    Frontier right;

    std::string str() const { return left.str() + "|" + right.str(); }

    friend bool operator==(const VerticalRepr&, const VerticalRepr&) = default;
};

inline VerticalRepr vertical_repr(const Word& w) { return {psi(w), psi(reversal(w))}; }

namespace detail {

/// Word with first letter `first` and the given run lengths.
inline Word expand_runs(Symbol first, const std::vector<Symbol>& runs) {
    Word out;
    Symbol letter = first;
    for (Symbol r : runs) {
        for (int i = 0; i < value_of(r); ++i) out.push_back(letter);
        letter = flip(letter);
    }
    return out;
}

/// Descends from `root` to level 0. At each level the run-length encoding is
/// (1?) w_{i+1} (1?): the left unit run is present unless the left frontier
/// says the level above keeps its leading 2; the right one is decided by
/// `right_wrap`.
template <class RightWrap>
Word descend(const Frontier& u, Word level, RightWrap right_wrap) {
    const std::size_t k = u.size();
    for (std::size_t i = k - 1; i-- > 0;) {
        std::vector<Symbol> runs;
        if (u[i + 1] != FrontierSymbol::Two) runs.push_back(Symbol::One);
        runs.insert(runs.end(), level.begin(), level.end());
        if (right_wrap(i, level)) runs.push_back(Symbol::One);
        level = expand_runs(decode(u[i]), runs);
    }
    return level;
}

inline void check_frontier(const Frontier& f, const char* side) {
    if (f.empty()) throw Inconsistent(std::string(side) + " frontier is empty", 0);
    if (f[0] == FrontierSymbol::Zero) {
        throw Inconsistent(std::string(side) + " frontier starts with 0", 0);
    }
}

}  // namespace detail

/// The unique C-infinity word with vertical representation u|v.
///
/// Works top-down from the root. The result is re-checked by recomputing
/// both frontiers; Inconsistent is thrown when no word realizes the pair.
inline Word reconstruct(const Frontier& u, const Frontier& v) {
    detail::check_frontier(u, "left");
    detail::check_frontier(v, "right");
    if (u.size() != v.size()) throw Inconsistent("frontiers have different lengths", 0);
    const std::size_t k = u.size();
    const Symbol top_first = decode(u[k - 1]);
    const Symbol top_last = decode(v[k - 1]);
    Word root = top_first == top_last ? Word{top_first} : Word{top_first, top_last};

    std::optional<std::size_t> bad_level;
    Word w = detail::descend(u, std::move(root), [&](std::size_t i, const Word&) {
        return v[i + 1] != FrontierSymbol::Two;
    });
    // The descent fixes first letters; last letters must agree with v.
    {
        auto chain = derivative_chain(w);
        for (std::size_t i = 0; i < k && !bad_level; ++i) {
            if (chain.levels[i].back() != decode(v[i])) bad_level = i;
        }
    }
    if (bad_level) {
        throw Inconsistent(u.str() + "|" + v.str() + " requires last letter " +
                               std::string(1, to_char(decode(v[*bad_level]))),
                           *bad_level);
    }
    if (vertical_repr(w) != VerticalRepr{u, v}) {
        throw Inconsistent(u.str() + "|" + v.str() + " is not realized (decoded " + w.str() + ")", 0);
    }
    return w;
}

/// A single-rooted, right minimal word with left frontier u: the descent
/// adds a right unit run only when the level above ends with 1.
inline Word realize_left(const Frontier& u) {
    detail::check_frontier(u, "left");
    Word w = detail::descend(u, Word{decode(u[u.size() - 1])}, [](std::size_t, const Word& above) {
        return above.back() == Symbol::One;
    });
    if (psi(w) != u) throw Inconsistent("left frontier " + u.str() + " is not realized", 0);
    return w;
}

// ---------------------------------------------------------------------------
// VUCA

/// Target of the 0-edge leaving state u: the left frontier of the longest
/// left minimal suffix of any word whose left frontier is u0.
inline Frontier vuca_weak_target(const Frontier& u) {
    Frontier u0 = u;
    u0.push_back(FrontierSymbol::Zero);
    const Word witness = realize_left(u0);
    for (std::size_t len = witness.size() - 1; len > 0; --len) {
        Word suffix = witness.suffix(len);
        if (classify(suffix).left_minimal) return psi(suffix);
    }
    throw InternalInconsistency("no left minimal suffix of " + witness.str());
}

/// End state of the path labeled by a frontier, computed on the fly.
inline Frontier vuca_run(const Frontier& path) {
    Frontier state;
    for (FrontierSymbol s : path) {
        if (s == FrontierSymbol::Zero) {
            if (state.empty()) throw Inconsistent("path starts with 0", 0);
            state = vuca_weak_target(state);
        } else {
            state.push_back(s);
        }
    }
    return state;
}

/// The minimal word of which w is a simple extension.
inline Word canonical_minimal(const Word& w) {
    if (w.empty()) throw RootOfEmpty();
    return reconstruct(vuca_run(psi(w)), vuca_run(psi(reversal(w))));
}

struct VucaEdge {
    FrontierSymbol symbol = FrontierSymbol::One;
    Frontier target;
    /// Index of the target, or nullopt when it lies past the cut.
    std::optional<std::size_t> target_index;
};

/// VUCA cut at level k: states are the words over {1,2} of length <= k.
/// Solid edges append 1 or 2; every nonempty state has a 0-edge. Targets of
/// length k + 1 are kept as labels only.
struct VucaAutomaton {
    std::size_t k = 0;
    std::vector<Frontier> states;             // shortlex order, states[0] = ε
    std::vector<std::vector<VucaEdge>> edges;  // per state, symbols 0, 1, 2 present in that order

    /// Shortlex index of a {1,2}-frontier, or nullopt if it is not a state.
    std::optional<std::size_t> index_of(const Frontier& f) const {
        if (f.size() > k) return std::nullopt;
        std::size_t idx = (std::size_t{1} << f.size()) - 1;
        std::size_t bits = 0;
        for (FrontierSymbol s : f) {
            if (s == FrontierSymbol::Zero) return std::nullopt;
            bits = (bits << 1) | (s == FrontierSymbol::Two ? 1u : 0u);
        }
        return idx + bits;
    }

    const VucaEdge* edge(std::size_t state, FrontierSymbol s) const {
        for (const auto& e : edges.at(state)) {
            if (e.symbol == s) return &e;
        }
        return nullptr;
    }

    std::optional<Frontier> delta(const Frontier& from, FrontierSymbol s) const {
        auto idx = index_of(from);
        if (!idx) return std::nullopt;
        const VucaEdge* e = edge(*idx, s);
        if (!e) return std::nullopt;
        return e->target;
    }
};

namespace detail {

inline VucaAutomaton vuca_skeleton(std::size_t k) {
    VucaAutomaton a;
    a.k = k;
    a.states.push_back(Frontier{});
    for (std::size_t len = 1; len <= k; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            Frontier f;
            for (std::size_t i = len; i-- > 0;) {
                f.push_back(((bits >> i) & 1u) ? FrontierSymbol::Two : FrontierSymbol::One);
            }
            a.states.push_back(std::move(f));
        }
    }
    a.edges.resize(a.states.size());
    return a;
}

inline void add_edge(VucaAutomaton& a, std::size_t from, FrontierSymbol s, Frontier target) {
    VucaEdge e;
    e.symbol = s;
    e.target_index = a.index_of(target);
    e.target = std::move(target);
    auto& list = a.edges[from];
    auto pos = list.begin();
    while (pos != list.end() && pos->symbol < s) ++pos;
    list.insert(pos, std::move(e));
}

}  // namespace detail

/// VUCA_k with every 0-edge computed from a right minimal witness word.
inline VucaAutomaton build_vuca(std::size_t k) {
    VucaAutomaton a = detail::vuca_skeleton(k);
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const Frontier& u = a.states[i];
        if (!u.empty()) detail::add_edge(a, i, FrontierSymbol::Zero, vuca_weak_target(u));
        for (FrontierSymbol x : {FrontierSymbol::One, FrontierSymbol::Two}) {
            detail::add_edge(a, i, x, u + x);
        }
    }
    return a;
}

/// One edge of the vertical compacted automaton (VCA). An empty label marks
/// the edge between the single- and double-rooted minimal words sharing a
/// left frontier.
struct VcaEdge {
    std::size_t source = 0;  // compact state ids
    std::size_t target = 0;
    std::optional<FrontierSymbol> label;  // nullopt is ε
};

/// The relabeled compacted automaton and the VUCA obtained by merging
/// states with equal left frontier.
struct VerticalCompaction {
    CompactAutomaton ca;
    std::vector<VerticalRepr> repr;             // per compact state
    std::vector<VcaEdge> vca_edges;
    std::vector<std::pair<std::size_t, std::size_t>> merged;  // (single, double) compact ids
    /// Compact edges that neither append a frontier letter, keep the
    /// frontier, nor read 0. They only occur at the cut.
    std::vector<VcaEdge> unclassified;
    VucaAutomaton vuca;
};

/// Derives VUCA_k from compact(A_k). Edges are exact for states of length
/// <= k - 2; above that the cut of A_k may leave them missing.
inline VerticalCompaction vertical_compaction(std::size_t k) {
    VerticalCompaction out;
    out.ca = compact(automaton_for(k));
    const auto& ca = out.ca;
    out.repr.reserve(ca.size());
    for (const auto& s : ca.states) {
        out.repr.push_back(s.minimal_word.empty() ? VerticalRepr{} : vertical_repr(s.minimal_word));
    }
    out.vuca = detail::vuca_skeleton(k);

    for (std::size_t id = 0; id < ca.size(); ++id) {
        const Frontier& u = out.repr[id].left;
        for (const auto& e : ca.edges[id]) {
            const Frontier& t = out.repr[e.target].left;
            VcaEdge ve{id, e.target, std::nullopt};
            if (e.kind == EdgeKind::Weak) {
                ve.label = FrontierSymbol::Zero;
            } else if (t == u) {
                out.merged.emplace_back(id, e.target);
            } else if (t.size() == u.size() + 1 && t.starts_with(u)) {
                ve.label = t.back();
            } else {
                out.unclassified.push_back(ve);
                continue;
            }
            out.vca_edges.push_back(ve);
            if (!ve.label) continue;
            auto from = out.vuca.index_of(u);
            if (!from) continue;
            if (!out.vuca.edge(*from, *ve.label)) detail::add_edge(out.vuca, *from, *ve.label, t);
        }
    }
    return out;
}

inline VucaAutomaton vuca_via_compaction(std::size_t k) { return vertical_compaction(k).vuca; }

/// Swaps the first symbol of a frontier (the complement of the fronted word).
inline Frontier swap_first(Frontier f) {
    if (f.empty()) return f;
    Frontier out;
    out.push_back(f[0] == FrontierSymbol::One ? FrontierSymbol::Two
                  : f[0] == FrontierSymbol::Two ? FrontierSymbol::One
                                                 : FrontierSymbol::Zero);
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i]);
    return out;
}

inline void write_dot(std::ostream& os, const VucaAutomaton& a, const std::string& name = "VUCA") {
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        os << "  v" << i << " [label=\"" << (a.states[i].empty() ? "ε" : a.states[i].str()) << "\"];\n";
    }
    for (std::size_t len = 0; len <= a.k; ++len) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < a.states.size(); ++i) {
            if (a.states[i].size() == len) os << " v" << i << ";";
        }
        os << " }\n";
    }
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        for (const auto& e : a.edges[i]) {
            if (!e.target_index) continue;
            os << "  v" << i << " -> v" << *e.target_index << " [label=\"" << to_char(e.symbol) << "\""
               << (e.symbol == FrontierSymbol::Zero ? ", style=dashed" : "") << "];\n";
        }
    }
    os << "}\n";
}

/// DOT of the intermediate VCA: states labeled U|V, edges labeled by a
/// frontier letter, ε, or 0 (dashed).
inline void write_vca_dot(std::ostream& os, const VerticalCompaction& vc, const std::string& name = "VCA") {
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < vc.repr.size(); ++i) {
        const std::string label = vc.ca.states[i].minimal_word.empty() ? "ε" : vc.repr[i].str();
        os << "  c" << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : vc.vca_edges) {
        os << "  c" << e.source << " -> c" << e.target << " [label=\""
           << (e.label ? std::string(1, to_char(*e.label)) : std::string("ε")) << "\""
           << (e.label == FrontierSymbol::Zero ? ", style=dashed" : "") << "];\n";
    }
    os << "}\n";
}

}  // namespace cinf
