#pragma once

// Automata for k-differentiable words: the L-automaton built from the trie
// of an anti-factorial set, and its compaction along right maximal
// extensions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cinf/derivative.hpp"
#include "cinf/errors.hpp"
#include "cinf/forbidden.hpp"
#include "cinf/word.hpp"

namespace cinf {

/// Solid edges come from the trie; weak edges are created through the
/// failure function.
enum class EdgeKind { Solid, Weak };

inline const char* to_string(EdgeKind k) noexcept { return k == EdgeKind::Solid ? "solid" : "weak"; }

struct Edge {
    std::size_t target = 0;
    EdgeKind kind = EdgeKind::Solid;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct AutomatonState {
    Word label;
    std::array<std::optional<Edge>, 2> next;
    /// State of the longest proper suffix of `label` that is a state; empty
    /// for the initial state.
    std::optional<std::size_t> failure;

    const std::optional<Edge>& on(Symbol s) const { return next[Trie::index(s)]; }
};

/// Deterministic automaton over {1,2}; every state is accepting. State 0 is
/// the initial (empty-word) state and states are numbered breadth-first.
class Automaton {
public:
    Automaton() = default;
    explicit Automaton(std::vector<AutomatonState> states) : states_(std::move(states)) {
        for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i].label, i);
    }

    std::size_t size() const noexcept { return states_.size(); }
    const AutomatonState& state(std::size_t i) const { return states_.at(i); }
    const std::vector<AutomatonState>& states() const noexcept { return states_; }
    static constexpr std::size_t initial() noexcept { return 0; }

    std::optional<std::size_t> find(const Word& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// End state of the path labeled w, or nullopt (rejection).
    std::optional<std::size_t> run(const Word& w) const {
        std::size_t cur = initial();
        for (Symbol s : w) {
            const auto& e = states_[cur].on(s);
            if (!e) return std::nullopt;
            cur = e->target;
        }
        return cur;
    }

    std::size_t edge_count(EdgeKind kind) const {
        std::size_t n = 0;
        for (const auto& st : states_) {
            for (const auto& e : st.next) n += (e && e->kind == kind) ? 1 : 0;
        }
        return n;
    }

private:
    std::vector<AutomatonState> states_;
    std::unordered_map<Word, std::size_t> index_;
};

/// Builds the automaton of the words avoiding the trie's set, following the
/// classical L-automaton procedure, then removes the sink states (the set's
/// own words) together with every edge entering them.
///
/// The trie is visited breadth-first with children in letter order 1 < 2.
inline Automaton l_automaton(const Trie& trie) {
    constexpr std::int32_t undefined = Trie::none;
    const std::size_t n = trie.size();
    std::vector<std::array<std::int32_t, 2>> delta(n, {undefined, undefined});
    std::vector<std::array<EdgeKind, 2>> kind(n, {EdgeKind::Solid, EdgeKind::Solid});
    std::vector<std::int32_t> fail(n, undefined);
    std::deque<std::size_t> queue;

    for (Symbol a : {Symbol::One, Symbol::Two}) {
        const auto ai = Trie::index(a);
        const std::int32_t c = trie.child(0, a);
        if (c != undefined) {
            delta[0][ai] = c;
            fail[static_cast<std::size_t>(c)] = 0;
            queue.push_back(static_cast<std::size_t>(c));
        } else {
            delta[0][ai] = 0;
            kind[0][ai] = EdgeKind::Weak;
        }
    }
    while (!queue.empty()) {
        const std::size_t p = queue.front();
        queue.pop_front();
        const auto sp = static_cast<std::size_t>(fail[p]);
        for (Symbol a : {Symbol::One, Symbol::Two}) {
            const auto ai = Trie::index(a);
            const std::int32_t c = trie.child(p, a);
            if (c != undefined) {
                delta[p][ai] = c;
                fail[static_cast<std::size_t>(c)] = delta[sp][ai];
                queue.push_back(static_cast<std::size_t>(c));
            } else if (!trie.node(p).terminal) {
                delta[p][ai] = delta[sp][ai];
                kind[p][ai] = EdgeKind::Weak;
            } else {
                delta[p][ai] = static_cast<std::int32_t>(p);
            }
        }
    }

    // Keep the non-sink states, renumbered breadth-first.
    std::vector<std::size_t> order;
    order.reserve(n);
    {
        std::deque<std::size_t> q{0};
        while (!q.empty()) {
            const std::size_t p = q.front();
            q.pop_front();
            if (trie.node(p).terminal) continue;
            order.push_back(p);
            for (Symbol a : {Symbol::One, Symbol::Two}) {
                const std::int32_t c = trie.child(p, a);
                if (c != undefined) q.push_back(static_cast<std::size_t>(c));
            }
        }
    }
    std::vector<std::int64_t> renumber(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<std::int64_t>(i);

    std::vector<AutomatonState> states(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t p = order[i];
        states[i].label = trie.label(p);
        if (p != 0) states[i].failure = static_cast<std::size_t>(renumber[static_cast<std::size_t>(fail[p])]);
        for (std::size_t ai = 0; ai < 2; ++ai) {
            const auto t = static_cast<std::size_t>(delta[p][ai]);
            if (renumber[t] < 0) continue;  // edge into a sink
            states[i].next[ai] = Edge{static_cast<std::size_t>(renumber[t]), kind[p][ai]};
        }
    }
    return Automaton(std::move(states));
}

/// A_k: the automaton recognizing C^k.
inline Automaton automaton_for(std::size_t k) { return l_automaton(build_trie(mf_set(k))); }

inline std::optional<std::size_t> run(const Automaton& a, const Word& w) { return a.run(w); }

/// Every accepted word of length <= n, in shortlex order.
inline std::vector<Word> language_up_to(const Automaton& a, std::size_t n) {
    std::vector<Word> out;
    Word cur;
    auto walk = [&](auto&& self, std::size_t state) -> void {
        out.push_back(cur);
        if (cur.size() == n) return;
        for (Symbol s : {Symbol::One, Symbol::Two}) {
            const auto& e = a.state(state).on(s);
            if (!e) continue;
            cur.push_back(s);
            self(self, e->target);
            cur.pop_back();
        }
    };
    walk(walk, Automaton::initial());
    normalize(out);
    return out;
}

/// True iff all edges entering any given state carry the same letter.
inline bool has_uniform_entry_labels(const Automaton& a) {
    std::vector<std::optional<Symbol>> seen(a.size());
    for (const auto& st : a.states()) {
        for (Symbol s : {Symbol::One, Symbol::Two}) {
            const auto& e = st.on(s);
            if (!e) continue;
            auto& slot = seen[e->target];
            if (slot && *slot != s) return false;
            slot = s;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Compaction

/// One class of words sharing the same maximal extension.
struct CompactState {
    Word minimal_word;       // shortest member; a minimal word
    Word maximal_extension;  // two-sided maximal extension of minimal_word
    Word chain_end;          // label of the last merged state
    std::size_t height = 0;
    Word root;               // empty for the initial state
    std::vector<std::size_t> chain;  // merged automaton states, in path order
    /// The chain stops early because the finite trie is cut before the
    /// right maximal extension ends.
    bool truncated = false;

    bool single_rooted() const noexcept { return root.size() == 1; }
};

struct CompactEdge {
    std::size_t target = 0;
    EdgeKind kind = EdgeKind::Solid;
    Symbol letter = Symbol::One;  // letter read on the underlying automaton edge
    Word label;
    std::size_t source_state = 0;  // underlying automaton state the edge leaves
};

struct CompactAutomaton {
    std::vector<CompactState> states;
    std::vector<std::vector<CompactEdge>> edges;  // per state, in letter order
    std::vector<std::size_t> owner;               // automaton state -> compact state

    std::size_t size() const noexcept { return states.size(); }

    std::size_t count_height(std::size_t h) const {
        std::size_t n = 0;
        for (const auto& s : states) n += s.height == h ? 1 : 0;
        return n;
    }
};

/// Merges every right minimal state with the states along its right maximal
/// extension. Compact edges leave a class from wherever the underlying edge
/// leaves its chain; the label is the letter read followed by the rest of
/// the target chain.
inline CompactAutomaton compact(const Automaton& a) {
    constexpr std::size_t unowned = SIZE_MAX;
    CompactAutomaton ca;
    ca.owner.assign(a.size(), unowned);

    for (std::size_t i = 0; i < a.size(); ++i) {
        const Word& head = a.state(i).label;
        if (!head.empty() && !classify(head).right_minimal) continue;
        CompactState cs;
        cs.minimal_word = head;
        cs.chain.push_back(i);
        if (!head.empty()) {
            const auto chain = derivative_chain(head);
            cs.height = chain.height();
            cs.root = chain.root();
            cs.maximal_extension = extend(head, Side::Both);
            const Word right = extend(head, Side::Right);
            std::size_t cur = i;
            for (std::size_t pos = head.size(); pos < right.size(); ++pos) {
                const auto& e = a.state(cur).on(right[pos]);
                if (!e || e->kind != EdgeKind::Solid) {
                    cs.truncated = true;
                    break;
                }
                cur = e->target;
                cs.chain.push_back(cur);
            }
        }
        cs.chain_end = a.state(cs.chain.back()).label;
        const std::size_t id = ca.states.size();
        for (std::size_t s : cs.chain) {
            if (ca.owner[s] != unowned) {
                throw InternalInconsistency("state " + a.state(s).label.display() +
                                            " lies on two right maximal extensions");
            }
            ca.owner[s] = id;
        }
        ca.states.push_back(std::move(cs));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ca.owner[i] == unowned) {
            throw InternalInconsistency("state " + a.state(i).label.display() +
                                        " is not on any right maximal extension");
        }
    }

    ca.edges.resize(ca.states.size());
    for (std::size_t id = 0; id < ca.states.size(); ++id) {
        const auto& chain = ca.states[id].chain;
        for (std::size_t pos = 0; pos < chain.size(); ++pos) {
            for (Symbol x : {Symbol::One, Symbol::Two}) {
                const auto& e = a.state(chain[pos]).on(x);
                if (!e) continue;
                if (pos + 1 < chain.size() && e->target == chain[pos + 1]) continue;
                const std::size_t tid = ca.owner[e->target];
                const CompactState& t = ca.states[tid];
                CompactEdge ce;
                ce.target = tid;
                ce.kind = e->kind;
                ce.letter = x;
                ce.source_state = chain[pos];
                ce.label = x + t.chain_end.suffix(t.chain_end.size() - t.minimal_word.size());
                ca.edges[id].push_back(std::move(ce));
            }
        }
    }
    return ca;
}

/// Members of a compact state's class: the nonempty factors of its maximal
/// extension, of length <= n, having that same maximal extension.
inline std::vector<Word> class_members(const CompactAutomaton& ca, std::size_t state, std::size_t n) {
    const Word& ext = ca.states.at(state).maximal_extension;
    std::vector<Word> out;
    for (std::size_t len = 1; len <= std::min(n, ext.size()); ++len) {
        for (std::size_t pos = 0; pos + len <= ext.size(); ++pos) {
            Word v = ext.substr(pos, len);
            if (extend(v, Side::Both) == ext) out.push_back(std::move(v));
        }
    }
    normalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {
inline std::string dot_escape(const std::string& s) { return s.empty() ? "ε" : s; }
}  // namespace detail

/// Solid edges are drawn solid, weak edges dashed; states are grouped by
/// label length.
inline void write_dot(std::ostream& os, const Automaton& a, const std::string& name = "A") {
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << "  s" << i << " [label=\"" << detail::dot_escape(a.state(i).label.str()) << "\"];\n";
        ranks[a.state(i).label.size()].push_back(i);
    }
    for (const auto& [len, ids] : ranks) {
        os << "  { rank=same;";
        for (auto i : ids) os << " s" << i << ";";
        os << " }\n";
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (Symbol x : {Symbol::One, Symbol::Two}) {
            const auto& e = a.state(i).on(x);
            if (!e) continue;
            os << "  s" << i << " -> s" << e->target << " [label=\"" << to_char(x) << "\""
               << (e->kind == EdgeKind::Weak ? ", style=dashed" : "") << "];\n";
        }
    }
    os << "}\n";
}

inline void write_dot(std::ostream& os, const CompactAutomaton& ca, const std::string& name = "CA") {
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto& s = ca.states[i];
        os << "  c" << i << " [label=\"" << detail::dot_escape(s.minimal_word.str()) << "\\n"
           << detail::dot_escape(s.maximal_extension.str()) << "\"];\n";
        ranks[s.height].push_back(i);
    }
    for (const auto& [h, ids] : ranks) {
        os << "  { rank=same;";
        for (auto i : ids) os << " c" << i << ";";
        os << " }\n";
    }
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (const auto& e : ca.edges[i]) {
            os << "  c" << i << " -> c" << e.target << " [label=\"" << e.label.str() << "\""
               << (e.kind == EdgeKind::Weak ? ", style=dashed" : "") << "];\n";
        }
    }
    os << "}\n";
}

}  // namespace cinf
