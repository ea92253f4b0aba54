#pragma once

// Golden examples: reference values for the worked examples, checked by the
// `paper-examples` subcommand.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cinf/cinf.hpp"
#include "cinf/oracle.hpp"

namespace cinf::golden {

struct Case {
    std::string id;
    std::function<bool()> check;
};

struct Outcome {
    std::string id;
    bool pass = false;
    std::string error;  // exception text, if the check threw
};

namespace detail {

inline std::vector<Word> words(std::initializer_list<const char*> texts) {
    std::vector<Word> out;
    for (const char* t : texts) out.push_back(Word::parse(t));
    normalize(out);
    return out;
}

inline std::vector<Word> sorted(std::vector<Word> v) {
    normalize(v);
    return v;
}

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    }
    return false;
}

inline std::vector<Word> chain_of(const Word& w) { return derivative_chain(w).levels; }

}  // namespace detail

inline std::vector<Case> cases() {
    using detail::throws;
    using detail::words;
    std::vector<Case> c;
    auto add = [&](std::string id, std::function<bool()> f) { c.push_back({std::move(id), std::move(f)}); };

    // word-core
    add("rle/2211", [] { return rle("2211"_w).runs == std::vector<std::size_t>{2, 2}; });
    add("derivative/2211", [] { return derivative("2211"_w) == "22"_w; });
    add("derivative/21221211221", [] { return derivative("21221211221"_w) == "121122"_w; });
    add("derivative/111", [] { return throws<NotDifferentiable>([] { derivative("111"_w); }); });
    add("chain/2211", [] {
        return detail::chain_of("2211"_w) == std::vector<Word>{"2211"_w, "22"_w, "2"_w, Word{}};
    });
    add("chain/22112112", [] {
        return detail::chain_of("22112112"_w) == std::vector<Word>{"22112112"_w, "2212"_w, "21"_w, Word{}};
    });
    add("chain/12121", [] {
        try {
            derivative_chain("12121"_w);
        } catch (const NotCInfinity& e) {
            return e.level() == 1;
        }
        return false;
    });
    add("k-differentiable/12121/2", [] { return !is_k_differentiable("12121"_w, 2); });
    add("cinf/2211", [] { return is_cinf("2211"_w); });
    add("cinf/112211", [] { return !is_cinf("112211"_w); });
    add("height-root/2211", [] { return height("2211"_w) == 3 && root("2211"_w) == "2"_w; });
    add("height-root/22112112", [] { return height("22112112"_w) == 3 && root("22112112"_w) == "21"_w; });
    add("complement/11212", [] { return complement("11212"_w) == "22121"_w; });
    add("reversal/11212", [] { return reversal("11212"_w) == "21211"_w; });
    add("primitives/2", [] {
        return detail::sorted(primitives("2"_w)) ==
               words({"11", "22", "211", "112", "2112", "122", "221", "1221"});
    });
    add("primitives/1", [] { return detail::sorted(primitives("1"_w)) == words({"121", "212"}); });
    add("primitives/empty", [] { return detail::sorted(primitives(Word{})) == words({"1", "2", "12", "21"}); });
    add("classify/2211", [] {
        auto p = classify("2211"_w);
        return p.minimal() && !p.left_maximal && !p.right_maximal;
    });
    add("classify/2122112", [] {
        auto p = classify("2122112"_w);
        return p.left_maximal && !p.right_maximal;
    });
    add("classify/121", [] {
        auto p = classify("121"_w);
        return p.left_doubly_ext && p.right_doubly_ext && !p.fully_ext;
    });
    add("extend/2211/right", [] { return extend("2211"_w, Side::Right) == "221121"_w; });
    add("extend/2211/left", [] { return extend("2211"_w, Side::Left) == "212211"_w; });
    add("extend/2211/both", [] { return extend("2211"_w, Side::Both) == "21221121"_w; });

    // forbidden
    add("mf/1", [] { return mf_set(1).words == words({"111", "222"}); });
    add("mf/2", [] {
        return mf_set(2).words == words({"111", "222", "21212", "12121", "112211", "221122"});
    });
    add("mf/3", [] {
        return mf_set(3).words ==
               words({"111", "222", "21212", "12121", "112211", "221122", "11211211", "22122122",
                      "212212212", "121121121", "2121122121", "1212211212", "1122121122", "2211212211"});
    });
    add("minimal-forbidden/112211", [] { return is_minimal_forbidden("112211"_w); });
    add("mf-height/2121122121", [] { return mf_height("2121122121"_w) == 3; });

    // automata
    add("run/A1/111", [] { return !run(automaton_for(1), "111"_w).has_value(); });
    add("automaton/A3/accepts-C3", [] {
        return language_up_to(automaton_for(3), 12) == oracle::enumerate_ck(3, 12);
    });
    add("compact/2211/two-solid-edges", [] {
        const auto ca = compact(automaton_for(5));
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca.states[i].minimal_word != "2211"_w) continue;
            const auto& es = ca.edges[i];
            return es.size() == 2 && std::all_of(es.begin(), es.end(), [](const CompactEdge& e) {
                       return e.kind == EdgeKind::Solid;
                   });
        }
        return false;
    });
    add("compact/double-rooted/weak-edge", [] {
        const auto ca = compact(automaton_for(6));
        for (std::size_t i = 1; i < ca.size(); ++i) {
            const auto& s = ca.states[i];
            if (s.single_rooted() || s.height > 4) continue;
            std::size_t solid = 0, weak = 0;
            for (const auto& e : ca.edges[i]) {
                if (e.kind == EdgeKind::Solid) {
                    ++solid;
                } else {
                    ++weak;
                    const auto& t = ca.states[e.target];
                    if (!is_minimal_word(t.minimal_word) || t.root != "2"_w) return false;
                }
            }
            if (solid != 1 || weak != 1) return false;
        }
        return true;
    });
    add("class/2211", [] {
        const auto ca = compact(automaton_for(5));
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca.states[i].minimal_word != "2211"_w) continue;
            const auto m = class_members(ca, i, 16);
            for (const char* w : {"2211", "221121", "212211", "21221121"}) {
                if (!std::binary_search(m.begin(), m.end(), Word::parse(w), ShortlexLess{})) return false;
            }
            return true;
        }
        return false;
    });

    // vertical
    add("psi/21221211221", [] { return psi("21221211221"_w) == "2110"_f; });
    add("psi/12211212212", [] { return psi("12211212212"_w) == "1022"_f; });
    add("psi/2212211", [] { return psi("2212211"_w) == "221"_f && psi(reversal("2212211"_w)) == "122"_f; });
    add("vertical/21221211221", [] { return vertical_repr("21221211221"_w).str() == "2110|1022"; });
    add("vertical/1221221121", [] { return vertical_repr("1221221121"_w).str() == "101|110"; });
    add("reconstruct/221|122", [] { return reconstruct("221"_f, "122"_f) == "2212211"_w; });
    add("reconstruct/101|110", [] { return reconstruct("101"_f, "110"_f) == "1221221121"_w; });
    add("reconstruct/2122|2222", [] { return reconstruct("2122"_f, "2222"_f) == "2121122"_w; });
    add("canonical/21221211221", [] { return canonical_minimal("21221211221"_w) == "2121122"_w; });
    add("canonical/1221221121", [] { return canonical_minimal("1221221121"_w) == "2212211"_w; });
    add("vuca/211/0", [] { return build_vuca(4).delta("211"_f, FrontierSymbol::Zero) == "2122"_f; });
    add("vuca/6/out-degree", [] {
        const auto a = build_vuca(6);
        for (std::size_t i = 1; i < a.states.size(); ++i) {
            if (a.edges[i].size() != 3) return false;
        }
        return true;
    });

    // repetitions
    add("kolakoski/12", [] { return kolakoski(12) == "221121221221"_w; });
    add("kolakoski/60", [] {
        return kolakoski(60) == "221121221221121122121121221121121221221121221211211221221121"_w;
    });
    add("census/60/cubes", [] { return census(60).cubes == 0; });
    add("census/60/overlaps", [] { return census(60).overlaps_longer_than_55 == 0; });
    add("gap/existence/10", [] {
        for (std::size_t n = 1; n <= 10; ++n) {
            for (const Word& u : oracle::enumerate_cinf_exact(n)) {
                if (!is_cinf(shortest_gap(u).repetition())) return false;
            }
        }
        return true;
    });

    // oracle
    add("oracle/ck/1/3", [] {
        auto all = oracle::drain(oracle::EnumerationCursor([](const std::string&) { return true; }, 3));
        std::erase_if(all, [](const Word& w) { return w == "111"_w || w == "222"_w; });
        return oracle::enumerate_ck(1, 3) == all;
    });
    add("oracle/ck/2/5", [] {
        const auto ws = oracle::enumerate_ck(2, 5);
        return std::find(ws.begin(), ws.end(), "21212"_w) == ws.end() &&
               std::find(ws.begin(), ws.end(), "12121"_w) == ws.end();
    });
    add("oracle/mf/1-3", [] {
        for (std::size_t k = 1; k <= 3; ++k) {
            if (oracle::brute_mf(k) != mf_set(k).words) return false;
        }
        return true;
    });
    return c;
}

inline std::vector<Outcome> run(const std::vector<Case>& cs) {
    std::vector<Outcome> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        Outcome o{c.id, false, {}};
        try {
            o.pass = c.check();
        } catch (const std::exception& e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace cinf::golden
