#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "cinf/vertical.hpp"
#include "test_support.hpp"

using namespace cinf;

namespace {

bool has_at_or_after_1(const Frontier& f, FrontierSymbol s) {
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i] == s) return true;
    }
    return false;
}

/// Image of a VUCA edge under the first-symbol swap. Edges leaving ε carry
/// the swapped letter too.
bool swap_is_isomorphism(const VucaAutomaton& a, std::size_t max_len) {
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const Frontier& u = a.states[i];
        if (u.size() > max_len) continue;
        const Frontier su = swap_first(u);
        for (const auto& e : a.edges[i]) {
            FrontierSymbol label = e.symbol;
            if (u.empty()) label = e.symbol == FrontierSymbol::One ? FrontierSymbol::Two : FrontierSymbol::One;
            const auto image = a.delta(su, label);
            if (!image || *image != swap_first(e.target)) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Psi, Examples) {
    EXPECT_EQ(psi("21221211221"_w), "2110"_f);
    EXPECT_EQ(psi(reversal("21221211221"_w)), "1022"_f);
    EXPECT_EQ(reversal("21221211221"_w), "12211212212"_w);
    EXPECT_EQ(psi("2212211"_w), "221"_f);
    EXPECT_EQ(psi(reversal("2212211"_w)), "122"_f);
    EXPECT_EQ(psi(Word{}), Frontier{});
    EXPECT_THROW(psi("111"_w), NotCInfinity);
}

TEST(VerticalRepr, Examples) {
    EXPECT_EQ(vertical_repr("21221211221"_w).str(), "2110|1022");
    EXPECT_EQ(vertical_repr("1221221121"_w).str(), "101|110");
    EXPECT_EQ(vertical_repr("2"_w).str(), "2|2");
}

TEST(Reconstruct, Examples) {
    EXPECT_EQ(reconstruct("221"_f, "122"_f), "2212211"_w);
    EXPECT_EQ(reconstruct("101"_f, "110"_f), "1221221121"_w);
    EXPECT_EQ(reconstruct("2122"_f, "2222"_f), "2121122"_w);
    try {
        reconstruct("11"_f, "22"_f);
        FAIL() << "expected Inconsistent";
    } catch (const Inconsistent& e) {
        EXPECT_EQ(e.level(), 0u);
    }
}

TEST(Reconstruct, RejectsMalformedFrontiers) {
    EXPECT_THROW(reconstruct(Frontier{}, Frontier{}), Inconsistent);
    EXPECT_THROW(reconstruct("01"_f, "11"_f), Inconsistent);
    EXPECT_THROW(reconstruct("21"_f, "2"_f), Inconsistent);
}

TEST(RealizeLeft, Examples) {
    EXPECT_EQ(realize_left("2122"_f), "2121122"_w);
    EXPECT_EQ(psi(reversal("2121122"_w)), "2222"_f);
    EXPECT_EQ(realize_left("221"_f), "22122"_w);
    EXPECT_EQ(psi("22122"_w), "221"_f);
    EXPECT_EQ(psi(reversal("22122"_w)), "221"_f);
    EXPECT_EQ(realize_left("2"_f), "2"_w);
    EXPECT_THROW(realize_left("0"_f), Inconsistent);
}

TEST(RealizeLeft, RightMinimalWitnessForEveryFrontier) {
    const auto a = build_vuca(9);
    for (const Frontier& u : a.states) {
        if (u.empty()) continue;
        for (const Frontier& f : {u, u + FrontierSymbol::Zero}) {
            const Word w = realize_left(f);
            ASSERT_EQ(psi(w), f);
            ASSERT_FALSE(has_at_or_after_1(psi(reversal(w)), FrontierSymbol::Zero)) << w;
            ASSERT_TRUE(classify(w).right_minimal) << w;
        }
    }
}

TEST(CanonicalMinimal, Examples) {
    EXPECT_EQ(canonical_minimal("21221211221"_w), "2121122"_w);
    EXPECT_EQ(canonical_minimal("1221221121"_w), "2212211"_w);
    EXPECT_EQ(canonical_minimal("2211"_w), "2211"_w);
    EXPECT_THROW(canonical_minimal(Word{}), RootOfEmpty);
    EXPECT_THROW(canonical_minimal("1111"_w), NotCInfinity);
}

TEST(BuildVuca, Examples) {
    const auto a = build_vuca(6);
    EXPECT_EQ(a.delta("211"_f, FrontierSymbol::Zero), "2122"_f);
    EXPECT_EQ(a.delta("1"_f, FrontierSymbol::Zero), "22"_f);
    EXPECT_EQ(a.delta("21"_f, FrontierSymbol::Two), "212"_f);
    EXPECT_FALSE(a.delta(Frontier{}, FrontierSymbol::Zero));
    for (std::size_t i = 1; i < a.states.size(); ++i) EXPECT_EQ(a.edges[i].size(), 3u) << a.states[i];
    EXPECT_EQ(a.edges[0].size(), 2u);
    // The worked paths: 2110 and 1022 end in 2122 and 2222.
    EXPECT_EQ(vuca_run("2110"_f), "2122"_f);
    EXPECT_EQ(vuca_run("1022"_f), "2222"_f);
}

TEST(VucaViaCompaction, AgreesAwayFromTheCut) {
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto direct = build_vuca(k);
        const auto derived = vuca_via_compaction(k);
        ASSERT_EQ(derived.states, direct.states);
        for (std::size_t i = 0; i < direct.states.size(); ++i) {
            if (direct.states[i].size() + 2 > k) continue;
            for (const auto& e : direct.edges[i]) {
                const auto* f = derived.edge(i, e.symbol);
                ASSERT_TRUE(f) << "k=" << k << " " << direct.states[i] << " " << to_char(e.symbol);
                EXPECT_EQ(f->target, e.target) << "k=" << k << " " << direct.states[i];
            }
            EXPECT_EQ(derived.edges[i].size(), direct.edges[i].size()) << direct.states[i];
        }
    }
}

TEST(VucaViaCompaction, SameFrontierPairsMerge) {
    for (std::size_t k = 2; k <= 7; ++k) {
        const auto vc = vertical_compaction(k);
        std::map<Frontier, std::size_t> pairs;
        for (const auto& [single, dbl] : vc.merged) {
            EXPECT_TRUE(vc.ca.states[single].single_rooted());
            EXPECT_FALSE(vc.ca.states[dbl].single_rooted());
            EXPECT_EQ(vc.repr[single].left, vc.repr[dbl].left);
            ++pairs[vc.repr[single].left];
        }
        // One pair per frontier of length 1..k-1.
        EXPECT_EQ(pairs.size(), (std::size_t{1} << k) - 2) << k;
        for (const auto& [u, n] : pairs) {
            EXPECT_EQ(n, 1u) << u;
            EXPECT_LT(u.size(), k);
        }
        EXPECT_TRUE(vc.unclassified.empty()) << k;
    }
}

TEST(VucaViaCompaction, FirstSymbolSwapIsIsomorphism) {
    for (std::size_t k = 1; k <= 8; ++k) EXPECT_TRUE(swap_is_isomorphism(build_vuca(k), k)) << k;
    for (std::size_t k = 2; k <= 6; ++k) EXPECT_TRUE(swap_is_isomorphism(vuca_via_compaction(k), k - 2)) << k;
}

TEST(VucaDot, ExportsBothStages) {
    std::ostringstream v, c;
    write_dot(v, build_vuca(3));
    EXPECT_NE(v.str().find("style=dashed"), std::string::npos);
    EXPECT_NE(v.str().find("label=\"0\""), std::string::npos);
    write_vca_dot(c, vertical_compaction(4));
    EXPECT_NE(c.str().find("|"), std::string::npos);
    EXPECT_NE(c.str().find("label=\"ε\""), std::string::npos);
}

// -- properties ----------------------------------------------------------------

TEST(VerticalProperty, RoundTrip) {
    for (const Word& w : test::cinf_words(24)) {
        const auto r = vertical_repr(w);
        ASSERT_EQ(r.left.size(), r.right.size());
        ASSERT_EQ(reconstruct(r.left, r.right), w) << r.str();
    }
}

TEST(VerticalProperty, FrontierEncodesMaximalityAndMinimality) {
    for (const Word& w : test::cinf_words(18)) {
        const auto p = classify(w);
        const Frontier u = psi(w);
        const Frontier v = psi(reversal(w));
        ASSERT_EQ(p.left_maximal, !has_at_or_after_1(u, FrontierSymbol::Two)) << w;
        ASSERT_EQ(p.left_minimal, !has_at_or_after_1(u, FrontierSymbol::Zero)) << w;
        ASSERT_EQ(p.right_maximal, !has_at_or_after_1(v, FrontierSymbol::Two)) << w;
        ASSERT_EQ(p.right_minimal, !has_at_or_after_1(v, FrontierSymbol::Zero)) << w;
        ASSERT_NE(u[0], FrontierSymbol::Zero);
        ASSERT_EQ(u.size(), height(w));
    }
}

TEST(VerticalProperty, VucaEndStateIdentifiesLeftMaximalExtension) {
    const auto& words = test::cinf_words(14);
    std::map<Frontier, Frontier> by_run;   // vuca_run -> psi(extend left)
    std::map<Frontier, Frontier> by_ext;   // psi(extend left) -> vuca_run
    for (const Word& w : words) {
        const Frontier r = vuca_run(psi(w));
        const Frontier e = psi(extend(w, Side::Left));
        auto [it, fresh] = by_run.emplace(r, e);
        ASSERT_EQ(it->second, e) << w;
        auto [jt, fresh2] = by_ext.emplace(e, r);
        ASSERT_EQ(jt->second, r) << w;
    }
}

TEST(VerticalProperty, VucaShape) {
    for (std::size_t k = 1; k <= 10; ++k) {
        const auto a = build_vuca(k);
        std::map<std::size_t, std::size_t> depth;
        for (const auto& s : a.states) ++depth[s.size()];
        for (std::size_t j = 0; j <= k; ++j) ASSERT_EQ(depth[j], std::size_t{1} << j) << k;
        for (std::size_t i = 0; i < a.states.size(); ++i) {
            for (const auto& e : a.edges[i]) {
                if (e.symbol == FrontierSymbol::Zero) {
                    ASSERT_EQ(e.target.back(), FrontierSymbol::Two) << a.states[i];
                } else {
                    ASSERT_EQ(e.target, a.states[i] + e.symbol);
                }
            }
        }
    }
}

TEST(VerticalProperty, ComplementSwapsFirstFrontierSymbol) {
    for (const Word& w : test::cinf_words(18)) {
        ASSERT_EQ(psi(complement(w)), swap_first(psi(w))) << w;
    }
}

TEST(VerticalProperty, WeakTargetIsWitnessIndependent) {
    // Every word with left frontier U0 gives the same longest left minimal suffix frontier.
    std::map<Frontier, std::vector<Word>> by_frontier;
    for (const Word& w : test::cinf_words(20)) by_frontier[psi(w)].push_back(w);
    std::size_t states_checked = 0;
    for (const Frontier& u : build_vuca(4).states) {
        if (u.empty()) continue;
        const auto it = by_frontier.find(u + FrontierSymbol::Zero);
        if (it == by_frontier.end() || it->second.size() < 2) continue;
        ++states_checked;
        const Frontier expected = vuca_weak_target(u);
        for (const Word& w : it->second) {
            std::optional<Frontier> got;
            for (std::size_t len = w.size() - 1; len > 0 && !got; --len) {
                if (classify(w.suffix(len)).left_minimal) got = psi(w.suffix(len));
            }
            ASSERT_TRUE(got) << w;
            ASSERT_EQ(*got, expected) << w;
        }
    }
    EXPECT_GE(states_checked, 14u);
}

TEST(VerticalProperty, CanonicalMinimalSharesMaximalExtension) {
    for (const Word& w : test::cinf_words(14)) {
        const Word m = canonical_minimal(w);
        ASSERT_TRUE(is_minimal_word(m)) << w;
        ASSERT_EQ(extend(m, Side::Both), extend(w, Side::Both)) << w;
    }
}
