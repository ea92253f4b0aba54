#pragma once

// Repetitions with gap, the repetitivity functions I and G, the Kolakoski
// word, and the square/cube/overlap census of C-infinity words.

#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "cinf/derivative.hpp"
#include "cinf/errors.hpp"
#include "cinf/oracle.hpp"
#include "cinf/repetition_types.hpp"
#include "cinf/word.hpp"

namespace cinf {

inline std::size_t default_max_total(std::size_t n) { return 4 * n * n * n + 64; }

/// Shortest z, then lexicographically least, with u z u in C-infinity.
///
/// Breadth-first over z; a node is kept only while u z stays C-infinity.
inline GapRecord shortest_gap(const Word& u, std::optional<std::size_t> max_total = std::nullopt) {
    detail::require_cinf(u);
    if (u.empty()) throw Error("shortest_gap needs a nonempty word");
    const std::size_t budget = max_total.value_or(default_max_total(u.size()));

    std::deque<Word> frontier{Word{}};
    while (!frontier.empty()) {
        Word z = std::move(frontier.front());
        frontier.pop_front();
        if (2 * u.size() + z.size() > budget) throw BudgetExceeded(budget);
        if (is_cinf(u + z + u)) return GapRecord{u, z};
        for (Symbol s : {Symbol::One, Symbol::Two}) {
            Word next = z + s;
            if (is_cinf(u + next)) frontier.push_back(std::move(next));
        }
    }
    // Unreachable while u is extendable, which every C-infinity word is.
    throw InternalInconsistency("no right extension of " + u.str());
}

/// I(n) and G(n) for 1 <= n <= n_max over every C-infinity word of length n.
inline RepetitivityTable repetitivity(std::size_t n_max) {
    RepetitivityTable table;
    table.n_max = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        RepetitivityRow row;
        row.n = n;
        for (const Word& u : oracle::enumerate_cinf_exact(n)) {
            GapRecord rec = shortest_gap(u);
            if (row.words == 0 || rec.gap() < row.min_gap) {
                row.min_gap = rec.gap();
                row.min_witness = rec;
            }
            if (row.words == 0 || rec.gap() > row.max_gap) {
                row.max_gap = rec.gap();
                row.max_witness = rec;
            }
            if (rec.total() > row.max_total) row.max_total = rec.total();
            ++row.words;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Length-n prefix of the Kolakoski word 2211212212211...
inline Word kolakoski(std::size_t n) {
    Word::container s;
    s.reserve(n + 2);
    s = {Symbol::Two, Symbol::Two};
    Symbol next = Symbol::One;
    for (std::size_t r = 1; s.size() < n; ++r) {
        for (int i = 0; i < value_of(s[r]); ++i) s.push_back(next);
        next = flip(next);
    }
    s.resize(n);
    return Word(std::move(s));
}

/// Whether the run lengths of w spell a prefix of w. The last run may be cut
/// short by the end of w, so it only has to be no longer than its letter.
inline bool self_encodes(const Word& w) {
    std::size_t i = 0;
    std::size_t r = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const std::size_t len = j - i;
        if (r >= w.size()) return false;
        const auto expected = static_cast<std::size_t>(value_of(w[r]));
        if (j < w.size() ? len != expected : len > expected) return false;
        ++r;
        i = j;
    }
    return true;
}

/// Smallest period p of w with 2p < |w| <= 3p, if any: w is then x y x y x.
inline std::optional<std::size_t> overlap_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = (n + 2) / 3; 2 * p < n; ++p) {
        if (p == 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
        if (periodic) return p;
    }
    return std::nullopt;
}

inline bool is_square(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0 || n % 2 != 0) return false;
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
        if (w[i] != w[i + h]) return false;
    }
    return true;
}

inline bool is_cube(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0 || n % 3 != 0) return false;
    const std::size_t p = n / 3;
    for (std::size_t i = p; i < n; ++i) {
        if (w[i] != w[i - p]) return false;
    }
    return true;
}

struct CensusReport {
    std::size_t n_max = 0;
    std::size_t words = 0;  // nonempty C-infinity words of length <= n_max
    std::size_t squares = 0;
    std::size_t cubes = 0;
    std::size_t overlaps = 0;
    std::size_t max_overlap_length = 0;
    std::size_t overlaps_longer_than_55 = 0;
    std::map<std::size_t, std::size_t> squares_by_length;
    std::map<std::size_t, std::size_t> overlaps_by_length;
    std::vector<Word> longest_overlaps;
};

/// Counts the C-infinity words of length <= n_max that are squares, cubes
/// or overlaps.
inline CensusReport census(std::size_t n_max) {
    CensusReport rep;
    rep.n_max = n_max;
    oracle::EnumerationCursor cursor([](const std::string& w) { return oracle::naive::in_cinf(w); },
                                     n_max);
    while (auto w = cursor.next()) {
        if (w->empty()) continue;
        ++rep.words;
        if (is_square(*w)) {
            ++rep.squares;
            ++rep.squares_by_length[w->size()];
        }
        if (is_cube(*w)) ++rep.cubes;
        if (overlap_period(*w)) {
            ++rep.overlaps;
            ++rep.overlaps_by_length[w->size()];
            if (w->size() > 55) ++rep.overlaps_longer_than_55;
            if (w->size() > rep.max_overlap_length) {
                rep.max_overlap_length = w->size();
                rep.longest_overlaps.clear();
            }
            if (w->size() == rep.max_overlap_length) rep.longest_overlaps.push_back(*w);
        }
    }
    return rep;
}

/// Measured max |u z u| against |u|^2.72. Nothing is thresholded.
struct BoundReport {
    static constexpr double exponent = 2.72;
    // Constants of the existence proof, kept for reference only.
    static constexpr double p = 0.50084;
    static constexpr double gamma = 1.70951;
    static constexpr double gamma_prime = 2.71701;

    struct Row {
        std::size_t n = 0;
        std::size_t max_total = 0;
        double ratio = 0.0;  // max_total / n^exponent
        bool pass = false;   // max_total <= fitted_constant * n^exponent
    };

    std::vector<Row> rows;
    double fitted_constant = 0.0;
    /// Running maximum of the ratio after each n; stable once it stops moving.
    std::vector<double> running_constant;
};

inline BoundReport bound_check(std::size_t n_max) {
    BoundReport rep;
    const RepetitivityTable table = repetitivity(n_max);
    double running = 0.0;
    for (const auto& row : table.rows) {
        BoundReport::Row r;
        r.n = row.n;
        r.max_total = row.max_total;
        r.ratio = static_cast<double>(row.max_total) /
                  std::pow(static_cast<double>(row.n), BoundReport::exponent);
        running = std::max(running, r.ratio);
        rep.running_constant.push_back(running);
        rep.rows.push_back(r);
    }
    rep.fitted_constant = running;
    for (auto& r : rep.rows) {
        r.pass = static_cast<double>(r.max_total) <=
                 rep.fitted_constant * std::pow(static_cast<double>(r.n), BoundReport::exponent) + 1e-9;
    }
    return rep;
}

}  // namespace cinf
