#pragma once

#include <cstddef>
#include <vector>

#include "cinf/word.hpp"

namespace cinf {

/// A repetition u z u with the shortest (then lexicographically least) gap z.
struct GapRecord {
    Word u;
    Word z;

    std::size_t gap() const noexcept { return z.size(); }
    std::size_t total() const noexcept { return 2 * u.size() + z.size(); }
    Word repetition() const { return u + z + u; }

    friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

/// Minimal and maximal shortest-gap over all C-infinity words of one length.
///
/// `min_gap` is the repetitivity index I(n) and `max_gap` its dual G(n).
/// Witnesses are the first words in shortlex order attaining each value.
struct RepetitivityRow {
    std::size_t n = 0;
    std::size_t words = 0;
    std::size_t min_gap = 0;
    std::size_t max_gap = 0;
    GapRecord min_witness;
    GapRecord max_witness;
    std::size_t max_total = 0;

    friend bool operator==(const RepetitivityRow&, const RepetitivityRow&) = default;
};

struct RepetitivityTable {
    std::size_t n_max = 0;
    std::vector<RepetitivityRow> rows;  // rows[i].n == i + 1

    friend bool operator==(const RepetitivityTable&, const RepetitivityTable&) = default;
};

}  // namespace cinf
