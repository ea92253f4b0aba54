#pragma once

// Brute-force reference implementations used to check the fast modules.
//
// Everything here works on plain digit strings and follows the textbook
// definitions literally: the derivative is the five-case definition on the
// run-length encoding, membership is checked level by level, and minimal
// forbidden words and gaps are found by scanning candidates. Nothing in
// this header calls into the derivative, automaton or vertical code.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cinf/repetition_types.hpp"
#include "cinf/word.hpp"

namespace cinf::oracle {

namespace naive {

/// Run-length encoding as a digit string, or nullopt if a run exceeds 2.
inline std::optional<std::string> delta(const std::string& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (j - i > 2) return std::nullopt;
        out.push_back(static_cast<char>('0' + (j - i)));
        i = j;
    }
    return out;
}

/// The derivative by its five defining cases.
inline std::optional<std::string> derive(const std::string& w) {
    if (w.empty()) return std::string();
    auto d = delta(w);
    if (!d) return std::nullopt;
    const std::string& e = *d;
    if (e == "1") return std::string();
    if (e == "2") return e;
    const char first = e.front();
    const char last = e.back();
    if (first == '2' && last == '2') return e;
    if (first == '1' && last == '2') return e.substr(1);
    if (first == '2' && last == '1') return e.substr(0, e.size() - 1);
    return e.substr(1, e.size() - 2);  // 1x1
}

/// w in C^k: D^j(w) defined and differentiable for every j < k.
inline bool in_ck(std::string w, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
        if (w.empty()) return true;
        auto d = derive(w);
        if (!d) return false;
        w = std::move(*d);
    }
    return true;
}

inline bool in_cinf(std::string w) {
    while (!w.empty()) {
        auto d = derive(w);
        if (!d) return false;
        w = std::move(*d);
    }
    return true;
}

}  // namespace naive

/// Yields, in (length, lexicographic) order, every word of length <= max_len
/// satisfying a prefix-closed predicate. Each length is built by extending
/// the previous one letter at a time, so rejected prefixes prune the search.
class EnumerationCursor {
public:
    using Predicate = std::function<bool(const std::string&)>;

    EnumerationCursor(Predicate keep, std::size_t max_len)
        : keep_(std::move(keep)), max_len_(max_len) {
        if (keep_(std::string())) level_.push_back(std::string());
    }

    /// Next word, or nullopt when exhausted.
    std::optional<Word> next() {
        while (pos_ == level_.size()) {
            if (length_ == max_len_ || level_.empty()) return std::nullopt;
            advance();
        }
        return Word::parse(level_[pos_++]);
    }

    std::size_t length() const noexcept { return length_; }

private:
    void advance() {
        std::vector<std::string> next;
        for (const auto& w : level_) {
            for (char c : {'1', '2'}) {
                std::string v = w + c;
                if (keep_(v)) next.push_back(std::move(v));
            }
        }
        level_ = std::move(next);
        pos_ = 0;
        ++length_;
    }

    Predicate keep_;
    std::size_t max_len_;
    std::size_t length_ = 0;
    std::size_t pos_ = 0;
    std::vector<std::string> level_;
};

inline std::vector<Word> drain(EnumerationCursor cursor) {
    std::vector<Word> out;
    while (auto w = cursor.next()) out.push_back(std::move(*w));
    return out;
}

/// C^k words of length <= n.
inline std::vector<Word> enumerate_ck(std::size_t k, std::size_t n) {
    return drain(EnumerationCursor([k](const std::string& w) { return naive::in_ck(w, k); }, n));
}

/// C-infinity words of length <= n.
inline std::vector<Word> enumerate_cinf(std::size_t n) {
    return drain(EnumerationCursor([](const std::string& w) { return naive::in_cinf(w); }, n));
}

/// C-infinity words of length exactly n, in lexicographic order.
inline std::vector<Word> enumerate_cinf_exact(std::size_t n) {
    EnumerationCursor cursor([](const std::string& w) { return naive::in_cinf(w); }, n);
    std::vector<Word> out;
    while (auto w = cursor.next()) {
        if (w->size() == n) out.push_back(std::move(*w));
    }
    return out;
}

/// Minimal forbidden words of C^k up to length max_len: v is not in C^k while
/// both of its maximal proper factors are.
inline std::vector<Word> brute_mf(std::size_t k, std::size_t max_len = 24) {
    std::vector<Word> out;
    EnumerationCursor cursor([k](const std::string& w) { return naive::in_ck(w, k); },
                             max_len == 0 ? 0 : max_len - 1);
    while (auto w = cursor.next()) {
        const std::string prefix = w->str();
        for (char c : {'1', '2'}) {
            const std::string v = prefix + c;
            if (!naive::in_ck(v, k) && naive::in_ck(v.substr(1), k)) out.push_back(Word::parse(v));
        }
    }
    normalize(out);
    return out;
}

namespace detail {

// Depth-first search for a gap of exactly `len` letters.
inline bool find_gap_of_length(const std::string& u, std::string& z, std::size_t len) {
    if (z.size() == len) return naive::in_cinf(u + z + u);
    for (char c : {'1', '2'}) {
        z.push_back(c);
        // u z is a factor of u z u, so it must already be C-infinity.
        if (naive::in_cinf(u + z) && find_gap_of_length(u, z, len)) return true;
        z.pop_back();
    }
    return false;
}

}  // namespace detail

/// Shortest, then lexicographically least, z with u z u in C-infinity, by
/// trying every gap length in turn. Returns nullopt past `max_gap`.
inline std::optional<GapRecord> brute_gap(const Word& u, std::size_t max_gap = 4096) {
    const std::string us = u.str();
    for (std::size_t len = 0; len <= max_gap; ++len) {
        std::string z;
        if (detail::find_gap_of_length(us, z, len)) return GapRecord{u, Word::parse(z)};
    }
    return std::nullopt;
}

/// I(n) and G(n) for every 1 <= n <= n_max by exhaustive recomputation.
inline RepetitivityTable brute_gap_table(std::size_t n_max) {
    RepetitivityTable table;
    table.n_max = n_max;
    EnumerationCursor cursor([](const std::string& w) { return naive::in_cinf(w); }, n_max);
    RepetitivityRow* row = nullptr;
    while (auto u = cursor.next()) {
        if (u->empty()) continue;
        if (!row || row->n != u->size()) {
            table.rows.push_back(RepetitivityRow{});
            row = &table.rows.back();
            row->n = u->size();
        }
        auto rec = brute_gap(*u);
        if (!rec) continue;  // reported as a shortfall in `words`
        const bool first = row->words == 0;
        ++row->words;
        if (first || rec->gap() < row->min_gap) {
            row->min_gap = rec->gap();
            row->min_witness = *rec;
        }
        if (first || rec->gap() > row->max_gap) {
            row->max_gap = rec->gap();
            row->max_witness = *rec;
        }
        if (rec->total() > row->max_total) row->max_total = rec->total();
    }
    return table;
}

}  // namespace cinf::oracle
