#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "cinf/oracle.hpp"
#include "cinf/word.hpp"

namespace cinf::test {

/// Nonempty C-infinity words of length <= n, enumerated once per process.
inline const std::vector<Word>& cinf_words(std::size_t n) {
    static std::map<std::size_t, std::vector<Word>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto ws = oracle::enumerate_cinf(n);
        std::erase_if(ws, [](const Word& w) { return w.empty(); });
        it = cache.emplace(n, std::move(ws)).first;
    }
    return it->second;
}

inline bool contains(const std::vector<Word>& sorted_shortlex, const Word& w) {
    return std::binary_search(sorted_shortlex.begin(), sorted_shortlex.end(), w, ShortlexLess{});
}

}  // namespace cinf::test
