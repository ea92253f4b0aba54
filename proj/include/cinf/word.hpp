#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cinf/errors.hpp"

namespace cinf {

/// Letters of the binary alphabet {1,2}. The numeric value is the letter.
enum class Symbol : std::uint8_t { One = 1, Two = 2 };

/// Letters of the frontier alphabet {0,1,2}.
enum class FrontierSymbol : std::uint8_t { Zero = 0, One = 1, Two = 2 };

template <class Sym>
struct alphabet_traits;

template <>
struct alphabet_traits<Symbol> {
    static constexpr const char* name = "word";
    static constexpr bool valid(char c) noexcept { return c == '1' || c == '2'; }
    static constexpr Symbol from_char(char c) noexcept { return static_cast<Symbol>(c - '0'); }
};

template <>
struct alphabet_traits<FrontierSymbol> {
    static constexpr const char* name = "frontier";
    static constexpr bool valid(char c) noexcept { return c == '0' || c == '1' || c == '2'; }
    static constexpr FrontierSymbol from_char(char c) noexcept {
        return static_cast<FrontierSymbol>(c - '0');
    }
};

template <class Sym>
constexpr char to_char(Sym s) noexcept {
    return static_cast<char>('0' + static_cast<int>(s));
}

constexpr Symbol flip(Symbol s) noexcept {
    return s == Symbol::One ? Symbol::Two : Symbol::One;
}

constexpr Symbol symbol_of(int value) noexcept {
    return value == 1 ? Symbol::One : Symbol::Two;
}

constexpr int value_of(Symbol s) noexcept { return static_cast<int>(s); }

/// A finite sequence over a small alphabet, stored one byte per letter.
///
/// Ordering via `<=>` is plain lexicographic on the letters; use
/// `shortlex_less` for (length, lexicographic) order.
template <class Sym>
class BasicWord {
public:
    using value_type = Sym;
    using container = std::vector<Sym>;
    using const_iterator = typename container::const_iterator;

    BasicWord() = default;
    explicit BasicWord(container symbols) : symbols_(std::move(symbols)) {}
    BasicWord(std::initializer_list<Sym> symbols) : symbols_(symbols) {}
    template <class It>
    BasicWord(It first, It last) : symbols_(first, last) {}

    /// Parses '1'/'2' (or '0'/'1'/'2' for frontiers). Empty text is the empty word.
    static BasicWord parse(std::string_view text) {
        container out;
        out.reserve(text.size());
        for (char c : text) {
            if (!alphabet_traits<Sym>::valid(c)) {
                throw ParseError(std::string("invalid ") + alphabet_traits<Sym>::name +
                                 " symbol '" + c + "' in \"" + std::string(text) + "\"");
            }
            out.push_back(alphabet_traits<Sym>::from_char(c));
        }
        return BasicWord(std::move(out));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Sym operator[](std::size_t i) const noexcept { return symbols_[i]; }
    Sym front() const noexcept { return symbols_.front(); }
    Sym back() const noexcept { return symbols_.back(); }
    const_iterator begin() const noexcept { return symbols_.begin(); }
    const_iterator end() const noexcept { return symbols_.end(); }
    std::span<const Sym> span() const noexcept { return symbols_; }
    const container& symbols() const noexcept { return symbols_; }

    void push_back(Sym s) { symbols_.push_back(s); }
    void pop_back() { symbols_.pop_back(); }

    BasicWord prefix(std::size_t n) const {
        return BasicWord(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n));
    }
    BasicWord suffix(std::size_t n) const {
        return BasicWord(symbols_.end() - static_cast<std::ptrdiff_t>(n), symbols_.end());
    }
    BasicWord substr(std::size_t pos, std::size_t len) const {
        auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
        return BasicWord(first, first + static_cast<std::ptrdiff_t>(len));
    }

    bool starts_with(const BasicWord& p) const {
        return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
    }
    bool ends_with(const BasicWord& s) const {
        return s.size() <= size() && std::equal(s.begin(), s.end(), end() - s.size());
    }

    /// Text form; the empty word renders as an empty string.
    std::string str() const {
        std::string out;
        out.reserve(size());
        for (Sym s : symbols_) out.push_back(to_char(s));
        return out;
    }

    /// Text form with the empty word rendered as "ε".
    std::string display() const { return empty() ? std::string("ε") : str(); }

    BasicWord& operator+=(const BasicWord& rhs) {
        symbols_.insert(symbols_.end(), rhs.begin(), rhs.end());
        return *this;
    }
    BasicWord& operator+=(Sym s) {
        symbols_.push_back(s);
        return *this;
    }
    friend BasicWord operator+(BasicWord lhs, const BasicWord& rhs) { return lhs += rhs; }
    friend BasicWord operator+(BasicWord lhs, Sym s) { return lhs += s; }
    friend BasicWord operator+(Sym s, const BasicWord& rhs) {
        BasicWord out;
        out.symbols_.reserve(rhs.size() + 1);
        out.symbols_.push_back(s);
        out += rhs;
        return out;
    }

    friend bool operator==(const BasicWord&, const BasicWord&) = default;
    friend auto operator<=>(const BasicWord& a, const BasicWord& b) {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicWord& w) {
        return os << w.display();
    }
    // Picked up by test frameworks that would otherwise print the container.
    friend void PrintTo(const BasicWord& w, std::ostream* os) { *os << w.display(); }

private:
    container symbols_;
};

using Word = BasicWord<Symbol>;
using Frontier = BasicWord<FrontierSymbol>;

inline Word operator""_w(const char* text, std::size_t n) {
    return Word::parse(std::string_view(text, n));
}
inline Frontier operator""_f(const char* text, std::size_t n) {
    return Frontier::parse(std::string_view(text, n));
}

/// (length, lexicographic) order.
struct ShortlexLess {
    template <class Sym>
    bool operator()(const BasicWord<Sym>& a, const BasicWord<Sym>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

template <class Sym>
bool shortlex_less(const BasicWord<Sym>& a, const BasicWord<Sym>& b) {
    return ShortlexLess{}(a, b);
}

inline Word complement(const Word& w) {
    Word::container out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(flip(s));
    return Word(std::move(out));
}

template <class Sym>
BasicWord<Sym> reversal(const BasicWord<Sym>& w) {
    return BasicWord<Sym>(w.symbols().rbegin(), w.symbols().rend());
}

/// Sorts in shortlex order and drops duplicates.
template <class Sym>
void normalize(std::vector<BasicWord<Sym>>& words) {
    std::sort(words.begin(), words.end(), ShortlexLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace cinf

template <class Sym>
struct std::hash<cinf::BasicWord<Sym>> {
    std::size_t operator()(const cinf::BasicWord<Sym>& w) const noexcept {
        std::size_t h = 1469598103934665603ull ^ w.size();
        for (Sym s : w) {
            h ^= static_cast<std::size_t>(s) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};
