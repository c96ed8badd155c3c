#pragma once

// Finite words over the binary alphabet {a,b}.
//
// Indexing is 1-based everywhere: w[i,j] denotes letters i..j inclusive and
// w[i,i-1] is the empty word.  This matches the slice conventions of all the
// closed-form position and decomposition formulas in the library, which are
// stated with 1-based positions.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cutseq/error.hpp"

namespace cutseq {

using Index = std::int64_t;

enum class Letter : char { a = 'a', b = 'b' };

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }

inline Letter to_letter(char c) {
    if (c != 'a' && c != 'b') {
        throw InvalidAlphabetError(std::string("letter must be 'a' or 'b', got '") + c + "'");
    }
    return static_cast<Letter>(c);
}

constexpr Letter flipped(Letter l) noexcept {
    return l == Letter::a ? Letter::b : Letter::a;
}

class Word {
public:
    Word() = default;

    explicit Word(std::string_view text) {
        for (char c : text) (void)to_letter(c);
        s_.assign(text);
    }

    explicit Word(Letter l) : s_(1, to_char(l)) {}

    // Bypasses alphabet validation; for internal generators that only ever
    // emit 'a'/'b'.
    static Word unchecked(std::string s) {
        Word w;
        w.s_ = std::move(s);
        return w;
    }

    static Word run(Letter l, Index count) {
        if (count < 0) throw DomainError("letter run length must be >= 0");
        return unchecked(std::string(static_cast<std::size_t>(count), to_char(l)));
    }

    Index length() const noexcept { return static_cast<Index>(s_.size()); }
    bool empty() const noexcept { return s_.empty(); }

    // 1-based letter access.
    Letter at(Index i) const {
        if (i < 1 || i > length()) {
            throw DomainError("letter index " + std::to_string(i) + " out of range [1," +
                              std::to_string(length()) + "]");
        }
        return static_cast<Letter>(s_[static_cast<std::size_t>(i - 1)]);
    }

    Letter first() const { return at(1); }
    Letter last() const { return at(length()); }

    // w[i,j], letters i..j inclusive; j = i-1 yields the empty word.
    Word slice(Index i, Index j) const {
        if (j == i - 1 && i >= 1 && i <= length() + 1) return Word();
        if (i < 1 || j < i || j > length()) {
            throw DomainError("slice [" + std::to_string(i) + "," + std::to_string(j) +
                              "] out of range for word of length " + std::to_string(length()));
        }
        return unchecked(s_.substr(static_cast<std::size_t>(i - 1),
                                   static_cast<std::size_t>(j - i + 1)));
    }

    Word mirror() const {
        return unchecked(std::string(s_.rbegin(), s_.rend()));
    }

    bool palindrome() const {
        return std::equal(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(s_.size() / 2),
                          s_.rbegin());
    }

    Word& append(const Word& w) {
        s_ += w.s_;
        return *this;
    }
    Word& append(Letter l) {
        s_.push_back(to_char(l));
        return *this;
    }

    friend Word operator+(Word lhs, const Word& rhs) {
        lhs.append(rhs);
        return lhs;
    }

    // w^k for k >= 0.
    Word repeated(Index k) const {
        if (k < 0) throw DomainError("word power must be >= 0");
        std::string out;
        out.reserve(s_.size() * static_cast<std::size_t>(k));
        for (Index t = 0; t < k; ++t) out += s_;
        return unchecked(std::move(out));
    }

    Word drop_first() const {
        if (empty()) throw EmptyWordError("cannot drop the first letter of the empty word");
        return unchecked(s_.substr(1));
    }
    Word drop_last() const {
        if (empty()) throw EmptyWordError("cannot drop the last letter of the empty word");
        return unchecked(s_.substr(0, s_.size() - 1));
    }

    bool starts_with(const Word& p) const {
        return s_.size() >= p.s_.size() && s_.compare(0, p.s_.size(), p.s_) == 0;
    }
    bool ends_with(const Word& su) const {
        return s_.size() >= su.s_.size() &&
               s_.compare(s_.size() - su.s_.size(), su.s_.size(), su.s_) == 0;
    }
    bool contains(const Word& w) const {
        return s_.find(w.s_) != std::string::npos;
    }

    Word drop_prefix(const Word& p) const {
        if (!starts_with(p)) throw DomainError("word does not start with the given prefix");
        return unchecked(s_.substr(p.s_.size()));
    }
    Word drop_suffix(const Word& su) const {
        if (!ends_with(su)) throw DomainError("word does not end with the given suffix");
        return unchecked(s_.substr(0, s_.size() - su.s_.size()));
    }

    const std::string& str() const noexcept { return s_; }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string s_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

// Ascending 1-based positions of every (possibly overlapping) occurrence of
// `needle` in `haystack`.
inline std::vector<Index> find_occurrences(const Word& needle, const Word& haystack) {
    if (needle.empty()) throw EmptyWordError("occurrence search requires a nonempty word");
    std::vector<Index> out;
    const std::string& h = haystack.str();
    const std::string& n = needle.str();
    std::size_t pos = h.find(n);
    while (pos != std::string::npos) {
        out.push_back(static_cast<Index>(pos) + 1);
        pos = h.find(n, pos + 1);
    }
    return out;
}

inline Index letter_count(const Word& w, Letter l) {
    Index n = 0;
    for (char c : w.str()) {
        if (c == to_char(l)) ++n;
    }
    return n;
}

}  // namespace cutseq
