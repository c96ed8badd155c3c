#pragma once

// Words with a sign.  A gap between consecutive occurrences of a factor is
// either empty (the occurrences are adjacent), a plain word (separated), or
// the formal inverse of the overlap (overlapped).  An inverse word stores
// the overlap as it reads in the ambient sequence, so two routes to the same
// gap compare equal letter for letter.

#include <string>

#include "cutseq/error.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

enum class WordSign { inverse = -1, empty = 0, positive = 1 };

inline int to_int(WordSign s) noexcept { return static_cast<int>(s); }

class SignedWord {
public:
    SignedWord() = default;  // the empty gap

    static SignedWord empty() { return SignedWord(); }

    static SignedWord positive(Word w) {
        if (w.empty()) throw EmptyWordError("a positive signed word must be nonempty");
        SignedWord s;
        s.sign_ = WordSign::positive;
        s.letters_ = std::move(w);
        return s;
    }

    static SignedWord inverse(Word w) {
        if (w.empty()) throw EmptyWordError("an inverse signed word must be nonempty");
        SignedWord s;
        s.sign_ = WordSign::inverse;
        s.letters_ = std::move(w);
        return s;
    }

    // Empty word maps to the empty sign, anything else to a positive word.
    static SignedWord of(Word w) {
        return w.empty() ? empty() : positive(std::move(w));
    }

    WordSign sign() const noexcept { return sign_; }
    const Word& letters() const noexcept { return letters_; }

    Index signed_length() const noexcept {
        return to_int(sign_) * letters_.length();
    }

    std::string render() const {
        switch (sign_) {
            case WordSign::empty: return "ε";
            case WordSign::positive: return letters_.str();
            case WordSign::inverse: return "(" + letters_.str() + ")^-1";
        }
        return {};
    }

    friend bool operator==(const SignedWord&, const SignedWord&) = default;

private:
    WordSign sign_ = WordSign::empty;
    Word letters_;
};

inline std::ostream& operator<<(std::ostream& os, const SignedWord& s) {
    return os << s.render();
}

// Reduced form of prefix_inverse^-1 * core * suffix_inverse^-1 in the free
// group on {a,b}.  The inputs arising from gap computations always collapse
// to a pure positive, empty or inverse word; anything else throws.
inline SignedWord signed_reduce(const Word& prefix_inverse, const SignedWord& core,
                                const Word& suffix_inverse) {
    const Word& mu2 = prefix_inverse;
    const Word& mu1 = suffix_inverse;

    auto inverse_or_empty = [](Word w) {
        return w.empty() ? SignedWord::empty() : SignedWord::inverse(std::move(w));
    };

    switch (core.sign()) {
        case WordSign::inverse:
            // mu2^-1 * V^-1 * mu1^-1 = (mu1 V mu2)^-1: the inverse core
            // absorbs both margins with no cancellation.
            return SignedWord::inverse(mu1 + core.letters() + mu2);
        case WordSign::empty:
            return inverse_or_empty(mu1 + mu2);
        case WordSign::positive:
            break;
    }

    const Word& g = core.letters();
    // Left junction: mu2^-1 * g cancels letterwise while the prefixes agree,
    // so it collapses only if one word is a prefix of the other.
    if (mu2.starts_with(g) && mu2.length() > g.length()) {
        // mu2 = g r  =>  r^-1 * mu1^-1 = (mu1 r)^-1
        return SignedWord::inverse(mu1 + mu2.drop_prefix(g));
    }
    if (!g.starts_with(mu2)) {
        throw IrreducibleProductError("left margin \"" + mu2.str() +
                                      "\" does not cancel against \"" + g.str() + "\"");
    }
    Word u = g.drop_prefix(mu2);
    // Right junction: u * mu1^-1 cancels while the suffixes agree.
    if (u.ends_with(mu1)) {
        Word r = u.drop_suffix(mu1);
        return r.empty() ? SignedWord::empty() : SignedWord::positive(std::move(r));
    }
    if (mu1.ends_with(u)) {
        return inverse_or_empty(mu1.drop_suffix(u));
    }
    throw IrreducibleProductError("right margin \"" + mu1.str() +
                                  "\" does not cancel against \"" + u.str() + "\"");
}

}  // namespace cutseq
