#pragma once

// Kernel and envelope words.
//
// For digit d there are d types of kernel words,
//
//   K_{d,m,i} = delta_m * F_{d,m}^i * F_{d,m-1} * delta_{m-1}^-1,
//
// with order m >= 0 and type 0 <= i <= d-1 (delta_m is the last letter of
// F_{d,m}; the trailing inverse removes the final letter).  Kernel words are
// palindromes, are totally ordered by (m, i), and every factor of the fixed
// point contains a unique maximal one — its kernel Ker(w).  The envelope
// word E_{d,m,i} is the longest factor whose kernel is K_{d,m,i}; it is the
// kernel padded on both sides by constant margins of length f_{d,m} - 1.
// Any factor w sits inside its envelope, which yields the canonical
// decomposition
//
//   w = F_{d,m}[x, f_{d,m}-1] * K_{d,m,i} * (delta_{m+1} F_{d,m})[1, y]
//
// with 1 <= x <= f_{d,m} and 0 <= y <= f_{d,m}-1 (StarCoords below).

#include <compare>
#include <optional>
#include <string>

#include "cutseq/error.hpp"
#include "cutseq/substitution.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

class KernelIndex {
public:
    KernelIndex(int d, int m, int i) : d_(d), m_(m), i_(i) {
        (void)SeqParams(d);
        if (m < 0) throw DomainError("kernel order m must be >= 0, got " + std::to_string(m));
        if (i < 0 || i > d - 1) {
            throw DomainError("kernel type i must lie in [0," + std::to_string(d - 1) +
                              "], got " + std::to_string(i));
        }
    }

    int d() const noexcept { return d_; }
    int m() const noexcept { return m_; }
    int i() const noexcept { return i_; }
    SeqParams params() const { return SeqParams(d_); }

    std::string to_string() const {
        return "(" + std::to_string(d_) + "," + std::to_string(m_) + "," + std::to_string(i_) + ")";
    }

    friend bool operator==(const KernelIndex&, const KernelIndex&) = default;

private:
    int d_;
    int m_;
    int i_;
};

// Total order on one kernel set: lexicographic on (m, i).  Note the order is
// not monotone in word length.
inline std::strong_ordering kernel_cmp(const KernelIndex& lhs, const KernelIndex& rhs) {
    if (lhs.d() != rhs.d()) {
        throw DomainError("kernel order is defined within a single kernel set; got d=" +
                          std::to_string(lhs.d()) + " and d=" + std::to_string(rhs.d()));
    }
    if (auto c = lhs.m() <=> rhs.m(); c != 0) return c;
    return lhs.i() <=> rhs.i();
}

inline Index kernel_length(const KernelIndex& k) {
    LengthTable lt(k.params());
    return checked_add(checked_mul(k.i(), lt.at(k.m())), lt.at(k.m() - 1));
}

inline Index envelope_length(const KernelIndex& k) {
    LengthTable lt(k.params());
    Index len = checked_add(checked_mul(k.i() + 2, lt.at(k.m())), lt.at(k.m() - 1));
    return checked_add(len, -2);
}

inline Word kernel_word(const KernelIndex& k, std::size_t cap = kDefaultWordCap) {
    check_word_cap(kernel_length(k), cap);
    SeqParams d = k.params();
    Word w(standard_last_letter(k.m()));
    if (k.i() > 0) w.append(standard_word(d, k.m(), cap).repeated(k.i()));
    w.append(standard_word(d, k.m() - 1, cap).drop_last());
    return w;
}

// Same word, built through the two-step recursion
//   K_{d,m,0} = K_{d,m-2,d-1} * K_{d,m-2,d-2}^-1 * K_{d,m-2,d-1}   (m >= 2)
//   K_{d,m,i} = [K_{d,m,0} * K_{d,m-1,d-1}]^i * K_{d,m,0}          (i >= 1)
// from the bases K_{d,0,i} = a^{i+1} and K_{d,1,0} = b.  Kept as an
// independent construction for cross-testing against kernel_word.
inline Word kernel_word_recursive(const KernelIndex& k, std::size_t cap = kDefaultWordCap) {
    check_word_cap(kernel_length(k), cap);
    const int d = k.d();
    if (k.m() == 0) return Word::run(Letter::a, k.i() + 1);
    if (k.m() == 1 && k.i() == 0) return Word(Letter::b);
    if (k.i() == 0) {
        Word t = kernel_word_recursive(KernelIndex(d, k.m() - 2, d - 1), cap);
        Word s = kernel_word_recursive(KernelIndex(d, k.m() - 2, d - 2), cap);
        if (!t.ends_with(s)) {
            throw IrreducibleProductError("kernel recursion: " + s.str() +
                                          " is not a suffix of " + t.str());
        }
        return t.drop_suffix(s) + t;
    }
    Word k0 = kernel_word_recursive(KernelIndex(d, k.m(), 0), cap);
    Word kp = kernel_word_recursive(KernelIndex(d, k.m() - 1, d - 1), cap);
    return (k0 + kp).repeated(k.i()) + k0;
}

// Margins mu_1, mu_2 with E_{d,m,i} = mu_1 * K_{d,m,i} * mu_2: the order-0
// kernel of the next order minus its first (resp. last) letter.  Both have
// length f_{d,m} - 1 and mirror each other.
inline std::pair<Word, Word> envelope_margins(SeqParams d, int m,
                                              std::size_t cap = kDefaultWordCap) {
    if (m < 0) throw DomainError("order m must be >= 0");
    Word k0 = kernel_word(KernelIndex(d.d(), m + 1, 0), cap);
    return {k0.drop_first(), k0.drop_last()};
}

inline Word envelope_word(const KernelIndex& k, std::size_t cap = kDefaultWordCap) {
    check_word_cap(envelope_length(k), cap);
    SeqParams d = k.params();
    // F^{i+1} * F_{m-1} * F minus the trailing delta_m, delta_{m-1}.
    Word f = standard_word(d, k.m(), cap);
    Word w = f.repeated(k.i() + 1) + standard_word(d, k.m() - 1, cap) + f;
    return w.drop_last().drop_last();
}

struct KernelHit {
    KernelIndex index;
    Index position;  // first occurrence inside the queried word, 1-based
};

// Kernel word of w: the order-maximal kernel word occurring in w.  Defined
// for any nonempty word over {a,b}, factor or not; a single letter already
// matches K_{d,0,0} = a or K_{d,1,0} = b.  Kernel lengths are not monotone
// in the kernel order, so the scan visits every order with
// f_{d,m-1} <= |w| rather than cutting off at the first oversized word.
inline KernelHit kernel_of(const Word& w, SeqParams d) {
    if (w.empty()) throw EmptyWordError("the empty word has no kernel");
    LengthTable lt(d);
    std::optional<KernelHit> best;
    for (int m = 0; lt.at(m - 1) <= w.length(); ++m) {
        for (int i = 0; i < d.d(); ++i) {
            KernelIndex k(d.d(), m, i);
            if (kernel_length(k) > w.length()) break;
            auto occ = find_occurrences(kernel_word(k), w);
            if (!occ.empty()) best = KernelHit{k, occ.front()};
        }
    }
    return *best;  // always hit: w contains a or b
}

struct StarCoords {
    KernelIndex kernel;
    Index x;
    Index y;
};

// Rebuilds the factor a StarCoords value describes.
inline Word reassemble(const StarCoords& sc, std::size_t cap = kDefaultWordCap) {
    SeqParams d = sc.kernel.params();
    Word f = standard_word(d, sc.kernel.m(), cap);
    Word head = f.slice(sc.x, f.length() - 1);
    Word tail = (Word(standard_last_letter(sc.kernel.m() + 1)) + f).slice(1, sc.y);
    return head + kernel_word(sc.kernel, cap) + tail;
}

// Canonical decomposition of a factor around its kernel.  Rejects any word
// that is not a factor of the fixed point: the kernel must occur exactly
// once, and the margins must match the envelope's margins (unique kernel
// decomposition alone does not imply membership).
inline StarCoords star_decompose(const Word& w, SeqParams d,
                                 std::size_t cap = kDefaultWordCap) {
    KernelHit hit = kernel_of(w, d);
    Word kw = kernel_word(hit.index, cap);
    auto occ = find_occurrences(kw, w);
    if (occ.size() != 1) {
        throw NotAFactorError("kernel " + kw.str() + " occurs " + std::to_string(occ.size()) +
                              " times in \"" + w.str() + "\"");
    }
    const Index q = occ.front();
    Word mu1 = w.slice(1, q - 1);
    Word mu2 = w.slice(q + kw.length(), w.length());

    LengthTable lt(d);
    const Index f = lt.at(hit.index.m());
    const Index x = f - mu1.length();
    const Index y = mu2.length();
    if (x < 1 || y > f - 1) {
        throw NotAFactorError("margins of \"" + w.str() + "\" exceed the envelope margins");
    }
    Word fw = standard_word(d, hit.index.m(), cap);
    if (mu1 != fw.slice(x, f - 1)) {
        throw NotAFactorError("prefix margin of \"" + w.str() +
                              "\" is not a suffix of the envelope margin");
    }
    Word ext = Word(standard_last_letter(hit.index.m() + 1)) + fw;
    if (mu2 != ext.slice(1, y)) {
        throw NotAFactorError("suffix margin of \"" + w.str() +
                              "\" is not a prefix of the envelope margin");
    }
    return StarCoords{hit.index, x, y};
}

// Factor test: the kernel of w must occur in w exactly once, and w must
// occur in the envelope word of its kernel.
inline bool is_factor(const Word& w, SeqParams d, std::size_t cap = kDefaultWordCap) {
    if (w.empty()) throw EmptyWordError("the empty word is not a queryable factor");
    KernelHit hit = kernel_of(w, d);
    if (find_occurrences(kernel_word(hit.index, cap), w).size() != 1) return false;
    return envelope_word(hit.index, cap).contains(w);
}

}  // namespace cutseq
