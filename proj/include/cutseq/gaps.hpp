#pragma once

// Gap structure.  Every factor of the fixed point occurs infinitely often,
// and the gap between consecutive occurrences takes exactly two distinct
// values G_A (the first gap) and G_B (the first differing gap, reached at
// occurrence index B).  The sequence of A/B labels is itself a substitution
// image of the fixed point, depending only on the type i of the factor's
// kernel:
//
//   labels = sigma_{d-i-1}(F_{d,inf})  for 0 <= i <= d-2   (a -> A, b -> B)
//   labels = F_{d,inf}                 for i = d-1
//
// For kernel words the two gaps are themselves kernel words or inverses of
// kernel words; for an arbitrary factor they follow by cancelling the
// factor's margins against its kernel's gaps.

#include <string>
#include <utility>

#include "cutseq/error.hpp"
#include "cutseq/kernel.hpp"
#include "cutseq/signed_word.hpp"
#include "cutseq/substitution.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

struct GapProfile {
    SignedWord gap_a;
    SignedWord gap_b;
    int switch_index;       // B = d-i for i <= d-2, d+1 for i = d-1
    SequenceKind labels;    // source sequence of the A/B labels
};

// Label-sequence kind for a factor whose kernel has type i.
inline SequenceKind label_kind(SeqParams d, int i) {
    if (i < 0 || i > d.d() - 1) {
        throw DomainError("kernel type i must lie in [0," + std::to_string(d.d() - 1) + "]");
    }
    return i == d.d() - 1 ? SequenceKind::plain() : SequenceKind::image(d.d() - i - 1);
}

inline int switch_index(SeqParams d, int i) {
    return i == d.d() - 1 ? d.d() + 1 : d.d() - i;
}

// First two distinct gaps of a kernel word:
//   i = 0:           G_A = eps (m=0) or K_{d,m-1,d-1},  G_B = K_{d,m+1,0}
//   1 <= i <= d-2:   G_A = K_{d,m,i-1}^-1,               G_B = K_{d,m+1,0}
//   i = d-1:         G_A = K_{d,m+1,0},                  G_B = K_{d,m,d-2}^-1
inline GapProfile kernel_gaps(const KernelIndex& k, std::size_t cap = kDefaultWordCap) {
    const int d = k.d();
    const int m = k.m();
    const int i = k.i();
    SignedWord ga, gb;
    if (i == 0) {
        ga = (m == 0) ? SignedWord::empty()
                      : SignedWord::positive(kernel_word(KernelIndex(d, m - 1, d - 1), cap));
        gb = SignedWord::positive(kernel_word(KernelIndex(d, m + 1, 0), cap));
    } else if (i <= d - 2) {
        ga = SignedWord::inverse(kernel_word(KernelIndex(d, m, i - 1), cap));
        gb = SignedWord::positive(kernel_word(KernelIndex(d, m + 1, 0), cap));
    } else {
        ga = SignedWord::positive(kernel_word(KernelIndex(d, m + 1, 0), cap));
        gb = SignedWord::inverse(kernel_word(KernelIndex(d, m, d - 2), cap));
    }
    return GapProfile{std::move(ga), std::move(gb), switch_index(k.params(), i),
                      label_kind(k.params(), i)};
}

// First two distinct gaps of an envelope word; same switch index and label
// sequence as the kernel of the same index, with envelope-word gaps:
//   i = 0:           G_A = eps (m=0) or E_{d,m-1,d-1}^-1
//   1 <= i <= d-2:   G_A = E_{d,m,i-1}^-1
//   i = d-1:         G_A = b (m=0) or E_{d,m-1,d-2}^-1
//   G_B = b (m=0) or E_{d,m-1,d-2}^-1 for i <= d-2;  E_{d,m,d-2}^-1 for i = d-1.
inline GapProfile envelope_gaps(const KernelIndex& k, std::size_t cap = kDefaultWordCap) {
    const int d = k.d();
    const int m = k.m();
    const int i = k.i();
    SignedWord ga, gb;
    if (i == 0) {
        ga = (m == 0) ? SignedWord::empty()
                      : SignedWord::inverse(envelope_word(KernelIndex(d, m - 1, d - 1), cap));
    } else if (i <= d - 2) {
        ga = SignedWord::inverse(envelope_word(KernelIndex(d, m, i - 1), cap));
    } else {
        ga = (m == 0) ? SignedWord::positive(Word(Letter::b))
                      : SignedWord::inverse(envelope_word(KernelIndex(d, m - 1, d - 2), cap));
    }
    if (i <= d - 2) {
        gb = (m == 0) ? SignedWord::positive(Word(Letter::b))
                      : SignedWord::inverse(envelope_word(KernelIndex(d, m - 1, d - 2), cap));
    } else {
        gb = SignedWord::inverse(envelope_word(KernelIndex(d, m, d - 2), cap));
    }
    return GapProfile{std::move(ga), std::move(gb), switch_index(k.params(), i),
                      label_kind(k.params(), i)};
}

namespace detail {

inline std::pair<Word, Word> star_margins(const StarCoords& sc,
                                          std::size_t cap = kDefaultWordCap) {
    SeqParams d = sc.kernel.params();
    Word f = standard_word(d, sc.kernel.m(), cap);
    Word mu1 = f.slice(sc.x, f.length() - 1);
    Word mu2 = (Word(standard_last_letter(sc.kernel.m() + 1)) + f).slice(1, sc.y);
    return {std::move(mu1), std::move(mu2)};
}

inline GapProfile factor_gaps_at(const StarCoords& sc, std::size_t cap) {
    GapProfile kg = kernel_gaps(sc.kernel, cap);
    auto [mu1, mu2] = star_margins(sc, cap);
    // G_p(w) = mu2^-1 * G_p(Ker(w)) * mu1^-1
    SignedWord ga = signed_reduce(mu2, kg.gap_a, mu1);
    SignedWord gb = signed_reduce(mu2, kg.gap_b, mu1);
    return GapProfile{std::move(ga), std::move(gb), kg.switch_index, kg.labels};
}

}  // namespace detail

inline GapProfile factor_gaps(const Word& w, SeqParams d, std::size_t cap = kDefaultWordCap) {
    return detail::factor_gaps_at(star_decompose(w, d, cap), cap);
}

// Prefix of the fixed point before the first occurrence of w; always a
// plain word, F_{d,m}[1, x-1] in star coordinates.
inline Word gap_zero(const Word& w, SeqParams d, std::size_t cap = kDefaultWordCap) {
    StarCoords sc = star_decompose(w, d, cap);
    return standard_word(d, sc.kernel.m(), cap).slice(1, sc.x - 1);
}

// First `count` labels of the gap sequence for kernel type i, as a string
// over {A,B}.
inline std::string gap_sequence_labels(SeqParams d, int i, Index count) {
    if (count < 0) throw DomainError("label count must be >= 0");
    SequenceStream st(d, label_kind(d, i));
    std::string out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index t = 0; t < count; ++t) {
        out.push_back(st.next() == Letter::a ? 'A' : 'B');
    }
    return out;
}

}  // namespace cutseq
