#pragma once

// Closed-form occurrence positions.  L(w, p) is the 1-based position of the
// p-th occurrence of w in the fixed point.  For a kernel word,
// L(K_{d,m,i}, 1) = f_{d,m}, and for p >= 2 (writing q = p-1)
//
//   i = 0:          L = p*f_{d,m} + |sigma_{d-1}(F)[1,q]|_b * f_{d,m-1}
//   1 <= i <= d-2:  L = p*f_{d,m} + |sigma_{d-i-1}(F)[1,q]|_b * (i*f_{d,m} + f_{d,m-1})
//   i = d-1:        L = p*f_{d,m} + |F[1,q]|_a * ((d-1)*f_{d,m} + f_{d,m-1})
//
// (at q = 0 the counts vanish and the formulas reproduce the base case, so
// they are applied uniformly for p >= 1).  Envelope words start at position
// 1 and track the kernel at constant offset f_{d,m} - 1; an arbitrary factor
// tracks its kernel at offset |mu_1(w)| = f_{d,m} - x.

#include "cutseq/error.hpp"
#include "cutseq/gaps.hpp"
#include "cutseq/kernel.hpp"
#include "cutseq/substitution.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

// Number of occurrences of `letter` among the first p letters of the plain
// fixed point or of its sigma_j image; streaming, O(p).
inline Index prefix_letter_count(SeqParams d, const SequenceKind& kind, Index p, Letter letter) {
    if (p < 0) throw DomainError("prefix length must be >= 0");
    SequenceStream st(d, kind);
    Index n = 0;
    for (Index t = 0; t < p; ++t) {
        if (st.next() == letter) ++n;
    }
    return n;
}

inline Index kernel_position(const KernelIndex& k, Index p) {
    if (p < 1) throw DomainError("occurrence index p must be >= 1");
    SeqParams d = k.params();
    LengthTable lt(d);
    const Index f = lt.at(k.m());
    const Index fp = lt.at(k.m() - 1);
    const Index q = p - 1;
    Index count, multiplier;
    if (k.i() == d.d() - 1) {
        count = prefix_letter_count(d, SequenceKind::plain(), q, Letter::a);
        multiplier = checked_add(checked_mul(d.d() - 1, f), fp);
    } else {
        count = prefix_letter_count(d, SequenceKind::image(d.d() - k.i() - 1), q, Letter::b);
        multiplier = checked_add(checked_mul(k.i(), f), fp);  // = f_{d,m-1} at i = 0
    }
    return checked_add(checked_mul(p, f), checked_mul(count, multiplier));
}

inline Index envelope_position(const KernelIndex& k, Index p) {
    if (p < 1) throw DomainError("occurrence index p must be >= 1");
    SeqParams d = k.params();
    LengthTable lt(d);
    const Index f = lt.at(k.m());
    const Index fp = lt.at(k.m() - 1);
    const Index q = p - 1;
    Index count, multiplier;
    if (k.i() == d.d() - 1) {
        count = prefix_letter_count(d, SequenceKind::plain(), q, Letter::a);
        multiplier = checked_add(checked_mul(d.d() - 1, f), fp);
    } else {
        count = prefix_letter_count(d, SequenceKind::image(d.d() - k.i() - 1), q, Letter::b);
        multiplier = checked_add(checked_mul(k.i(), f), fp);
    }
    return checked_add(checked_add(checked_mul(q, f), checked_mul(count, multiplier)), 1);
}

// Contract: equals f_{d,m} - 1 for every p.
inline Index position_difference_check(const KernelIndex& k, Index p) {
    return kernel_position(k, p) - envelope_position(k, p);
}

inline Index factor_position(const Word& w, SeqParams d, Index p,
                             std::size_t cap = kDefaultWordCap) {
    if (p < 1) throw DomainError("occurrence index p must be >= 1");
    StarCoords sc = star_decompose(w, d, cap);
    const Index f = LengthTable(d).at(sc.kernel.m());
    return checked_add(kernel_position(sc.kernel, p), -(f - sc.x));
}

}  // namespace cutseq
