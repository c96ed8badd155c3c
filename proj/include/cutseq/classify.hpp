#pragma once

// Combinatorial classification of factors.
//
// The relation between consecutive occurrences w_p, w_{p+1} is read off the
// sign of the gap G_p(w): empty = adjacent, positive = separated, inverse =
// overlapped.  Since the label sequence is a substitution image of the fixed
// point, both labels occur infinitely often, so the pair of signs
// (sign G_A, sign G_B) determines which relations occur at all.  Factors
// with kernels of order m >= 1 split into the disjoint type sets T_{i,beta}
// below; order-0 kernels (plain letter runs a^i) keep their raw signs under
// a separate tag.

#include <string>

#include "cutseq/error.hpp"
#include "cutseq/gaps.hpp"
#include "cutseq/kernel.hpp"
#include "cutseq/signed_word.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

enum class RelationKind { adjacent, separated, overlapped };

inline RelationKind relation_kind_of(const SignedWord& gap) {
    switch (gap.sign()) {
        case WordSign::empty: return RelationKind::adjacent;
        case WordSign::positive: return RelationKind::separated;
        case WordSign::inverse: return RelationKind::overlapped;
    }
    throw DomainError("unreachable gap sign");
}

inline std::string to_string(RelationKind k) {
    switch (k) {
        case RelationKind::adjacent: return "adjacent";
        case RelationKind::separated: return "separated";
        case RelationKind::overlapped: return "overlapped";
    }
    return {};
}

// Which relations occur for some occurrence index p.
struct RelationSets {
    bool adjacent = false;
    bool separated = false;
    bool overlapped = false;

    friend bool operator==(const RelationSets&, const RelationSets&) = default;
};

class TypeTag {
public:
    // T_{alpha,beta} for kernels of order m >= 1.
    static TypeTag variant(int alpha, int beta, WordSign sa, WordSign sb) {
        return TypeTag(false, alpha, beta, sa, sb);
    }
    // Factors whose kernel has order 0; carries the raw gap signs.
    static TypeTag order_zero(WordSign sa, WordSign sb) {
        return TypeTag(true, 0, 0, sa, sb);
    }

    bool is_order_zero() const noexcept { return order_zero_; }
    int alpha() const {
        if (order_zero_) throw DomainError("order-0 tag has no variant indices");
        return alpha_;
    }
    int beta() const {
        if (order_zero_) throw DomainError("order-0 tag has no variant indices");
        return beta_;
    }
    WordSign sign_a() const noexcept { return sa_; }
    WordSign sign_b() const noexcept { return sb_; }

    std::string to_string() const {
        if (order_zero_) return "T_order0";
        return "T_{" + std::to_string(alpha_) + "," + std::to_string(beta_) + "}";
    }

    friend bool operator==(const TypeTag&, const TypeTag&) = default;

private:
    TypeTag(bool oz, int alpha, int beta, WordSign sa, WordSign sb)
        : order_zero_(oz), alpha_(alpha), beta_(beta), sa_(sa), sb_(sb) {}

    bool order_zero_;
    int alpha_;
    int beta_;
    WordSign sa_;
    WordSign sb_;
};

namespace detail {

inline int beta_for(int d, int i, WordSign sa, WordSign sb) {
    using S = WordSign;
    if (i == 0) {
        if (sa == S::positive && sb == S::positive) return 1;
        if (sa == S::empty && sb == S::positive) return 2;
        if (sa == S::inverse && sb == S::positive) return 3;
        if (sa == S::inverse && sb == S::empty) return 4;
        if (sa == S::inverse && sb == S::inverse) return 5;
    } else if (i <= d - 2) {
        if (sa == S::inverse && sb == S::positive) return 1;
        if (sa == S::inverse && sb == S::empty) return 2;
        if (sa == S::inverse && sb == S::inverse) return 3;
    } else {
        if (sa == S::positive && sb == S::inverse) return 1;
        if (sa == S::empty && sb == S::inverse) return 2;
        if (sa == S::inverse && sb == S::inverse) return 3;
    }
    throw Error("internal", "gap sign pattern (" + std::to_string(to_int(sa)) + "," +
                                std::to_string(to_int(sb)) + ") impossible for kernel type " +
                                std::to_string(i));
}

}  // namespace detail

inline TypeTag classify_type(const Word& w, SeqParams d, std::size_t cap = kDefaultWordCap) {
    StarCoords sc = star_decompose(w, d, cap);
    GapProfile fg = detail::factor_gaps_at(sc, cap);
    const WordSign sa = fg.gap_a.sign();
    const WordSign sb = fg.gap_b.sign();
    if (sc.kernel.m() == 0) return TypeTag::order_zero(sa, sb);
    return TypeTag::variant(sc.kernel.i(), detail::beta_for(d.d(), sc.kernel.i(), sa, sb), sa, sb);
}

// Relation between w_p and w_{p+1}: take the p-th letter of the label
// sequence, then the sign of the corresponding gap.
inline RelationKind relation_at(const Word& w, SeqParams d, Index p,
                                std::size_t cap = kDefaultWordCap) {
    if (p < 1) throw DomainError("occurrence index p must be >= 1");
    GapProfile fg = factor_gaps(w, d, cap);
    SequenceStream st(d, fg.labels);
    Letter l = Letter::a;
    for (Index t = 0; t < p; ++t) l = st.next();
    return relation_kind_of(l == Letter::a ? fg.gap_a : fg.gap_b);
}

inline RelationSets relation_sets(const Word& w, SeqParams d,
                                  std::size_t cap = kDefaultWordCap) {
    GapProfile fg = factor_gaps(w, d, cap);
    RelationSets sets;
    for (const SignedWord* g : {&fg.gap_a, &fg.gap_b}) {
        switch (relation_kind_of(*g)) {
            case RelationKind::adjacent: sets.adjacent = true; break;
            case RelationKind::separated: sets.separated = true; break;
            case RelationKind::overlapped: sets.overlapped = true; break;
        }
    }
    return sets;
}

// A factor is a palindrome exactly when its star coordinates balance:
// x + y = f_{d,m}.
inline bool palindrome_check_star(const Word& w, SeqParams d,
                                  std::size_t cap = kDefaultWordCap) {
    StarCoords sc = star_decompose(w, d, cap);
    return sc.x + sc.y == LengthTable(d).at(sc.kernel.m());
}

// All palindromic factors with the given kernel: one for each x in
// [1, f_{d,m}] with y = f_{d,m} - x, ordered by decreasing length from the
// envelope word (x = 1) down to the kernel word itself (x = f_{d,m}).
inline std::vector<Word> palindromes_with_kernel(const KernelIndex& k,
                                                 std::size_t cap = kDefaultWordCap) {
    check_word_cap(envelope_length(k), cap);
    SeqParams d = k.params();
    const Index f = LengthTable(d).at(k.m());
    Word fw = standard_word(d, k.m(), cap);
    Word ext = Word(standard_last_letter(k.m() + 1)) + fw;
    Word kw = kernel_word(k, cap);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(f));
    for (Index x = 1; x <= f; ++x) {
        out.push_back(fw.slice(x, f - 1) + kw + ext.slice(1, f - x));
    }
    return out;
}

}  // namespace cutseq
