#pragma once

// The substitution family sigma_j and the words it generates.
//
//   sigma_j(a) = a^j b,   sigma_j(b) = a          (sigma_0 swaps the letters)
//
// For a fixed digit d >= 2 the iterates F_{d,m} = sigma_d^m(a) approximate
// the infinite cutting sequence F_{d,inf} with slope [0; d, d, d, ...]; each
// F_{d,m} is a prefix of the next and of the fixed point.  By convention
// F_{d,-1} = b, which makes the order-0 kernel words come out as plain
// letter runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutseq/error.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

inline Index checked_add(Index a, Index b) {
    Index r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
    return r;
}

inline Index checked_mul(Index a, Index b) {
    Index r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
    return r;
}

// Default limit on the length of any single materialized word.  Desk-scale
// queries stay far below it; callers that legitimately need bigger words
// (long oracle scans, deep indices) pass an explicit cap.
inline constexpr std::size_t kDefaultWordCap = std::size_t{1} << 20;

inline void check_word_cap(Index length, std::size_t cap) {
    if (length < 0 || static_cast<std::uint64_t>(length) > cap) {
        throw OverflowError("word of length " + std::to_string(length) +
                            " exceeds the size cap " + std::to_string(cap));
    }
}

// Continued-fraction digit of the slope.  d = 1 (the golden slope) is
// rejected: the kernel taxonomy implemented here starts at d = 2.
class SeqParams {
public:
    explicit SeqParams(int d) : d_(d) {
        if (d < 2) throw DomainError("sequence digit d must be >= 2, got " + std::to_string(d));
    }
    int d() const noexcept { return d_; }

private:
    int d_;
};

// Last letter of F_{d,m}: a for even m, b for odd m (and b for m = -1).
inline Letter standard_last_letter(int m) {
    if (m < -1) throw DomainError("order m must be >= -1");
    return (m % 2 == 0) ? Letter::a : Letter::b;
}

// Lengths f_{d,m} = |F_{d,m}| with f_{d,-1} = f_{d,0} = 1 and
// f_{d,m} = d*f_{d,m-1} + f_{d,m-2}, memoized, overflow-checked.
class LengthTable {
public:
    explicit LengthTable(SeqParams d) : d_(d), vals_{1, 1} {}

    Index at(int m) const {
        if (m < -1) throw DomainError("order m must be >= -1");
        while (static_cast<int>(vals_.size()) <= m + 1) {
            std::size_t k = vals_.size();
            vals_.push_back(checked_add(checked_mul(d_.d(), vals_[k - 1]), vals_[k - 2]));
        }
        return vals_[static_cast<std::size_t>(m + 1)];
    }

    SeqParams params() const noexcept { return d_; }

private:
    SeqParams d_;
    mutable std::vector<Index> vals_;
};

inline Index f_len(SeqParams d, int m) { return LengthTable(d).at(m); }

// Letterwise image under sigma_j.  Morphism law:
// substitute(j, uv) == substitute(j, u) + substitute(j, v).
inline Word substitute(int j, const Word& w) {
    if (j < 0) throw DomainError("substitution index must be >= 0");
    std::string out;
    out.reserve(w.str().size() * static_cast<std::size_t>(j + 1));
    for (char c : w.str()) {
        if (c == 'a') {
            out.append(static_cast<std::size_t>(j), 'a');
            out.push_back('b');
        } else {
            out.push_back('a');
        }
    }
    return Word::unchecked(std::move(out));
}

// F_{d,m} = sigma_d^m(a) for m >= 0; F_{d,-1} = b.
inline Word standard_word(SeqParams d, int m, std::size_t cap = kDefaultWordCap) {
    if (m < -1) throw DomainError("order m must be >= -1");
    if (m == -1) return Word(Letter::b);
    check_word_cap(LengthTable(d).at(m), cap);
    Word w(Letter::a);
    for (int t = 0; t < m; ++t) w = substitute(d.d(), w);
    return w;
}

// Streams the fixed point letter by letter with a self-reading tape: the
// buffer is always sigma_d of the consumed prefix, hence itself a prefix of
// the fixed point.  Memory stays proportional to the letters emitted.
// Single consumer; not safe for concurrent iteration.
class FixedPointStream {
public:
    explicit FixedPointStream(SeqParams d) : d_(d.d()) {
        buf_.append(static_cast<std::size_t>(d_), 'a');
        buf_.push_back('b');
    }

    Letter next() {
        grow_to(emit_ + 1);
        return static_cast<Letter>(buf_[emit_++]);
    }

    // Extends `out` with fresh letters until it holds `n` of them.
    void take_into(std::string& out, std::size_t n) {
        grow_to(emit_ + (n > out.size() ? n - out.size() : 0));
        while (out.size() < n) out.push_back(buf_[emit_++]);
    }

private:
    void grow_to(std::size_t needed) {
        while (buf_.size() < needed) {
            char c = buf_[consumed_++];
            if (c == 'a') {
                buf_.append(static_cast<std::size_t>(d_), 'a');
                buf_.push_back('b');
            } else {
                buf_.push_back('a');
            }
        }
    }

    int d_;
    std::string buf_;
    std::size_t emit_ = 0;
    std::size_t consumed_ = 1;  // letters of the fixed point already expanded
};

inline Word fixed_point_prefix(SeqParams d, Index n, std::size_t cap = kDefaultWordCap) {
    if (n < 0) throw DomainError("prefix length must be >= 0");
    check_word_cap(n, cap);
    FixedPointStream st(d);
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    st.take_into(out, static_cast<std::size_t>(n));
    return Word::unchecked(std::move(out));
}

// Selects the sequence a gap-label stream reads from: the plain fixed point,
// or its image under sigma_j.
class SequenceKind {
public:
    static SequenceKind plain() { return SequenceKind(std::nullopt); }
    static SequenceKind image(int j) {
        if (j < 0) throw DomainError("substitution index must be >= 0");
        return SequenceKind(j);
    }

    bool is_plain() const noexcept { return !j_.has_value(); }
    int image_index() const {
        if (!j_) throw DomainError("plain sequence has no image index");
        return *j_;
    }

    friend bool operator==(const SequenceKind&, const SequenceKind&) = default;

private:
    explicit SequenceKind(std::optional<int> j) : j_(j) {}
    std::optional<int> j_;
};

// Streams F_{d,inf} or sigma_j(F_{d,inf}).  Single consumer.
class SequenceStream {
public:
    SequenceStream(SeqParams d, SequenceKind kind)
        : base_(d), j_(kind.is_plain() ? std::optional<int>() : kind.image_index()) {}

    Letter next() {
        if (!j_) return base_.next();
        if (ppos_ >= pending_.size()) {
            pending_.clear();
            ppos_ = 0;
            if (base_.next() == Letter::a) {
                pending_.append(static_cast<std::size_t>(*j_), 'a');
                pending_.push_back('b');
            } else {
                pending_.push_back('a');
            }
        }
        return static_cast<Letter>(pending_[ppos_++]);
    }

private:
    FixedPointStream base_;
    std::optional<int> j_;
    std::string pending_;
    std::size_t ppos_ = 0;
};

}  // namespace cutseq
