#pragma once

// Independent ground truth.  Everything here works by naive scanning over
// materialized prefixes or by exact integer geometry, never through the
// closed forms it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutseq/classify.hpp"
#include "cutseq/error.hpp"
#include "cutseq/gaps.hpp"
#include "cutseq/kernel.hpp"
#include "cutseq/positions.hpp"
#include "cutseq/signed_word.hpp"
#include "cutseq/substitution.hpp"
#include "cutseq/word.hpp"

namespace cutseq {

struct ScanReport {
    Word factor;
    Index prefix_len = 0;
    std::vector<Index> positions;   // strictly increasing, 1-based
    std::vector<SignedWord> gaps;   // gaps.size() == positions.size() - 1
    std::string labels;             // 'A' for gaps equal to the first gap, else 'B'
};

namespace detail {

inline ScanReport report_from(const Word& w, const Word& prefix, std::vector<Index> positions) {
    ScanReport rep{w, prefix.length(), std::move(positions), {}, {}};
    const Index n = w.length();
    for (std::size_t t = 0; t + 1 < rep.positions.size(); ++t) {
        const Index endp = rep.positions[t] + n - 1;
        const Index nxt = rep.positions[t + 1];
        if (endp + 1 == nxt) {
            rep.gaps.push_back(SignedWord::empty());
        } else if (endp + 1 < nxt) {
            rep.gaps.push_back(SignedWord::positive(prefix.slice(endp + 1, nxt - 1)));
        } else {
            rep.gaps.push_back(SignedWord::inverse(prefix.slice(nxt, endp)));
        }
    }
    for (const auto& g : rep.gaps) rep.labels.push_back(g == rep.gaps.front() ? 'A' : 'B');
    return rep;
}

}  // namespace detail

// All occurrence positions of w in the first n letters of the fixed point.
inline std::vector<Index> scan_positions(const Word& w, SeqParams d, Index n,
                                         std::size_t cap = kDefaultWordCap) {
    if (w.empty()) throw EmptyWordError("occurrence scan requires a nonempty word");
    if (n < w.length()) {
        throw DomainError("scan length " + std::to_string(n) + " is shorter than the word");
    }
    return find_occurrences(w, fixed_point_prefix(d, n, cap));
}

// Occurrences, gaps and labels of w over a fixed prefix length.
inline ScanReport empirical_gaps(const Word& w, SeqParams d, Index n,
                                 std::size_t cap = kDefaultWordCap) {
    if (w.empty()) throw EmptyWordError("gap scan requires a nonempty word");
    if (n < w.length()) {
        throw DomainError("scan length " + std::to_string(n) + " is shorter than the word");
    }
    Word prefix = fixed_point_prefix(d, n, cap);
    return detail::report_from(w, prefix, find_occurrences(w, prefix));
}

// Like empirical_gaps, but grows the prefix until `count` occurrences are
// found, so the caller never under-scans.
inline ScanReport empirical_first(const Word& w, SeqParams d, Index count,
                                  std::size_t cap = std::size_t{1} << 26) {
    if (w.empty()) throw EmptyWordError("gap scan requires a nonempty word");
    if (count < 1) throw DomainError("occurrence count must be >= 1");
    FixedPointStream st(d);
    std::string buf;
    std::vector<Index> occ;
    const std::string& needle = w.str();
    std::size_t target = std::max<std::size_t>(1024, 4 * needle.size());
    std::size_t cursor = 0;
    while (static_cast<Index>(occ.size()) < count) {
        target = std::min(target, cap);
        st.take_into(buf, target);
        std::size_t pos;
        while (static_cast<Index>(occ.size()) < count &&
               (pos = buf.find(needle, cursor)) != std::string::npos) {
            occ.push_back(static_cast<Index>(pos) + 1);
            cursor = pos + 1;
        }
        if (static_cast<Index>(occ.size()) >= count) break;
        if (target >= cap) {
            throw OverflowError("no " + std::to_string(count) + " occurrences of \"" + w.str() +
                                "\" within the scan cap of " + std::to_string(cap) + " letters");
        }
        cursor = std::max(cursor, buf.size() >= needle.size() - 1
                                      ? buf.size() - (needle.size() - 1)
                                      : std::size_t{0});
        target *= 2;
    }
    return detail::report_from(w, Word::unchecked(std::move(buf)), std::move(occ));
}

// Exact floor square root.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t x = 0;
    std::uint64_t bit = std::uint64_t(1) << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= x + bit) {
            n -= x + bit;
            x = (x >> 1) + bit;
        } else {
            x >>= 1;
        }
        bit >>= 2;
    }
    return x;
}

// Cutting sequence of the line y = theta*x with theta = (sqrt(d^2+4)-d)/2:
// an 'a' for each vertical grid line x = k, and a 'b' between x = k and
// x = k+1 whenever floor((k+1)theta) > floor(k theta).  All floors are exact:
// floor(k*theta) = (isqrt(k^2 (d^2+4)) - k d) / 2, with a nonnegative
// numerator, so no floating point is involved anywhere.
inline Word cutting_prefix(SeqParams d, Index n, std::size_t cap = kDefaultWordCap) {
    if (n < 0) throw DomainError("prefix length must be >= 0");
    check_word_cap(n, cap);
    const std::uint64_t dd = static_cast<std::uint64_t>(d.d());
    const std::uint64_t disc = dd * dd + 4;  // never a perfect square for d >= 1
    auto floor_theta = [&](std::uint64_t k) -> std::uint64_t {
        if (k > (std::uint64_t(1) << 27)) {
            throw OverflowError("crossing index too large for exact 64-bit arithmetic");
        }
        const std::uint64_t s = isqrt_u64(k * k * disc);
        return (s - k * dd) / 2;
    };
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t prev = floor_theta(1);
    for (std::uint64_t k = 1; static_cast<Index>(out.size()) < n; ++k) {
        out.push_back('a');
        const std::uint64_t cur = floor_theta(k + 1);
        if (cur > prev) out.push_back('b');
        prev = cur;
    }
    out.resize(static_cast<std::size_t>(n));
    return Word::unchecked(std::move(out));
}

// Distinct nonempty factors of `prefix` up to max_len, sorted by length then
// lexicographically.
inline std::vector<Word> distinct_factors(const Word& prefix, Index max_len) {
    std::set<std::string> seen;
    const std::string& s = prefix.str();
    for (std::size_t start = 0; start < s.size(); ++start) {
        for (Index len = 1; len <= max_len && start + static_cast<std::size_t>(len) <= s.size();
             ++len) {
            seen.insert(s.substr(start, static_cast<std::size_t>(len)));
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& t : seen) out.push_back(Word::unchecked(t));
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.length() != b.length() ? a.length() < b.length() : a.str() < b.str();
    });
    return out;
}

struct VerifyCheck {
    std::string check;
    std::string params;
    bool pass = true;
    std::string counterexample;
};

struct VerifyReport {
    int d = 2;
    int m_max = 0;
    Index len_max = 0;
    Index p_max = 0;
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

namespace detail {

template <typename Fn>
void run_check(VerifyReport& rep, std::string name, std::string params, Fn&& body) {
    VerifyCheck c{std::move(name), std::move(params), true, ""};
    try {
        if (std::optional<std::string> ce = body()) {
            c.pass = false;
            c.counterexample = *ce;
        }
    } catch (const std::exception& e) {
        c.pass = false;
        c.counterexample = std::string("error: ") + e.what();
    }
    rep.checks.push_back(std::move(c));
}

inline std::string describe(const KernelIndex& k) { return "K" + k.to_string(); }

// Reduced concatenation u * g * u of a word with a signed gap between two
// copies of itself; mirrors how consecutive kernel occurrences merge.
inline Word sandwich(const Word& u, const SignedWord& g) {
    switch (g.sign()) {
        case WordSign::empty: return u + u;
        case WordSign::positive: return u + g.letters() + u;
        case WordSign::inverse: {
            if (!u.ends_with(g.letters())) {
                throw IrreducibleProductError("overlap " + g.letters().str() +
                                              " is not a suffix of " + u.str());
            }
            return u.drop_suffix(g.letters()) + u;
        }
    }
    throw DomainError("unreachable gap sign");
}

}  // namespace detail

// Cross-checks the whole theory on a bounded grid: construction identities,
// palindromicity, occurrence positions of the generators, gap structure against scans, closed-form
// positions against scans, and the per-factor battery (unique kernel
// occurrence, envelope containment, decomposition round-trip, two gaps,
// label sequence, positions, relations, palindromes, types, membership).
// Failures are reported as data, one entry per check, with the first
// counterexample found.
inline VerifyReport verify_all(SeqParams d, int m_max, Index len_max, Index p_max,
                               std::size_t cap = std::size_t{1} << 26) {
    if (m_max < 0 || len_max < 1 || p_max < 1) {
        throw DomainError("verification bounds must be positive");
    }
    VerifyReport rep;
    rep.d = d.d();
    rep.m_max = m_max;
    rep.len_max = len_max;
    rep.p_max = p_max;

    const std::string grid = "d=" + std::to_string(d.d()) + " m<=" + std::to_string(m_max);
    LengthTable lt(d);

    detail::run_check(rep, "standard_words", grid, [&]() -> std::optional<std::string> {
        for (int m = 0; m <= m_max; ++m) {
            Word f = standard_word(d, m, cap);
            if (f.length() != lt.at(m)) return "|F_" + std::to_string(m) + "| != f(" + std::to_string(m) + ")";
            if (f.last() != standard_last_letter(m)) return "last letter of F_" + std::to_string(m);
            Word next = standard_word(d, m + 1, cap);
            if (next != f.repeated(d.d()) + standard_word(d, m - 1, cap)) {
                return "F_" + std::to_string(m + 1) + " != F_" + std::to_string(m) + "^d F_" +
                       std::to_string(m - 1);
            }
            if (!next.starts_with(f)) return "F_" + std::to_string(m) + " is not a prefix of F_" + std::to_string(m + 1);
        }
        return std::nullopt;
    });

    detail::run_check(rep, "cutting_sequence_agreement", grid, [&]() -> std::optional<std::string> {
        const Index n = std::max<Index>(2048, 16 * len_max);
        if (cutting_prefix(d, n, cap) != fixed_point_prefix(d, n, cap)) {
            return "geometric and substitution prefixes differ within " + std::to_string(n) + " letters";
        }
        return std::nullopt;
    });

    detail::run_check(rep, "kernel_words", grid, [&]() -> std::optional<std::string> {
        for (int m = 0; m <= m_max; ++m) {
            for (int i = 0; i < d.d(); ++i) {
                KernelIndex k(d.d(), m, i);
                Word kw = kernel_word(k, cap);
                if (kw.length() != kernel_length(k)) return "length of " + detail::describe(k);
                if (!kw.palindrome()) return detail::describe(k) + " is not a palindrome";
                if (kernel_word_recursive(k, cap) != kw) {
                    return "recursive construction differs for " + detail::describe(k);
                }
            }
        }
        return std::nullopt;
    });

    detail::run_check(rep, "envelope_words", grid, [&]() -> std::optional<std::string> {
        for (int m = 0; m <= m_max; ++m) {
            auto [mu1, mu2] = envelope_margins(d, m, cap);
            if (mu1.length() != lt.at(m) - 1 || mu2 != mu1.mirror()) {
                return "margins at m=" + std::to_string(m);
            }
            for (int i = 0; i < d.d(); ++i) {
                KernelIndex k(d.d(), m, i);
                Word ew = envelope_word(k, cap);
                if (ew.length() != envelope_length(k)) return "length of E" + k.to_string();
                if (!ew.palindrome()) return "E" + k.to_string() + " is not a palindrome";
                if (ew != mu1 + kernel_word(k, cap) + mu2) {
                    return "E" + k.to_string() + " != mu1 * K * mu2";
                }
            }
        }
        return std::nullopt;
    });

    detail::run_check(rep, "generator_occurrences", grid, [&]() -> std::optional<std::string> {
        for (int m = 1; m <= std::max(1, m_max); ++m) {
            const Index f = lt.at(m);
            const Index fp = lt.at(m - 1);
            Word fm = standard_word(d, m, cap);
            Word fm1 = standard_word(d, m - 1, cap);
            Word trimmed = fm.drop_last();

            auto occ = find_occurrences(fm, fm + fm);
            if (occ != std::vector<Index>{1, f + 1}) return "F in FF at m=" + std::to_string(m);

            occ = find_occurrences(fm, fm + fm1 + fm);
            auto expected = m >= 2 ? std::vector<Index>{1, f + 1, f + fp + 1}
                                   : std::vector<Index>{1, f + fp + 1};
            if (occ != expected) return "F in F F' F at m=" + std::to_string(m);

            occ = find_occurrences(trimmed, fm + fm);
            if (occ != std::vector<Index>{1, f + 1}) return "trimmed F in FF at m=" + std::to_string(m);

            occ = find_occurrences(trimmed, fm + fm1 + fm);
            if (occ != std::vector<Index>{1, f + 1, f + fp + 1}) {
                return "trimmed F in F F' F at m=" + std::to_string(m);
            }
        }
        return std::nullopt;
    });

    // Gap structure of kernel and envelope words against scanned occurrences.
    auto gap_structure_check = [&](bool envelope) {
        return [&, envelope]() -> std::optional<std::string> {
            for (int m = 0; m <= m_max; ++m) {
                for (int i = 0; i < d.d(); ++i) {
                    KernelIndex k(d.d(), m, i);
                    Word subject = envelope ? envelope_word(k, cap) : kernel_word(k, cap);
                    GapProfile prof = envelope ? envelope_gaps(k, cap) : kernel_gaps(k, cap);
                    ScanReport rep2 = empirical_first(subject, d, p_max + 1, cap);
                    const Index first = envelope ? 1 : lt.at(m);
                    if (rep2.positions.front() != first) {
                        return detail::describe(k) + ": first occurrence at " +
                               std::to_string(rep2.positions.front()) + ", expected " +
                               std::to_string(first);
                    }
                    if (prof.gap_a == prof.gap_b) return detail::describe(k) + ": G_A == G_B";
                    std::string expected_labels =
                        gap_sequence_labels(d, i, static_cast<Index>(rep2.gaps.size()));
                    for (std::size_t t = 0; t < rep2.gaps.size(); ++t) {
                        const SignedWord& want =
                            expected_labels[t] == 'A' ? prof.gap_a : prof.gap_b;
                        if (rep2.gaps[t] != want) {
                            return detail::describe(k) + ": gap " + std::to_string(t + 1) +
                                   " is " + rep2.gaps[t].render() + ", expected " + want.render();
                        }
                    }
                    if (rep2.labels != expected_labels) {
                        return detail::describe(k) + ": label sequence mismatch";
                    }
                    if (p_max >= prof.switch_index) {
                        const auto sw = rep2.labels.find('B');
                        if (sw == std::string::npos ||
                            static_cast<int>(sw) + 1 != prof.switch_index) {
                            return detail::describe(k) + ": first switch differs from B=" +
                                   std::to_string(prof.switch_index);
                        }
                    }
                }
            }
            return std::nullopt;
        };
    };
    detail::run_check(rep, "kernel_gap_structure", grid + " p<=" + std::to_string(p_max),
                      gap_structure_check(false));
    detail::run_check(rep, "envelope_gap_structure", grid + " p<=" + std::to_string(p_max),
                      gap_structure_check(true));

    auto positions_check = [&](bool envelope) {
        return [&, envelope]() -> std::optional<std::string> {
            for (int m = 0; m <= m_max; ++m) {
                for (int i = 0; i < d.d(); ++i) {
                    KernelIndex k(d.d(), m, i);
                    Word subject = envelope ? envelope_word(k, cap) : kernel_word(k, cap);
                    ScanReport sc = empirical_first(subject, d, p_max, cap);
                    for (Index p = 1; p <= p_max; ++p) {
                        const Index got = envelope ? envelope_position(k, p) : kernel_position(k, p);
                        if (got != sc.positions[static_cast<std::size_t>(p - 1)]) {
                            return detail::describe(k) + " p=" + std::to_string(p) + ": formula " +
                                   std::to_string(got) + ", scan " +
                                   std::to_string(sc.positions[static_cast<std::size_t>(p - 1)]);
                        }
                    }
                }
            }
            return std::nullopt;
        };
    };
    detail::run_check(rep, "kernel_positions", grid + " p<=" + std::to_string(p_max),
                      positions_check(false));
    detail::run_check(rep, "envelope_positions", grid + " p<=" + std::to_string(p_max),
                      positions_check(true));

    detail::run_check(rep, "position_offset", grid + " p<=" + std::to_string(p_max),
                      [&]() -> std::optional<std::string> {
                          for (int m = 0; m <= m_max; ++m) {
                              for (int i = 0; i < d.d(); ++i) {
                                  KernelIndex k(d.d(), m, i);
                                  for (Index p = 1; p <= p_max; ++p) {
                                      if (position_difference_check(k, p) != lt.at(m) - 1) {
                                          return detail::describe(k) + " p=" + std::to_string(p);
                                      }
                                  }
                              }
                          }
                          return std::nullopt;
                      });

    detail::run_check(rep, "kernel_concatenation", grid, [&]() -> std::optional<std::string> {
        for (int m = 0; m <= m_max; ++m) {
            for (int i = 0; i < d.d(); ++i) {
                KernelIndex k(d.d(), m, i);
                GapProfile prof = kernel_gaps(k, cap);
                Word kw = kernel_word(k, cap);
                if (i <= d.d() - 2) {
                    if (prof.gap_b != SignedWord::positive(kernel_word(KernelIndex(d.d(), m + 1, 0), cap))) {
                        return detail::describe(k) + ": G_B != K(m+1,0)";
                    }
                    if (detail::sandwich(kw, prof.gap_a) != kernel_word(KernelIndex(d.d(), m, i + 1), cap)) {
                        return detail::describe(k) + ": K G_A K != next kernel";
                    }
                } else {
                    if (prof.gap_a != SignedWord::positive(kernel_word(KernelIndex(d.d(), m + 1, 0), cap))) {
                        return detail::describe(k) + ": G_A != K(m+1,0)";
                    }
                    if (detail::sandwich(kw, prof.gap_b) != kernel_word(KernelIndex(d.d(), m + 2, 0), cap)) {
                        return detail::describe(k) + ": K G_B K != K(m+2,0)";
                    }
                }
            }
        }
        return std::nullopt;
    });

    // Per-factor battery over every factor of a generated prefix.
    struct FactorInfo {
        Word w;
        StarCoords sc;
        GapProfile fg;
        ScanReport rep;
    };
    std::vector<FactorInfo> infos;
    Word source;
    bool setup_ok = true;
    detail::run_check(rep, "factor_enumeration",
                      grid + " len<=" + std::to_string(len_max),
                      [&]() -> std::optional<std::string> {
                          const Index n0 = std::max<Index>(512, 64 * len_max);
                          source = fixed_point_prefix(d, n0, cap);
                          for (const Word& w : distinct_factors(source, len_max)) {
                              StarCoords sc = star_decompose(w, d, cap);
                              GapProfile fg = detail::factor_gaps_at(sc, cap);
                              ScanReport r = empirical_first(w, d, p_max + 1, cap);
                              infos.push_back(FactorInfo{w, sc, fg, std::move(r)});
                          }
                          return std::nullopt;
                      });
    setup_ok = rep.checks.back().pass;

    const std::string fgrid = grid + " len<=" + std::to_string(len_max) + " p<=" + std::to_string(p_max);
    auto factor_check = [&](std::string name, auto&& per_factor) {
        detail::run_check(rep, std::move(name), fgrid, [&]() -> std::optional<std::string> {
            if (!setup_ok) return "skipped: factor enumeration failed";
            for (const FactorInfo& fi : infos) {
                if (auto ce = per_factor(fi)) {
                    return "w=\"" + fi.w.str() + "\": " + *ce;
                }
            }
            return std::nullopt;
        });
    };

    factor_check("unique_kernel_occurrence", [&](const FactorInfo& fi) -> std::optional<std::string> {
        auto occ = find_occurrences(kernel_word(fi.sc.kernel, cap), fi.w);
        if (occ.size() != 1) return "kernel occurs " + std::to_string(occ.size()) + " times";
        return std::nullopt;
    });

    factor_check("envelope_containment", [&](const FactorInfo& fi) -> std::optional<std::string> {
        if (!envelope_word(fi.sc.kernel, cap).contains(fi.w)) return "not inside its envelope";
        return std::nullopt;
    });

    factor_check("star_roundtrip", [&](const FactorInfo& fi) -> std::optional<std::string> {
        if (reassemble(fi.sc, cap) != fi.w) return "reassembly differs";
        if (!is_factor(fi.w, d, cap)) return "is_factor rejects an actual factor";
        return std::nullopt;
    });

    factor_check("factor_two_gaps", [&](const FactorInfo& fi) -> std::optional<std::string> {
        if (fi.fg.gap_a == fi.fg.gap_b) return "G_A == G_B";
        for (std::size_t t = 0; t < fi.rep.gaps.size(); ++t) {
            const SignedWord& g = fi.rep.gaps[t];
            if (g != fi.fg.gap_a && g != fi.fg.gap_b) {
                return "gap " + std::to_string(t + 1) + " = " + g.render() +
                       " is neither G_A nor G_B";
            }
        }
        return std::nullopt;
    });

    factor_check("factor_label_sequence", [&](const FactorInfo& fi) -> std::optional<std::string> {
        std::string expected =
            gap_sequence_labels(d, fi.sc.kernel.i(), static_cast<Index>(fi.rep.gaps.size()));
        for (std::size_t t = 0; t < fi.rep.gaps.size(); ++t) {
            const SignedWord& want = expected[t] == 'A' ? fi.fg.gap_a : fi.fg.gap_b;
            if (fi.rep.gaps[t] != want) {
                return "gap " + std::to_string(t + 1) + " disagrees with label " +
                       std::string(1, expected[t]);
            }
        }
        if (fi.rep.labels != expected) return "label sequence differs";
        if (p_max >= fi.fg.switch_index) {
            const auto sw = fi.rep.labels.find('B');
            if (sw == std::string::npos || static_cast<int>(sw) + 1 != fi.fg.switch_index) {
                return "first switch differs from B=" + std::to_string(fi.fg.switch_index);
            }
        }
        return std::nullopt;
    });

    factor_check("factor_positions", [&](const FactorInfo& fi) -> std::optional<std::string> {
        for (Index p = 1; p <= p_max; ++p) {
            const Index got = factor_position(fi.w, d, p, cap);
            const Index want = fi.rep.positions[static_cast<std::size_t>(p - 1)];
            if (got != want) {
                return "p=" + std::to_string(p) + ": formula " + std::to_string(got) + ", scan " +
                       std::to_string(want);
            }
        }
        return std::nullopt;
    });

    factor_check("first_occurrence_prefix", [&](const FactorInfo& fi) -> std::optional<std::string> {
        Word have = gap_zero(fi.w, d, cap);
        Word want = source.slice(1, fi.rep.positions.front() - 1);
        if (have != want) return "prefix before first occurrence differs";
        if (have.length() != fi.sc.x - 1) return "|G_0| != x - 1";
        return std::nullopt;
    });

    factor_check("relations", [&](const FactorInfo& fi) -> std::optional<std::string> {
        const Index upto = std::min<Index>(p_max, 30);
        for (Index p = 1; p <= upto; ++p) {
            if (relation_at(fi.w, d, p, cap) !=
                relation_kind_of(fi.rep.gaps[static_cast<std::size_t>(p - 1)])) {
                return "relation at p=" + std::to_string(p) + " differs from scan";
            }
        }
        return std::nullopt;
    });

    factor_check("palindrome_coordinates", [&](const FactorInfo& fi) -> std::optional<std::string> {
        if (palindrome_check_star(fi.w, d, cap) != fi.w.palindrome()) {
            return "x + y = f test disagrees with mirror test";
        }
        return std::nullopt;
    });

    factor_check("type_classification", [&](const FactorInfo& fi) -> std::optional<std::string> {
        TypeTag tag = classify_type(fi.w, d, cap);
        if (tag.is_order_zero() != (fi.sc.kernel.m() == 0)) return "order-0 tagging differs";
        if (tag.sign_a() != fi.fg.gap_a.sign() || tag.sign_b() != fi.fg.gap_b.sign()) {
            return "declared signs differ from actual gap signs";
        }
        if (!tag.is_order_zero() && tag.alpha() != fi.sc.kernel.i()) return "alpha != kernel type";
        return std::nullopt;
    });

    detail::run_check(rep, "palindrome_enumeration",
                      "d=" + std::to_string(d.d()) + " m<=" + std::to_string(std::min(m_max, 3)),
                      [&]() -> std::optional<std::string> {
                          for (int m = 0; m <= std::min(m_max, 3); ++m) {
                              for (int i = 0; i < d.d(); ++i) {
                                  KernelIndex k(d.d(), m, i);
                                  // Every factor with kernel k lies inside the envelope
                                  // word, so scanning its palindromic factors is exhaustive.
                                  Word env = envelope_word(k, cap);
                                  std::set<Word> expected;
                                  for (const Word& w : distinct_factors(env, env.length())) {
                                      if (w.palindrome() && kernel_of(w, d).index == k) {
                                          expected.insert(w);
                                      }
                                  }
                                  auto got = palindromes_with_kernel(k, cap);
                                  std::set<Word> got_set(got.begin(), got.end());
                                  if (got_set != expected || got_set.size() != got.size()) {
                                      return detail::describe(k) + ": enumeration differs from scan";
                                  }
                                  for (std::size_t t = 0; t + 1 < got.size(); ++t) {
                                      if (got[t].length() <= got[t + 1].length()) {
                                          return detail::describe(k) + ": not ordered by decreasing length";
                                      }
                                  }
                                  for (const Word& w : got) {
                                      if (!w.palindrome() || !is_factor(w, d, cap)) {
                                          return detail::describe(k) + ": enumerated non-palindrome or non-factor";
                                      }
                                  }
                              }
                          }
                          return std::nullopt;
                      });

    detail::run_check(rep, "membership_rejection", "d=" + std::to_string(d.d()),
                      [&]() -> std::optional<std::string> {
                          Word too_long_run = Word::run(Letter::a, d.d() + 2);
                          Word double_b = Word::run(Letter::a, d.d() + 1) + Word("bb");
                          for (const Word& w : {too_long_run, double_b}) {
                              if (is_factor(w, d, cap)) return "accepted \"" + w.str() + "\"";
                              if (!source.empty() && source.contains(w)) {
                                  return "\"" + w.str() + "\" occurs in the generated prefix";
                              }
                          }
                          return std::nullopt;
                      });

    return rep;
}

}  // namespace cutseq
