#pragma once

// Command-line front end.  Every subcommand writes deterministic,
// newline-terminated output in either plain text (key=value lines, empty
// words rendered as the epsilon sign) or single-line JSON with sorted keys
// and a "schema" version.
//
// Exit codes: 0 success, 2 usage/parse error, 3 domain error (not a factor,
// d < 2, index out of range), 4 overflow / size cap exceeded.  Verification
// failures from `verify` exit with 1.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cutseq/cutseq.hpp"

namespace cutseq::cli {

namespace detail {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string render_text(const Word& w) {
    return w.empty() ? "ε" : w.str();
}

inline json to_json(const SignedWord& s) {
    return json{{"sign", to_int(s.sign())}, {"letters", s.letters().str()}};
}

inline std::string seq_name(const SequenceKind& kind) {
    return kind.is_plain() ? "plain" : "sigma_" + std::to_string(kind.image_index());
}

// Words arrive as bare argv strings; anything outside {a,b} is a usage
// error, reported before any library call.
inline Word parse_word_arg(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("word", "word argument must be nonempty");
    for (char c : text) {
        if (c != 'a' && c != 'b') {
            throw CLI::ValidationError("word",
                                       "word argument must use only letters 'a' and 'b'");
        }
    }
    return Word(text);
}

struct GapProfileLines {
    // Shared rendering of a gap profile for the kernel/envelope/gaps commands.
    static void text(std::ostream& out, const GapProfile& prof) {
        out << "G_A=" << prof.gap_a.render() << "\n";
        out << "G_B=" << prof.gap_b.render() << "\n";
        out << "B=" << prof.switch_index << "\n";
    }
    static void fill(json& j, const GapProfile& prof) {
        j["g_a"] = to_json(prof.gap_a);
        j["g_b"] = to_json(prof.gap_b);
        j["b"] = prof.switch_index;
        j["seq"] = seq_name(prof.labels);
    }
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::json;

    CLI::App app{"factor, gap and palindrome analysis of cutting sequences with slope [0; d,d,d,...]"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    std::uint64_t cap = kDefaultWordCap;
    app.add_option("--cap", cap, "maximum length of any materialized word")
        ->capture_default_str();

    int d_arg = 0;
    Index n_arg = 0, p_arg = 0;
    int m_arg = 0, i_arg = 0;
    std::string word_arg;
    bool geometric = false;
    int m_max = 4;
    Index len_max = 20, p_max = 100;

    auto add_d = [&](CLI::App* sub) { sub->add_option("-d", d_arg, "slope digit (>= 2)")->required(); };
    auto add_mi = [&](CLI::App* sub) {
        sub->add_option("-m", m_arg, "kernel order (>= 0)")->required();
        sub->add_option("-i", i_arg, "kernel type in [0, d-1]")->required();
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("word", word_arg, "word over {a,b}")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "prefix of the fixed point");
    add_d(gen);
    gen->add_option("-n", n_arg, "number of letters")->required();
    gen->add_flag("--geometric", geometric, "use the geometric line-crossing generator");

    CLI::App* kernel = app.add_subcommand("kernel", "kernel word with its gap data");
    add_d(kernel);
    add_mi(kernel);

    CLI::App* envelope = app.add_subcommand("envelope", "envelope word with its gap data");
    add_d(envelope);
    add_mi(envelope);

    CLI::App* ker = app.add_subcommand("ker", "kernel of a word");
    add_d(ker);
    add_word(ker);

    CLI::App* decompose = app.add_subcommand("decompose", "canonical decomposition of a factor");
    add_d(decompose);
    add_word(decompose);

    CLI::App* gaps = app.add_subcommand("gaps", "the two gaps of a factor");
    add_d(gaps);
    add_word(gaps);
    gaps->add_option("-p", p_arg, "number of gap labels to print");

    CLI::App* pos = app.add_subcommand("pos", "position of the p-th occurrence");
    add_d(pos);
    add_word(pos);
    pos->add_option("-p", p_arg, "occurrence index (>= 1)")->required();

    CLI::App* classify = app.add_subcommand("classify", "type, relations and palindrome flag");
    add_d(classify);
    add_word(classify);

    CLI::App* palindromes = app.add_subcommand("palindromes", "all palindromic factors with a given kernel");
    add_d(palindromes);
    add_mi(palindromes);

    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    add_d(verify);
    verify->add_option("--m-max", m_max, "largest kernel order")->capture_default_str();
    verify->add_option("--len-max", len_max, "largest factor length")->capture_default_str();
    verify->add_option("--p-max", p_max, "largest occurrence index")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";

    try {
        SeqParams d(d_arg);

        if (*gen) {
            Word w = geometric ? cutting_prefix(d, n_arg, cap) : fixed_point_prefix(d, n_arg, cap);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"n", n_arg},
                       {"geometric", geometric}, {"word", w.str()}};
                out << j.dump() << "\n";
            } else {
                out << w.str() << "\n";
            }
        } else if (*kernel || *envelope) {
            KernelIndex k(d_arg, m_arg, i_arg);
            const bool env = static_cast<bool>(*envelope);
            Word w = env ? envelope_word(k, cap) : kernel_word(k, cap);
            GapProfile prof = env ? envelope_gaps(k, cap) : kernel_gaps(k, cap);
            Word g0 = env ? Word() : fixed_point_prefix(d, LengthTable(d).at(m_arg) - 1, cap);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"m", m_arg}, {"i", i_arg},
                       {"word", w.str()}, {"length", w.length()}, {"g_0", g0.str()}};
                detail::GapProfileLines::fill(j, prof);
                out << j.dump() << "\n";
            } else {
                out << "word=" << w.str() << "\n";
                out << "length=" << w.length() << "\n";
                out << "G_0=" << detail::render_text(g0) << "\n";
                detail::GapProfileLines::text(out, prof);
            }
        } else if (*ker) {
            Word w = detail::parse_word_arg(word_arg);
            KernelHit hit = kernel_of(w, d);
            Word kw = kernel_word(hit.index, cap);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg},
                       {"word", w.str()},  {"m", hit.index.m()}, {"i", hit.index.i()},
                       {"kernel", kw.str()}, {"position", hit.position}};
                out << j.dump() << "\n";
            } else {
                out << "m=" << hit.index.m() << "\n";
                out << "i=" << hit.index.i() << "\n";
                out << "word=" << kw.str() << "\n";
                out << "position=" << hit.position << "\n";
            }
        } else if (*decompose) {
            Word w = detail::parse_word_arg(word_arg);
            StarCoords sc = star_decompose(w, d, cap);
            auto [mu1, mu2] = cutseq::detail::star_margins(sc, cap);
            Word kw = kernel_word(sc.kernel, cap);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"word", w.str()},
                       {"m", sc.kernel.m()}, {"i", sc.kernel.i()}, {"x", sc.x}, {"y", sc.y},
                       {"mu1", mu1.str()}, {"kernel", kw.str()}, {"mu2", mu2.str()}};
                out << j.dump() << "\n";
            } else {
                out << "m=" << sc.kernel.m() << "\n";
                out << "i=" << sc.kernel.i() << "\n";
                out << "x=" << sc.x << "\n";
                out << "y=" << sc.y << "\n";
                out << "mu1=" << detail::render_text(mu1) << "\n";
                out << "kernel=" << kw.str() << "\n";
                out << "mu2=" << detail::render_text(mu2) << "\n";
            }
        } else if (*gaps) {
            Word w = detail::parse_word_arg(word_arg);
            GapProfile prof = factor_gaps(w, d, cap);
            Word g0 = gap_zero(w, d, cap);
            std::string labels = gap_sequence_labels(d, kernel_of(w, d).index.i(), p_arg);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"word", w.str()},
                       {"g_0", g0.str()}, {"labels", labels}};
                detail::GapProfileLines::fill(j, prof);
                out << j.dump() << "\n";
            } else {
                out << "G_0=" << detail::render_text(g0) << "\n";
                detail::GapProfileLines::text(out, prof);
                out << "seq=" << detail::seq_name(prof.labels) << "\n";
                if (p_arg > 0) out << "labels=" << labels << "\n";
            }
        } else if (*pos) {
            Word w = detail::parse_word_arg(word_arg);
            Index position = factor_position(w, d, p_arg, cap);
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"word", w.str()},
                       {"p", p_arg}, {"position", position}};
                out << j.dump() << "\n";
            } else {
                out << position << "\n";
            }
        } else if (*classify) {
            Word w = detail::parse_word_arg(word_arg);
            TypeTag tag = classify_type(w, d, cap);
            RelationSets sets = relation_sets(w, d, cap);
            bool pal = palindrome_check_star(w, d, cap);
            std::vector<std::string> rels;
            if (sets.adjacent) rels.push_back("P2");
            if (sets.separated) rels.push_back("S2");
            if (sets.overlapped) rels.push_back("O2");
            if (as_json) {
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"word", w.str()},
                       {"type", tag.to_string()}, {"relations", rels}, {"palindrome", pal}};
                out << j.dump() << "\n";
            } else {
                out << "type=" << tag.to_string() << "\n";
                out << "relations=";
                for (std::size_t t = 0; t < rels.size(); ++t) out << (t ? "," : "") << rels[t];
                out << "\n";
                out << "palindrome=" << (pal ? "true" : "false") << "\n";
            }
        } else if (*palindromes) {
            KernelIndex k(d_arg, m_arg, i_arg);
            auto words = palindromes_with_kernel(k, cap);
            if (as_json) {
                json list = json::array();
                for (const Word& w : words) list.push_back(w.str());
                json j{{"schema", detail::kSchemaVersion}, {"d", d_arg}, {"m", m_arg},
                       {"i", i_arg}, {"palindromes", list}};
                out << j.dump() << "\n";
            } else {
                for (const Word& w : words) out << w.str() << "\n";
            }
        } else if (*verify) {
            VerifyReport rep = verify_all(d, m_max, len_max, p_max, cap);
            if (as_json) {
                json checks = json::array();
                for (const auto& c : rep.checks) {
                    json jc{{"check", c.check}, {"params", c.params}, {"pass", c.pass}};
                    if (!c.pass) jc["counterexample"] = c.counterexample;
                    checks.push_back(jc);
                }
                json j{{"schema", detail::kSchemaVersion}, {"d", rep.d}, {"m_max", rep.m_max},
                       {"len_max", rep.len_max}, {"p_max", rep.p_max}, {"checks", checks},
                       {"all_pass", rep.all_pass()}};
                out << j.dump() << "\n";
            } else {
                for (const auto& c : rep.checks) {
                    if (c.pass) {
                        out << "PASS " << c.check << " (" << c.params << ")\n";
                    } else {
                        out << "FAIL " << c.check << " (" << c.params << "): " << c.counterexample
                            << "\n";
                    }
                }
                out << "result=" << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const InvalidAlphabetError& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 3;
    }
}

}  // namespace cutseq::cli
