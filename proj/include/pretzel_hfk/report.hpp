// Run reports for single knots and parameter sweeps, the verification check
// suite, and JSON / CSV / pretty rendering used by the command-line tool.
#pragma once

#include "pretzel_hfk/alexander.hpp"
#include "pretzel_hfk/hfk.hpp"
#include "pretzel_hfk/pretzel.hpp"
#include "pretzel_hfk/wirtinger.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace pretzel_hfk {

enum class VariantChoice { a, b, both };
enum class OracleChoice { fox, statesum, both };
enum class FamilyChoice { thm1, thm2, all };
enum class OutputFormat { json, csv, pretty };

struct RunOptions {
    VariantChoice variant = VariantChoice::b;
    OracleChoice oracle = OracleChoice::both;
    bool verify = false;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Informational checks are reported but never fail a run.
    bool informational = false;
};

struct RunReport {
    PretzelParams knot{};
    PretzelClass cls{};
    std::optional<LaurentPoly> alexander;
    BigradedTable table;
    std::optional<int> genus;
    std::optional<bool> fibered;
    long long total_rank = 0;
    std::vector<Check> checks;

    bool computed() const { return cls.has_family() && alexander.has_value(); }
    bool mandatory_checks_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.passed; });
    }
};

namespace detail {

class CheckList {
public:
    explicit CheckList(std::vector<Check>& out) : out_(out) {}

    /// Runs fn; an exception turns into a failed check carrying its message.
    void run(std::string name, const std::function<bool(std::string&)>& fn, bool informational = false) {
        Check c{std::move(name), false, {}, informational};
        try {
            c.passed = fn(c.detail);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(c));
    }

private:
    std::vector<Check>& out_;
};

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = "; ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string abc_string(const Abc& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
}

inline Integer pretzel_determinant(const PretzelParams& k) {
    const long long v = 1LL * k[0] * k[1] + 1LL * k[1] * k[2] + 1LL * k[0] * k[2];
    return Integer(v < 0 ? -v : v);
}

inline void add_table_checks(CheckList& checks, const BigradedTable& table, const LaurentPoly& alex, int lower,
                             std::string_view family, const PretzelParams& knot) {
    checks.run("two_line_support", [&](std::string& d) {
        d = std::string(family) + ": s - m in {" + std::to_string(lower) + "," + std::to_string(lower + 1) + "}";
        return supported_on_two_lines(table, lower);
    });
    checks.run("symmetry", [&](std::string& d) {
        d = "rank(m,s) = rank(m-2s,-s)";
        return symmetry_check(table);
    });
    checks.run("euler_characteristic", [&](std::string& d) {
        const LaurentPoly chi = table.euler_characteristic();
        d = "chi = " + chi.to_string();
        return chi == alex;
    });
    checks.run("parity", [&](std::string& d) {
        const long long total = table.total_rank();
        const Integer det = knot_determinant(alex);
        d = "total rank " + std::to_string(total) + ", |Delta(-1)| = " + det.str();
        return total % 2 == 1 && det % 2 == 1 && det <= Integer(total);
    });
    checks.run("determinant_formula", [&](std::string& d) {
        const Integer expected = pretzel_determinant(knot);
        d = "|p1 p2 + p2 p3 + p1 p3| = " + expected.str();
        return knot_determinant(alex) == expected;
    });
}

inline void add_fox_column_check(CheckList& checks, const PretzelParams& knot) {
    checks.run("fox_column_independence", [&](std::string& d) {
        const WirtingerPresentation pres = wirtinger(knot);
        const LaurentPoly first = fox_alexander(pres, 0);
        const LaurentPoly last = fox_alexander(pres, pres.generator_count - 1);
        d = "columns 0 and " + std::to_string(pres.generator_count - 1);
        return first == last;
    });
}

inline void compute_thm1(RunReport& rep, const RunOptions& opt) {
    const Abc p = rep.cls.abc;
    CheckList checks(rep.checks);
    const bool want_a = opt.verify || opt.variant != VariantChoice::b;
    const bool want_b = opt.verify || opt.variant != VariantChoice::a;
    const Variant primary = opt.variant == VariantChoice::a ? Variant::a : Variant::b;

    std::optional<ChainSummary> sum_a, sum_b;
    if (want_a) sum_a = chain_summary(p, Variant::a);
    if (want_b) sum_b = chain_summary(p, Variant::b);
    const ChainSummary& main_sum = primary == Variant::a ? *sum_a : *sum_b;

    const bool want_fox = opt.verify || opt.oracle != OracleChoice::statesum;
    const bool want_state = opt.verify || opt.oracle != OracleChoice::fox;
    std::optional<LaurentPoly> state_alex, fox_alex;
    if (want_state) state_alex = euler_characteristic(main_sum);
    if (want_fox) fox_alex = fox_alexander(wirtinger(rep.cls.canonical));
    const LaurentPoly alex = state_alex ? *state_alex : *fox_alex;

    const BigradedTable reduced = reduce_two_lines(main_sum);
    checks.run("closed_form_matches_reduction", [&](std::string& d) {
        d = std::string("variant ") + to_char(primary);
        return theorem1_closed_form(p, alex) == reduced;
    });
    if (state_alex && fox_alex) {
        checks.run("oracle_agreement", [&](std::string& d) {
            d = "state sum " + state_alex->to_string() + " vs Fox " + fox_alex->to_string();
            return *state_alex == *fox_alex;
        });
    }
    if (sum_a && sum_b) {
        checks.run("variant_independence", [&](std::string& d) {
            const bool chi = raw_euler_characteristic(*sum_a) == raw_euler_characteristic(*sum_b);
            const bool tables = reduce_two_lines(*sum_a) == reduce_two_lines(*sum_b);
            d = std::string("euler ") + (chi ? "equal" : "differ") + ", reduced tables " + (tables ? "equal" : "differ");
            return chi && tables;
        });
    }

    if (opt.verify) {
        for (const ChainSummary* s : {&*sum_a, &*sum_b}) {
            checks.run(std::string("closed_form_variant_") + to_char(s->variant), [&](std::string& d) {
                d = "reduce_two_lines = theorem1_closed_form";
                return reduce_two_lines(*s) == theorem1_closed_form(p, euler_characteristic(*s));
            });
        }
        add_table_checks(checks, reduced, alex, thm1_lower_line(p), "Thm1", rep.cls.canonical);
        checks.run("top_group", [&](std::string& d) {
            const int top = p.b + p.c + 1;
            d = "rank " + std::to_string(reduced.rank(0, top)) + " at (0," + std::to_string(top) + "), expected " +
                std::to_string(p.a);
            return reduced.max_s() == top && reduced.rank_at_s(top) == p.a && reduced.rank(0, top) == p.a &&
                   reduced.rank(-2 * top, -top) == p.a;
        });
        for (const ChainSummary* s : {&*sum_a, &*sum_b}) {
            const std::vector<PairingEntry> pairs = all_pairings(p, s->variant);
            checks.run(std::string("pairing_integrity_variant_") + to_char(s->variant), [&](std::string& d) {
                d = std::to_string(pairs.size()) + " pairs";
                return std::all_of(pairs.begin(), pairs.end(), [&](const PairingEntry& e) {
                    return in_range(e.source, p) && in_range(e.target, p) && grading_compatible(e, p);
                });
            });
            checks.run(std::string("matrix_agreement_variant_") + to_char(s->variant), [&](std::string& d) {
                const MatrixHomology mh = homology_via_matrix(*s, pairs);
                const BigradedTable red = reduce_two_lines(*s);
                const int line = thm1_lower_line(p);
                int complete = 0;
                bool agree = true;
                for (const auto& [spin, ok] : mh.complete) {
                    if (!ok) continue;
                    ++complete;
                    agree = agree && mh.table.rank(spin - line, spin) == red.rank(spin - line, spin) &&
                            mh.table.rank(spin - line - 1, spin) == red.rank(spin - line - 1, spin);
                }
                d = "complete on " + std::to_string(complete) + "/" + std::to_string(mh.complete.size()) +
                    " spin gradings" + (mh.torsion_free ? "" : ", torsion found");
                return agree && mh.torsion_free;
            });
        }
        add_fox_column_check(checks, rep.cls.canonical);
        checks.run(
            "literal_theorem_parts",
            [&](std::string& d) {
                const auto diff = table_differences(reduced, theorem1_literal_parts(p));
                d = diff.empty() ? "literal formulas agree" : "literal formulas differ: " + join(diff);
                return diff.empty();
            },
            true);
    }

    rep.alexander = alex;
    rep.table = rep.cls.mirrored ? mirror_transform(reduced) : reduced;
}

inline void compute_thm2(RunReport& rep, const RunOptions& opt) {
    const Abc p = rep.cls.abc;
    CheckList checks(rep.checks);
    const LaurentPoly alex = fox_alexander(wirtinger(rep.cls.canonical));
    if (opt.oracle == OracleChoice::statesum) {
        checks.run(
            "oracle", [](std::string& d) {
                d = "no state sum for this family; Fox calculus used";
                return true;
            },
            true);
    }
    const BigradedTable table = theorem2_closed_form(p, alex);
    if (opt.verify) {
        add_table_checks(checks, table, alex, thm2_lower_line(p), "Thm2", rep.cls.canonical);
        add_fox_column_check(checks, rep.cls.canonical);
    } else {
        checks.run("euler_characteristic", [&](std::string& d) {
            d = "closed form reproduces Delta";
            return table.euler_characteristic() == alex;
        });
    }
    rep.alexander = alex;
    rep.table = rep.cls.mirrored ? mirror_transform(table) : table;
}

}  // namespace detail

inline RunReport run_single(const PretzelParams& knot, const RunOptions& opt = {}) {
    RunReport rep;
    rep.cls = classify(knot);
    rep.knot = rep.cls.canonical;
    if (!rep.cls.has_family()) {
        rep.checks.push_back({"in_scope", false, rep.cls.reason, true});
        return rep;
    }
    try {
        if (rep.cls.is_thm1_family())
            detail::compute_thm1(rep, opt);
        else
            detail::compute_thm2(rep, opt);
    } catch (const std::exception& e) {
        rep.checks.push_back({"computation", false, std::string("exception: ") + e.what(), false});
        return rep;
    }
    if (opt.verify) {
        detail::CheckList(rep.checks).run("symmetry_final", [&](std::string& d) {
            d = rep.cls.mirrored ? "after mirroring" : "as computed";
            return symmetry_check(rep.table);
        });
    }
    if (!rep.table.empty()) {
        const HfkResult r = readouts(rep.table, *rep.alexander);
        rep.genus = r.genus;
        rep.fibered = r.fibered;
        rep.total_rank = r.total_rank;
    }
    return rep;
}

/// Verification run: every check of every module for this knot.
inline RunReport run_verify(const PretzelParams& knot, RunOptions opt = {}) {
    opt.verify = true;
    return run_single(knot, opt);
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRange {
    int a_lo = 1, a_hi = 1;
    int b_lo = 1, b_hi = 1;
    int c_lo = 1, c_hi = 1;
};

namespace detail {

inline int parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

}  // namespace detail

/// "P1,P2,P3"
inline PretzelParams parse_triple(std::string_view text) {
    const auto parts = detail::split(text, ',');
    if (parts.size() != 3) throw std::invalid_argument("expected three comma-separated integers, got '" + std::string(text) + "'");
    return {detail::parse_int(parts[0]), detail::parse_int(parts[1]), detail::parse_int(parts[2])};
}

/// "a=L..U,b=L..U,c=L..U" with 1 <= L <= U.
inline SweepRange parse_sweep(std::string_view text) {
    SweepRange r;
    bool seen[3] = {false, false, false};
    for (std::string_view item : detail::split(text, ',')) {
        const std::size_t eq = item.find('=');
        const std::size_t dots = item.find("..");
        if (eq != 1 || dots == std::string_view::npos || dots < eq)
            throw std::invalid_argument("bad range '" + std::string(item) + "', expected x=L..U");
        const char key = item[0];
        const int lo = detail::parse_int(item.substr(eq + 1, dots - eq - 1));
        const int hi = detail::parse_int(item.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::invalid_argument("empty or non-positive range '" + std::string(item) + "'");
        int idx = key == 'a' ? 0 : key == 'b' ? 1 : key == 'c' ? 2 : -1;
        if (idx < 0) throw std::invalid_argument("unknown range key '" + std::string(1, key) + "'");
        if (seen[idx]) throw std::invalid_argument("duplicate range key '" + std::string(1, key) + "'");
        seen[idx] = true;
        (idx == 0 ? r.a_lo : idx == 1 ? r.b_lo : r.c_lo) = lo;
        (idx == 0 ? r.a_hi : idx == 1 ? r.b_hi : r.c_hi) = hi;
    }
    if (!(seen[0] && seen[1] && seen[2])) throw std::invalid_argument("sweep needs ranges for a, b and c");
    return r;
}

/// Knots of a sweep in report order: lexicographic in (a, b, c), Thm1 before Thm2.
inline std::vector<PretzelParams> sweep_knots(const SweepRange& r, FamilyChoice family) {
    std::vector<PretzelParams> out;
    for (int a = r.a_lo; a <= r.a_hi; ++a)
        for (int b = r.b_lo; b <= r.b_hi; ++b)
            for (int c = r.c_lo; c <= r.c_hi; ++c) {
                if (family != FamilyChoice::thm2) out.push_back(thm1_knot({a, b, c}));
                if (family != FamilyChoice::thm1) out.push_back(thm2_knot({a, b, c}));
            }
    return out;
}

/// Runs every knot of the sweep on a worker pool; each worker writes only its
/// own slots, so the output order is fixed.
inline std::vector<RunReport> run_sweep(const SweepRange& r, FamilyChoice family, const RunOptions& opt,
                                        unsigned threads = 0) {
    const std::vector<PretzelParams> knots = sweep_knots(r, family);
    std::vector<RunReport> reports(knots.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, knots.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < knots.size(); i = next++) reports[i] = run_single(knots[i], opt);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return reports;
}

// ---------------------------------------------------------------------------
// Exit codes

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitOutOfScope = 2, kExitVerificationFailed = 3 };

inline int exit_code(const std::vector<RunReport>& reports) {
    bool out_of_scope = false;
    for (const RunReport& r : reports) {
        if (!r.cls.has_family()) {
            out_of_scope = true;
            continue;
        }
        if (!r.computed() || !r.mandatory_checks_pass()) return kExitVerificationFailed;
    }
    return out_of_scope ? kExitOutOfScope : kExitOk;
}

// ---------------------------------------------------------------------------
// Rendering

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

}  // namespace detail

inline Json to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, detail::integer_json(c)}));
    return arr;
}

inline Json to_json(const RunReport& r) {
    Json j;
    j["knot"] = Json::array({r.knot[0], r.knot[1], r.knot[2]});
    Json cls;
    cls["tag"] = std::string(to_string(r.cls.tag));
    if (r.cls.has_family()) {
        cls["a"] = r.cls.abc.a;
        cls["b"] = r.cls.abc.b;
        cls["c"] = r.cls.abc.c;
    }
    cls["mirrored"] = r.cls.mirrored;
    if (!r.cls.reason.empty()) cls["reason"] = r.cls.reason;
    j["class"] = std::move(cls);
    j["alexander"] = r.alexander ? to_json(*r.alexander) : Json(nullptr);
    Json groups = Json::array();
    for (const auto& [g, rank] : r.table.display_order()) groups.push_back({{"m", g.m}, {"s", g.s}, {"rank", rank}});
    j["groups"] = std::move(groups);
    j["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
    j["fibered"] = r.fibered ? Json(*r.fibered) : Json(nullptr);
    j["total_rank"] = r.total_rank;
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.passed;
        cj["informational"] = c.informational;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

/// One report renders as the report object; a sweep as {reports, summary}.
inline std::string render_json(const std::vector<RunReport>& reports, bool sweep) {
    if (!sweep && reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    Json j;
    Json arr = Json::array();
    std::size_t passed = 0;
    for (const RunReport& r : reports) {
        arr.push_back(to_json(r));
        if (r.computed() && r.mandatory_checks_pass()) ++passed;
    }
    j["reports"] = std::move(arr);
    j["summary"] = {{"count", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}};
    return j.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<RunReport>& reports) {
    std::ostringstream os;
    os << "p1,p2,p3,tag,a,b,c,m,s,rank\n";
    for (const RunReport& r : reports) {
        const auto& k = r.knot;
        const std::string head = std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
                                 std::string(to_string(r.cls.tag)) + ",";
        const std::string abc = r.cls.has_family() ? std::to_string(r.cls.abc.a) + "," + std::to_string(r.cls.abc.b) +
                                                         "," + std::to_string(r.cls.abc.c) + ","
                                                   : std::string(",,,");
        for (const auto& [g, rank] : r.table.display_order())
            os << head << abc << g.m << ',' << g.s << ',' << rank << '\n';
        if (r.table.empty()) os << head << abc << ",,\n";
    }
    return os.str();
}

/// The table as an (m, s) grid with one row per s, highest s first.
inline std::string render_grid(const BigradedTable& t) {
    if (t.empty()) return "  (empty)\n";
    int m_lo = 0, m_hi = 0, s_lo = 0, s_hi = 0;
    bool first = true;
    for (const auto& [g, r] : t.entries()) {
        if (first) {
            m_lo = m_hi = g.m;
            s_lo = s_hi = g.s;
            first = false;
        }
        m_lo = std::min(m_lo, g.m);
        m_hi = std::max(m_hi, g.m);
        s_lo = std::min(s_lo, g.s);
        s_hi = std::max(s_hi, g.s);
    }
    std::ostringstream os;
    os << std::setw(6) << "s\\m";
    for (int m = m_lo; m <= m_hi; ++m) os << std::setw(4) << m;
    os << '\n';
    for (int s = s_hi; s >= s_lo; --s) {
        os << std::setw(6) << s;
        for (int m = m_lo; m <= m_hi; ++m) {
            const long long r = t.rank(m, s);
            os << std::setw(4) << (r ? std::to_string(r) : std::string("."));
        }
        os << '\n';
    }
    return os.str();
}

inline std::string render_pretty(const std::vector<RunReport>& reports) {
    std::ostringstream os;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const RunReport& r = reports[i];
        if (i) os << '\n';
        os << "K(" << r.knot[0] << "," << r.knot[1] << "," << r.knot[2] << ")  " << to_string(r.cls.tag);
        if (r.cls.has_family()) os << "  (a,b,c) = " << detail::abc_string(r.cls.abc);
        if (r.cls.mirrored) os << "  [mirrored]";
        os << '\n';
        if (!r.cls.reason.empty()) os << "  " << r.cls.reason << '\n';
        if (r.alexander) os << "  Alexander: " << *r.alexander << '\n';
        if (r.genus)
            os << "  genus " << *r.genus << ", fibered " << (*r.fibered ? "yes" : "no") << ", total rank "
               << r.total_rank << "\n\n"
               << render_grid(r.table);
        for (const Check& c : r.checks)
            os << "  [" << (c.passed ? "PASS" : c.informational ? "INFO" : "FAIL") << "] " << c.name
               << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
    return os.str();
}

}  // namespace pretzel_hfk
