// Knot Floer homology of the two pretzel families: cancellation of the
// Kauffman-state complex along its two diagonals, the closed forms in terms of
// the Alexander polynomial, the explicit disk pairings, and readouts.
#pragma once

#include "pretzel_hfk/alexander.hpp"
#include "pretzel_hfk/bigraded_table.hpp"
#include "pretzel_hfk/kauffman.hpp"
#include "pretzel_hfk/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pretzel_hfk {

/// Lower diagonal s - m of the Thm1 family; the other line is one above.
inline int thm1_lower_line(const Abc& p) { return p.b + p.c; }
/// Lower diagonal s - m of the Thm2 family.
inline int thm2_lower_line(const Abc& p) { return p.c - p.b - 1; }

/// A-states sit on s - m = b + c and B/C-states one line above, so every
/// differential goes A -> B/C inside one spin grading. With all of them
/// cancelling maximally, only |n_A - n_BC| generators survive per s.
inline BigradedTable reduce_two_lines(const ChainSummary& summary) {
    BigradedTable table;
    const int line = thm1_lower_line(summary.params);
    for (int s : summary.spins()) {
        const long long na = summary.n_a(s);
        const long long nbc = summary.n_bc(s);
        if (na > nbc)
            table.set(s - line, s, na - nbc);
        else if (nbc > na)
            table.set(s - line - 1, s, nbc - na);
    }
    return table;
}

/// Places |a_s| on whichever of the lines s - m = lower, lower + 1 has the
/// Maslov parity that makes the Euler characteristic reproduce alex.
inline BigradedTable closed_form_on_lines(const LaurentPoly& alex, int lower) {
    if (!alex.is_symmetric_normalized())
        throw std::invalid_argument("closed form: Alexander polynomial must be symmetric with value 1 at t = 1");
    BigradedTable table;
    for (const auto& [s, coeff] : alex.terms()) {
        const int m_low = s - lower;  // on s - m = lower
        const int m = (parity(m_low) == 0) == (coeff > 0) ? m_low : m_low - 1;
        const Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
        if (mag > Integer(std::numeric_limits<long long>::max()))
            throw std::overflow_error("closed form: rank exceeds 64 bits");
        table.set(m, s, static_cast<long long>(mag));
    }
    if (table.euler_characteristic() != alex)
        throw std::logic_error("closed form: no line assignment reproduces the Alexander polynomial");
    return table;
}

inline BigradedTable theorem1_closed_form(const Abc& p, const LaurentPoly& alex) {
    require_positive(p);
    return closed_form_on_lines(alex, thm1_lower_line(p));
}

inline BigradedTable theorem2_closed_form(const Abc& p, const LaurentPoly& alex) {
    require_positive(p);
    return closed_form_on_lines(alex, thm2_lower_line(p));
}

/// Explicit formulas for the Thm1 family read literally, with parts 5 and 6
/// parameterized by s = b - c - p - 1. Kept only for comparison against the
/// authoritative two-line table.
inline BigradedTable theorem1_literal_parts(const Abc& p) {
    require_positive(p);
    const auto [a, b, c] = p;
    BigradedTable t;
    auto put = [&t](int m, int s, long long rank) {
        if (rank > 0) t.add(m, s, rank);
    };
    put(0, b + c + 1, a);
    put(-2 * (b + c + 1), -(b + c + 1), a);
    for (int q = 0; q <= 2 * a - 1; ++q) put(-(q + 1), b + c - q, (2 * a - 1) - q);
    for (int q = 2 * a; q <= 2 * b; ++q) put(-q, b + c - q, q - (2 * a - 1));
    for (int q = 2 * b + 1; q <= 2 * c; ++q) put(-q, b + c - q, 2 * (b - a) + 1);
    for (int q = 0; q <= 2 * (b - a); ++q) put(-2 * c - q + 1, b - c - q - 1, 2 * (b - a) - q);
    for (int q = 2 * (b - a) + 1; q < 2 * b; ++q) put(-2 * c - q, b - c - q - 1, q - 2 * (b - a));
    return t;
}

/// Entries whose ranks differ, formatted "(m,s): expected x, got y".
inline std::vector<std::string> table_differences(const BigradedTable& expected, const BigradedTable& actual) {
    std::set<Bigrading> keys;
    for (const auto& [g, r] : expected.entries()) keys.insert(g);
    for (const auto& [g, r] : actual.entries()) keys.insert(g);
    std::vector<std::string> out;
    for (const Bigrading& g : keys) {
        const long long e = expected.rank(g.m, g.s);
        const long long a = actual.rank(g.m, g.s);
        if (e == a) continue;
        std::ostringstream os;
        os << "(" << g.m << "," << g.s << "): expected " << e << ", got " << a;
        out.push_back(os.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disk pairings

enum class PairKind {
    DlrDisk,     // A_{2b-l,p-l} -> B_{2a-1-l,p+e(l)}, valid for s > b - c
    SpecialB0k,  // A_{0,k}(a) -> B_{0,k}(a)
    EightGon,    // A_{2b-p,0}(a) -> C_{0,2b-p-1}(a)
    MirrorDisk,  // A_{l,2c-p'+l} -> C_{i,p'+e(i)} with p' = b + c + s, for s <= b - c
};

inline std::string_view to_string(PairKind k) {
    switch (k) {
        case PairKind::DlrDisk: return "DlrDisk";
        case PairKind::SpecialB0k: return "SpecialB0k";
        case PairKind::EightGon: return "EightGon";
        case PairKind::MirrorDisk: return "MirrorDisk";
    }
    return "?";
}

struct PairingEntry {
    KauffmanState source;
    KauffmanState target;
    PairKind kind = PairKind::DlrDisk;
    std::optional<int> l;
    std::optional<int> r;  // DlrDisk only: r = 2c - p - e(l)
};

/// True when target can appear in the boundary of source.
inline bool grading_compatible(const PairingEntry& e, const Abc& p) {
    const Bigrading gs = grading(e.source, p);
    const Bigrading gt = grading(e.target, p);
    return gs.s == gt.s && gs.m == gt.m + 1;
}

/// Spin gradings where the complex can be nonzero.
inline std::pair<int, int> spin_range(const Abc& p) { return {-(p.b + p.c + 1), p.b + p.c + 1}; }

/// Cancelling pairs in spin grading s, as a partial matching: A -> B disks
/// for s >= b - c, their mirror images A -> C for s <= b - c. Variant (a)
/// adds the special B_{0,k} pairs and the 8-gon pairs; in that variant the
/// generic constructions skip targets with i = 0, whose gradings are special.
inline std::vector<PairingEntry> pairing_differential(const Abc& p, Variant v, int s) {
    require_positive(p);
    const auto [lo, hi] = spin_range(p);
    if (s < lo || s > hi) throw std::out_of_range("pairing_differential: spin grading outside the support");
    const auto [a, b, c] = p;

    std::vector<PairingEntry> out;
    std::set<KauffmanState> used;
    auto offer = [&](PairingEntry e) {
        if (!in_range(e.source, p) || !in_range(e.target, p)) return;
        if (used.count(e.source) || used.count(e.target)) return;
        if (!grading_compatible(e, p))
            throw std::logic_error("pairing_differential: incompatible pair " + e.source.name() + " -> " +
                                   e.target.name());
        used.insert(e.source);
        used.insert(e.target);
        out.push_back(std::move(e));
    };

    if (v == Variant::a) {
        const int k = c - b - s;
        offer({{Family::A, 0, k, v}, {Family::B, 0, k, v}, PairKind::SpecialB0k, {}, {}});
        const int q = b + c - s;
        offer({{Family::A, 2 * b - q, 0, v}, {Family::C, 0, 2 * b - q - 1, v}, PairKind::EightGon, {}, {}});
    }
    // At s = b - c both B- and C-states occur, so both constructions apply.
    if (s >= b - c) {
        const int q = b + c - s;
        for (int l = 0; l <= 2 * b; ++l) {
            const int i = 2 * a - 1 - l;
            if (v == Variant::a && i == 0) continue;
            offer({{Family::A, 2 * b - l, q - l, v},
                   {Family::B, i, q + parity(l), v},
                   PairKind::DlrDisk,
                   l,
                   2 * c - q - parity(l)});
        }
    }
    if (s <= b - c) {
        // Image of the A -> B family under the symmetry (m, s) -> (m - 2s, -s).
        // In variant (a) the l = 0 source is taken by the special B_{0,k} pair,
        // so the C index shifts by one.
        const int q = b + c + s;
        for (int l = 0; l <= 2 * b; ++l) {
            const int i = v == Variant::b ? 2 * a - 1 - l : 2 * a - l;
            if (v == Variant::a && i == 0) continue;
            offer({{Family::A, l, 2 * c - q + l, v}, {Family::C, i, q + parity(i), v}, PairKind::MirrorDisk, l, {}});
        }
    }
    return out;
}

inline std::vector<PairingEntry> pairing_differential(const PretzelClass& cls, Variant v, int s) {
    if (cls.tag != ClassTag::Thm1) throw std::invalid_argument("pairing_differential: requires a Thm1 class");
    return pairing_differential(cls.abc, v, s);
}

/// Pairs over every spin grading of the support.
inline std::vector<PairingEntry> all_pairings(const Abc& p, Variant v) {
    std::vector<PairingEntry> out;
    const auto [lo, hi] = spin_range(p);
    for (int s = hi; s >= lo; --s) {
        auto part = pairing_differential(p, v, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct MatrixHomology {
    BigradedTable table;
    /// Per spin grading: did the pair matrix reach rank min(n_A, n_BC)?
    std::map<int, bool> complete;
    bool torsion_free = true;

    bool all_complete() const {
        for (const auto& [s, ok] : complete)
            if (!ok) return false;
        return true;
    }
};

/// Homology of the complex whose differential has a +1 for each listed pair
/// and 0 elsewhere, computed per spin grading from the Smith normal form.
inline MatrixHomology homology_via_matrix(const ChainSummary& summary, const std::vector<PairingEntry>& pairs) {
    const Abc& p = summary.params;
    const int line = thm1_lower_line(p);
    std::map<int, std::vector<KauffmanState>> rows, cols;
    for (const KauffmanState& x : enumerate_states(p, summary.variant)) {
        const int s = grading(x, p).s;
        (x.family == Family::A ? rows : cols)[s].push_back(x);
    }
    std::map<int, std::vector<const PairingEntry*>> by_s;
    for (const PairingEntry& e : pairs) {
        if (e.source.variant != summary.variant || e.target.variant != summary.variant)
            throw std::invalid_argument("homology_via_matrix: pair from another variant");
        if (e.source.family != Family::A || e.target.family == Family::A || !grading_compatible(e, p))
            throw std::invalid_argument("homology_via_matrix: pair is not an A -> B/C differential");
        by_s[grading(e.source, p).s].push_back(&e);
    }

    MatrixHomology result;
    for (int s : summary.spins()) {
        const auto& r = rows[s];
        const auto& cl = cols[s];
        IntMatrix<long long> m(r.size(), std::vector<long long>(cl.size(), 0));
        for (const PairingEntry* e : by_s[s]) {
            const auto ri = std::find(r.begin(), r.end(), e->source) - r.begin();
            const auto ci = std::find(cl.begin(), cl.end(), e->target) - cl.begin();
            m[ri][ci] = 1;
        }
        const auto snf = smith_normal_form(std::move(m));
        const long long rank = static_cast<long long>(snf.rank());
        const long long na = static_cast<long long>(r.size());
        const long long nbc = static_cast<long long>(cl.size());
        result.torsion_free = result.torsion_free && snf.torsion_free();
        result.complete[s] = rank == std::min(na, nbc);
        result.table.set(s - line, s, na - rank);
        result.table.set(s - line - 1, s, nbc - rank);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Readouts

struct HfkResult {
    BigradedTable table;
    int genus = 0;
    bool fibered = false;
    long long total_rank = 0;
    LaurentPoly alexander;
};

/// Genus is the top Alexander grading carrying homology; the knot is fibered
/// iff that group has rank one.
inline HfkResult readouts(const BigradedTable& table, const LaurentPoly& alex) {
    if (table.empty()) throw std::invalid_argument("readouts: empty table");
    HfkResult res;
    res.table = table;
    res.genus = *table.max_s();
    res.fibered = table.rank_at_s(res.genus) == 1;
    res.total_rank = table.total_rank();
    res.alexander = alex;
    return res;
}

}  // namespace pretzel_hfk
