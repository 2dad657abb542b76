// Kauffman states of the (-2a, 2b+1, 2c+1) projection and their gradings.
//
// A state is fixed by where the marked points of the two distinguished regions
// sit: next to crossings of bands (2,3) for family A, (1,3) for family B and
// (1,2) for family C. Band 1 has 2a crossings (index i), band 2 has 2b+1
// (index j), band 3 has 2c+1 (index k). The two variants correspond to the
// two choices of base point on the knot.
#pragma once

#include "pretzel_hfk/pretzel.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pretzel_hfk {

enum class Family { A, B, C };
enum class Variant { a, b };

inline char to_char(Family f) { return f == Family::A ? 'A' : f == Family::B ? 'B' : 'C'; }
inline char to_char(Variant v) { return v == Variant::a ? 'a' : 'b'; }

struct KauffmanState {
    Family family = Family::A;
    int idx1 = 0;  // j for A, i for B and C
    int idx2 = 0;  // k for A and B, j for C
    Variant variant = Variant::b;

    friend bool operator==(const KauffmanState&, const KauffmanState&) = default;
    friend auto operator<=>(const KauffmanState&, const KauffmanState&) = default;

    std::string name() const {
        return std::string(1, to_char(family)) + "_{" + std::to_string(idx1) + "," + std::to_string(idx2) + "}(" +
               to_char(variant) + ")";
    }
};

struct Bigrading {
    int m = 0;  // Maslov
    int s = 0;  // spin (Alexander)

    friend bool operator==(const Bigrading&, const Bigrading&) = default;
    friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// i mod 2, taken in {0, 1}.
constexpr int parity(int i) { return ((i % 2) + 2) % 2; }

/// Inclusive index ranges [0, hi] of the two indices of a family.
inline std::pair<int, int> index_bounds(Family f, const Abc& p) {
    switch (f) {
        case Family::A: return {2 * p.b, 2 * p.c};
        case Family::B: return {2 * p.a - 1, 2 * p.c};
        case Family::C: return {2 * p.a - 1, 2 * p.b};
    }
    return {-1, -1};
}

inline bool in_range(const KauffmanState& x, const Abc& p) {
    const auto [hi1, hi2] = index_bounds(x.family, p);
    return x.idx1 >= 0 && x.idx1 <= hi1 && x.idx2 >= 0 && x.idx2 <= hi2;
}

inline void require_positive(const Abc& p) {
    if (p.a < 1 || p.b < 1 || p.c < 1) throw std::invalid_argument("family parameters a, b, c must be positive");
}

/// All states of one variant, ordered by (family, idx1, idx2).
inline std::vector<KauffmanState> enumerate_states(const Abc& p, Variant v) {
    require_positive(p);
    std::vector<KauffmanState> states;
    for (Family f : {Family::A, Family::B, Family::C}) {
        const auto [hi1, hi2] = index_bounds(f, p);
        for (int x = 0; x <= hi1; ++x)
            for (int y = 0; y <= hi2; ++y) states.push_back({f, x, y, v});
    }
    return states;
}

inline std::vector<KauffmanState> enumerate_states(const PretzelClass& cls, Variant v) {
    if (cls.tag != ClassTag::Thm1) throw std::invalid_argument("enumerate_states: requires a Thm1 class");
    return enumerate_states(cls.abc, v);
}

/// Maslov and spin grading of a state. Variant (a) has special rows for
/// B_{0,k} and C_{0,j}; variant (b) is uniform in i.
inline Bigrading grading(const KauffmanState& x, const Abc& p) {
    if (!in_range(x, p)) throw std::out_of_range("grading: state index out of range: " + x.name());
    const int b = p.b, c = p.c;
    switch (x.family) {
        case Family::A: {
            const int j = x.idx1, k = x.idx2;
            return {j - k - 2 * b, (j - k) + (c - b)};
        }
        case Family::B: {
            const int i = x.idx1, k = x.idx2;
            if (x.variant == Variant::a && i == 0) return {-k - 2 * b - 1, -k + (c - b)};
            return {-parity(i) - k, b + c + 1 - parity(i) - k};
        }
        case Family::C: {
            const int i = x.idx1, j = x.idx2;
            if (x.variant == Variant::a && i == 0) return {j - 2 * b, j - b + c + 1};
            return {j - parity(i) - 2 * b - 2 * c - 1, j - parity(i) - b - c};
        }
    }
    return {};
}

inline Bigrading grading(const KauffmanState& x, const PretzelClass& cls) { return grading(x, cls.abc); }

/// s - m - (b + c); 0 on A-states, 1 on B- and C-states.
inline int delta(const KauffmanState& x, const Abc& p) {
    const Bigrading g = grading(x, p);
    return g.s - g.m - (p.b + p.c);
}

struct ChainSummary {
    Abc params{};
    Variant variant = Variant::b;
    std::map<Bigrading, long long> counts;
    std::map<std::pair<Family, int>, long long> per_family;

    long long count_at(Family f, int s) const {
        auto it = per_family.find({f, s});
        return it == per_family.end() ? 0 : it->second;
    }
    long long n_a(int s) const { return count_at(Family::A, s); }
    long long n_bc(int s) const { return count_at(Family::B, s) + count_at(Family::C, s); }

    long long total() const {
        long long t = 0;
        for (const auto& [g, n] : counts) t += n;
        return t;
    }

    /// Spin gradings carrying at least one generator, ascending.
    std::vector<int> spins() const {
        std::vector<int> out;
        for (const auto& [key, n] : per_family)
            if (n > 0) out.push_back(key.second);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

inline ChainSummary chain_summary(const Abc& p, Variant v) {
    ChainSummary sum;
    sum.params = p;
    sum.variant = v;
    for (const KauffmanState& x : enumerate_states(p, v)) {
        const Bigrading g = grading(x, p);
        ++sum.counts[g];
        ++sum.per_family[{x.family, g.s}];
    }
    return sum;
}

inline ChainSummary chain_summary(const PretzelClass& cls, Variant v) {
    if (cls.tag != ClassTag::Thm1) throw std::invalid_argument("chain_summary: requires a Thm1 class");
    return chain_summary(cls.abc, v);
}

}  // namespace pretzel_hfk
