// Free-abelian ranks indexed by (Maslov m, Alexander s).
#pragma once

#include "pretzel_hfk/kauffman.hpp"
#include "pretzel_hfk/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pretzel_hfk {

class BigradedTable {
public:
    using Entries = std::map<Bigrading, long long>;

    BigradedTable() = default;
    BigradedTable(std::initializer_list<std::pair<Bigrading, long long>> entries) {
        for (const auto& [g, r] : entries) set(g.m, g.s, r);
    }

    /// Sets rank(m, s); a zero rank removes the entry.
    void set(int m, int s, long long rank) {
        if (rank < 0) throw std::invalid_argument("BigradedTable: negative rank");
        if (rank == 0)
            entries_.erase({m, s});
        else
            entries_[{m, s}] = rank;
    }

    void add(int m, int s, long long rank) { set(m, s, this->rank(m, s) + rank); }

    long long rank(int m, int s) const {
        auto it = entries_.find({m, s});
        return it == entries_.end() ? 0 : it->second;
    }

    const Entries& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    long long total_rank() const {
        long long t = 0;
        for (const auto& [g, r] : entries_) t += r;
        return t;
    }

    std::optional<int> max_s() const {
        std::optional<int> best;
        for (const auto& [g, r] : entries_)
            if (!best || g.s > *best) best = g.s;
        return best;
    }

    /// Total rank in one Alexander grading.
    long long rank_at_s(int s) const {
        long long t = 0;
        for (const auto& [g, r] : entries_)
            if (g.s == s) t += r;
        return t;
    }

    /// Sum of (-1)^m rank t^s.
    LaurentPoly euler_characteristic() const {
        LaurentPoly chi;
        for (const auto& [g, r] : entries_) chi.add_term(g.s, Integer(parity(g.m) == 0 ? r : -r));
        return chi;
    }

    /// Entries ordered by s descending, then m ascending.
    std::vector<std::pair<Bigrading, long long>> display_order() const {
        std::vector<std::pair<Bigrading, long long>> out(entries_.begin(), entries_.end());
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            if (x.first.s != y.first.s) return x.first.s > y.first.s;
            return x.first.m < y.first.m;
        });
        return out;
    }

    friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

private:
    Entries entries_;
};

/// (m, s) -> (-m, -s).
inline BigradedTable mirror_transform(const BigradedTable& table) {
    BigradedTable out;
    for (const auto& [g, r] : table.entries()) out.set(-g.m, -g.s, r);
    return out;
}

/// rank(m, s) == rank(m - 2s, -s) for every entry.
inline bool symmetry_check(const BigradedTable& table) {
    for (const auto& [g, r] : table.entries())
        if (table.rank(g.m - 2 * g.s, -g.s) != r) return false;
    return true;
}

/// Every entry satisfies s - m in {lower, lower + 1}.
inline bool supported_on_two_lines(const BigradedTable& table, int lower) {
    for (const auto& [g, r] : table.entries()) {
        const int d = g.s - g.m;
        if (d != lower && d != lower + 1) return false;
    }
    return true;
}

}  // namespace pretzel_hfk
