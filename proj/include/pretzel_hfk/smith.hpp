// Smith normal form of a dense integer matrix.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pretzel_hfk {

template <class Int>
using IntMatrix = std::vector<std::vector<Int>>;

template <class Int>
struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
    std::vector<Int> invariant_factors;

    std::size_t rank() const noexcept { return invariant_factors.size(); }
    bool torsion_free() const {
        return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](const Int& d) { return d == 1; });
    }
};

namespace detail {

template <class Int>
Int abs_value(const Int& x) {
    return x < 0 ? Int(-x) : x;
}

}  // namespace detail

template <class Int>
SmithForm<Int> smith_normal_form(IntMatrix<Int> m) {
    using detail::abs_value;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (auto& row : m) std::swap(row[x], row[y]);
    };
    // Moves the smallest nonzero entry of the trailing block to (t, t).
    auto place_pivot = [&](std::size_t t, bool row_and_col_only) -> bool {
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (row_and_col_only && i != t && j != t) continue;
                if (m[i][j] == 0) continue;
                if (bi == rows || abs_value(m[i][j]) < abs_value(m[bi][bj])) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) return false;
        std::swap(m[t], m[bi]);
        swap_cols(t, bj);
        return true;
    };

    SmithForm<Int> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        if (!place_pivot(t, false)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                const Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                const Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) {
                place_pivot(t, true);
                continue;
            }
            // The pivot must divide the whole trailing block.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows) break;
            for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad_row][j];
        }
        out.invariant_factors.push_back(abs_value(m[t][t]));
    }
    return out;
}

template <class Int>
std::size_t matrix_rank(IntMatrix<Int> m) {
    return smith_normal_form(std::move(m)).rank();
}

}  // namespace pretzel_hfk
