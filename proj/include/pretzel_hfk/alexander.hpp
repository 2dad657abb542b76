// Alexander polynomials: graded Euler characteristic of the Kauffman-state
// complex, Fox calculus on a Wirtinger presentation, and the torus-knot
// closed form. Everything is exact.
#pragma once

#include "pretzel_hfk/kauffman.hpp"
#include "pretzel_hfk/laurent_poly.hpp"
#include "pretzel_hfk/wirtinger.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pretzel_hfk {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Sum over generators of (-1)^m t^s, before normalization.
inline LaurentPoly raw_euler_characteristic(const ChainSummary& summary) {
    LaurentPoly chi;
    for (const auto& [g, n] : summary.counts) chi.add_term(g.s, Integer(parity(g.m) == 0 ? n : -n));
    return chi;
}

inline LaurentPoly euler_characteristic(const ChainSummary& summary) {
    return raw_euler_characteristic(summary).normalized_symmetric();
}

/// Fox derivative of a word with respect to one generator, with every
/// generator sent to t.
inline LaurentPoly fox_derivative(const Word& word, int generator) {
    LaurentPoly d;
    int prefix = 0;
    for (const Letter& l : word) {
        if (l.generator == generator) {
            if (l.exponent == 1)
                d.add_term(prefix, 1);
            else
                d.add_term(prefix - 1, -1);
        }
        prefix += l.exponent;
    }
    return d;
}

/// Abelianized Alexander matrix: one row per relator, one column per generator.
inline PolyMatrix alexander_matrix(const WirtingerPresentation& pres) {
    PolyMatrix m(pres.relators.size(), std::vector<LaurentPoly>(pres.generator_count));
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
        for (int g = 0; g < pres.generator_count; ++g) m[r][g] = fox_derivative(pres.relators[r], g);
    return m;
}

/// Fraction-free (Bareiss) determinant. Each row is first multiplied by a
/// power of t so all entries are ordinary polynomials; the caller normalizes
/// away the resulting unit.
inline LaurentPoly bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(Integer(1));
    for (auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
        std::optional<int> lowest;
        for (const auto& e : row)
            if (!e.is_zero()) lowest = lowest ? std::min(*lowest, e.min_exponent()) : e.min_exponent();
        if (lowest)
            for (auto& e : row) e = e.shifted(-*lowest);
    }
    bool negate = false;
    LaurentPoly previous(Integer(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
            m[i][k] = LaurentPoly();
        }
        previous = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Normalized Alexander polynomial from the minor obtained by deleting the
/// given column and the last relator (any single Wirtinger relator is a
/// consequence of the others).
inline LaurentPoly fox_alexander(const WirtingerPresentation& pres, std::optional<int> deleted_column = std::nullopt) {
    const int n = pres.generator_count;
    if (n <= 0) throw std::invalid_argument("fox_alexander: presentation has no generators");
    if (static_cast<int>(pres.relators.size()) < n - 1)
        throw std::invalid_argument("fox_alexander: fewer than n - 1 relators");
    const int col = deleted_column.value_or(n - 1);
    if (col < 0 || col >= n) throw std::out_of_range("fox_alexander: deleted column out of range");
    if (n == 1) return LaurentPoly(Integer(1));

    const PolyMatrix full = alexander_matrix(pres);
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (int r = 0; r < n - 1; ++r) {
        std::vector<LaurentPoly> row;
        row.reserve(n - 1);
        for (int g = 0; g < n; ++g)
            if (g != col) row.push_back(full[r][g]);
        minor.push_back(std::move(row));
    }
    const LaurentPoly det = bareiss_determinant(std::move(minor));
    if (det.is_zero()) throw std::domain_error("fox_alexander: zero minor, malformed presentation");
    return det.normalized_symmetric();
}

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized.
inline LaurentPoly torus_alexander(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_alexander: need coprime p, q >= 2");
    const LaurentPoly one(Integer(1));
    const LaurentPoly num = (LaurentPoly::monomial(p * q) - one) * (LaurentPoly::monomial(1) - one);
    const LaurentPoly den = (LaurentPoly::monomial(p) - one) * (LaurentPoly::monomial(q) - one);
    return exact_divide(num, den).normalized_symmetric();
}

/// |Delta(-1)|
inline Integer knot_determinant(const LaurentPoly& alex) {
    Integer v = alex.evaluate_at(-1);
    return v < 0 ? Integer(-v) : v;
}

}  // namespace pretzel_hfk
