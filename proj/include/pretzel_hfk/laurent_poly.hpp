// Exact Laurent polynomials in one variable t with arbitrary-precision
// integer coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace pretzel_hfk {

using Integer = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    using Terms = std::map<int, Integer>;

    LaurentPoly() = default;

    /// Constant polynomial.
    explicit LaurentPoly(Integer constant) {
        if (constant != 0) terms_.emplace(0, std::move(constant));
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
        for (const auto& [e, c] : terms) add_term(e, Integer(c));
    }

    static LaurentPoly monomial(int exponent, Integer coefficient = 1) {
        LaurentPoly p;
        p.add_term(exponent, std::move(coefficient));
        return p;
    }

    static LaurentPoly from_terms(const Terms& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) p.add_term(e, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    int min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }
    int max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }

    Integer coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(int exponent, const Integer& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
        return out;
    }

    /// p(t^-1).
    LaurentPoly reciprocal() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
        return out;
    }

    /// Value at t = +1 or t = -1; other points are not units of the ring.
    Integer evaluate_at(int t) const {
        if (t != 1 && t != -1) throw std::invalid_argument("evaluate_at: only t = 1 or t = -1 is supported");
        Integer sum = 0;
        for (const auto& [e, c] : terms_) sum += (t == -1 && (e % 2 != 0)) ? Integer(-c) : c;
        return sum;
    }

    /// p(t) == p(t^-1) coefficient-wise, without any shift.
    bool is_reciprocal() const { return *this == reciprocal(); }

    bool is_symmetric_normalized() const { return is_reciprocal() && evaluate_at(1) == 1; }

    /// Strips the unit ±t^k so the result is reciprocal with value +1 at t = 1.
    LaurentPoly normalized_symmetric() const {
        if (is_zero()) throw std::domain_error("normalize: zero polynomial");
        const Integer at_one = evaluate_at(1);
        if (at_one == 0) throw std::domain_error("normalize: p(1) = 0");
        const int span = max_exponent() - min_exponent();
        if (span % 2 != 0) throw std::domain_error("normalize: odd degree span cannot be centred");
        LaurentPoly out = shifted(-(min_exponent() + span / 2));
        if (at_one < 0) out = -out;
        if (!out.is_reciprocal()) throw std::domain_error("normalize: polynomial is not symmetric up to units");
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        LaurentPoly out;
        for (const auto& [e1, c1] : lhs.terms_)
            for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Human-readable form, highest exponent first: "t^3 - t^2 + 1 - t^-2 + t^-3".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag;
            os << 't';
            if (e != 1) os << '^' << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw std::domain_error(std::string(what) + ": zero polynomial");
    }

    Terms terms_;
};

/// Exact quotient num / den in Z[t, t^-1]; throws if den does not divide num.
inline LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (num.is_zero()) return {};
    // Work with ordinary polynomials whose constant term may vanish only in num.
    const int shift = num.min_exponent() - den.min_exponent();
    LaurentPoly rem = num.shifted(-num.min_exponent());
    const LaurentPoly d = den.shifted(-den.min_exponent());
    const int d_deg = d.max_exponent();
    const Integer& lead = d.terms().rbegin()->second;
    LaurentPoly quotient;
    while (!rem.is_zero() && rem.max_exponent() >= d_deg) {
        const auto& [e, c] = *rem.terms().rbegin();
        if (c % lead != 0) throw std::domain_error("exact_divide: non-integral quotient");
        LaurentPoly term = LaurentPoly::monomial(e - d_deg, c / lead);
        rem -= term * d;
        quotient += term;
    }
    if (!rem.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
    return quotient.shifted(shift);
}

}  // namespace pretzel_hfk
