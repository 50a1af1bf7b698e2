#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pd7kit/rational.hpp"

namespace pd7kit {

// Laurent polynomial in one formal variable over the rationals.
// Invariant: no stored zero coefficients.
class LaurentPoly {
   public:
    using Coeffs = std::map<long, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}
    LaurentPoly(std::initializer_list<std::pair<long, Rational>> terms);

    static LaurentPoly monomial(long exp, Rational coef = Rational(1));
    static LaurentPoly constant(Rational c) { return monomial(0, std::move(c)); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;
    std::size_t term_count() const { return coeffs_.size(); }
    const Coeffs& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    Rational coeff(long exp) const;

    void set_coeff(long exp, Rational c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Rational& k) const;
    LaurentPoly shifted(long dexp) const;  // multiply by var^dexp

    // Formal derivative; d/dz z^k = k z^{k-1} for all integer k.
    LaurentPoly derivative() const;

    // Exact quotient q with q*den == *this. Throws NonExactDivision when the
    // remainder is nonzero, DivisionByZero when den == 0.
    LaurentPoly exact_divide(const LaurentPoly& den) const;

    // Horner evaluation; coefficients become floating point here and only here.
    // Throws PoleAtZero when zeta == 0 and negative exponents are present.
    std::complex<double> eval(std::complex<double> zeta) const;

    std::string to_string() const;

    // JSON: list of {"exp": int, "num": str, "den": str}, sorted by exponent.
    // Round-trips bit-exactly.
    std::string to_json() const;
    static LaurentPoly from_json(const std::string& text);

   private:
    Coeffs coeffs_;
    std::string var_ = "zeta";
};

}  // namespace pd7kit
