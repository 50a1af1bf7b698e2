#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pd7kit/errors.hpp"

namespace pd7kit {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin wrapper over GMP's mpq_class that pins the canonical form at every
// construction site and exposes exact decimal-string I/O.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    // Exact decimal strings, e.g. ("-4", "1").
    Rational(const std::string& num, const std::string& den)
        : v_(mpz_class(num), mpz_class(den)) {
        if (sgn(v_.get_den()) == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }
    std::string to_string() const;

    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    // log2 of the magnitude, -inf for zero; used for precision planning.
    double log2_abs() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

   private:
    mpq_class v_;
};

}  // namespace pd7kit
