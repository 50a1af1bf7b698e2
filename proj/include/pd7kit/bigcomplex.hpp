#pragma once

#include <mpfr.h>

#include <complex>
#include <utility>

#include "pd7kit/rational.hpp"

namespace pd7kit {

// Minimal complex arithmetic on MPFR reals. Evaluating R_n at the scaled
// argument produces intermediate terms up to ~10^2000 with hundreds of digits
// of cancellation, so both the exponent range and the working precision of
// double are insufficient.
class BigComplex {
   public:
    explicit BigComplex(mpfr_prec_t prec = 256) {
        mpfr_init2(re_, prec);
        mpfr_init2(im_, prec);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
    }
    BigComplex(const BigComplex& o) {
        mpfr_init2(re_, mpfr_get_prec(o.re_));
        mpfr_init2(im_, mpfr_get_prec(o.im_));
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    BigComplex(BigComplex&& o) noexcept {
        mpfr_init2(re_, 2);
        mpfr_init2(im_, 2);
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
    }
    BigComplex& operator=(BigComplex o) {
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
        return *this;
    }
    ~BigComplex() {
        mpfr_clear(re_);
        mpfr_clear(im_);
    }

    static BigComplex from(std::complex<double> z, mpfr_prec_t prec) {
        BigComplex out(prec);
        mpfr_set_d(out.re_, z.real(), MPFR_RNDN);
        mpfr_set_d(out.im_, z.imag(), MPFR_RNDN);
        return out;
    }
    static BigComplex from(const Rational& q, mpfr_prec_t prec) {
        BigComplex out(prec);
        mpfr_set_q(out.re_, q.raw().get_mpq_t(), MPFR_RNDN);
        return out;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(re_); }
    mpfr_ptr re() { return re_; }
    mpfr_ptr im() { return im_; }
    mpfr_srcptr re() const { return re_; }
    mpfr_srcptr im() const { return im_; }

    std::complex<double> to_double() const {
        return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)};
    }
    bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }
    // log2|z| (max-norm approximation is enough for precision planning)
    double log2_abs() const;

    BigComplex& add(const BigComplex& o);
    BigComplex& sub(const BigComplex& o);
    BigComplex& mul(const BigComplex& o);
    BigComplex& mul_real(const Rational& q);
    BigComplex& div(const BigComplex& o);
    BigComplex& neg();

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a.add(b); }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a.sub(b); }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a.mul(b); }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a.div(b); }

    // principal cube root of z (given as exact double pair), at precision prec
    static BigComplex cbrt_principal(std::complex<double> z, mpfr_prec_t prec);
    static BigComplex sqrt3(mpfr_prec_t prec);  // sqrt(3)

   private:
    mpfr_t re_, im_;
};

}  // namespace pd7kit
