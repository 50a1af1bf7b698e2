#include "pd7kit/bigcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pd7kit {

double BigComplex::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    auto part = [](mpfr_srcptr x) {
        if (mpfr_zero_p(x)) return -std::numeric_limits<double>::infinity();
        long e = 0;
        double m = mpfr_get_d_2exp(&e, x, MPFR_RNDN);
        return std::log2(std::fabs(m)) + double(e);
    };
    return std::max(part(re_), part(im_));
}

BigComplex& BigComplex::add(const BigComplex& o) {
    mpfr_add(re_, re_, o.re_, MPFR_RNDN);
    mpfr_add(im_, im_, o.im_, MPFR_RNDN);
    return *this;
}

BigComplex& BigComplex::sub(const BigComplex& o) {
    mpfr_sub(re_, re_, o.re_, MPFR_RNDN);
    mpfr_sub(im_, im_, o.im_, MPFR_RNDN);
    return *this;
}

BigComplex& BigComplex::mul(const BigComplex& o) {
    mpfr_t ac, bd, ad, bc;
    const mpfr_prec_t p = prec();
    mpfr_inits2(p, ac, bd, ad, bc, (mpfr_ptr) nullptr);
    mpfr_mul(ac, re_, o.re_, MPFR_RNDN);
    mpfr_mul(bd, im_, o.im_, MPFR_RNDN);
    mpfr_mul(ad, re_, o.im_, MPFR_RNDN);
    mpfr_mul(bc, im_, o.re_, MPFR_RNDN);
    mpfr_sub(re_, ac, bd, MPFR_RNDN);
    mpfr_add(im_, ad, bc, MPFR_RNDN);
    mpfr_clears(ac, bd, ad, bc, (mpfr_ptr) nullptr);
    return *this;
}

BigComplex& BigComplex::mul_real(const Rational& q) {
    mpfr_t t;
    mpfr_init2(t, prec());
    mpfr_set_q(t, q.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(re_, re_, t, MPFR_RNDN);
    mpfr_mul(im_, im_, t, MPFR_RNDN);
    mpfr_clear(t);
    return *this;
}

BigComplex& BigComplex::div(const BigComplex& o) {
    const mpfr_prec_t p = prec();
    mpfr_t den, t1, t2, nre, nim;
    mpfr_inits2(p, den, t1, t2, nre, nim, (mpfr_ptr) nullptr);
    mpfr_mul(t1, o.re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, o.im_, o.im_, MPFR_RNDN);
    mpfr_add(den, t1, t2, MPFR_RNDN);
    // (a+bi)/(c+di) = ((ac+bd) + (bc-ad)i) / (c^2+d^2)
    mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
    mpfr_add(nre, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, im_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, re_, o.im_, MPFR_RNDN);
    mpfr_sub(nim, t1, t2, MPFR_RNDN);
    mpfr_div(re_, nre, den, MPFR_RNDN);
    mpfr_div(im_, nim, den, MPFR_RNDN);
    mpfr_clears(den, t1, t2, nre, nim, (mpfr_ptr) nullptr);
    return *this;
}

BigComplex& BigComplex::neg() {
    mpfr_neg(re_, re_, MPFR_RNDN);
    mpfr_neg(im_, im_, MPFR_RNDN);
    return *this;
}

BigComplex BigComplex::cbrt_principal(std::complex<double> z, mpfr_prec_t prec) {
    BigComplex out(prec);
    mpfr_t x, y, r, th, mag;
    mpfr_inits2(prec, x, y, r, th, mag, (mpfr_ptr) nullptr);
    mpfr_set_d(x, z.real(), MPFR_RNDN);
    mpfr_set_d(y, z.imag(), MPFR_RNDN);
    mpfr_hypot(r, x, y, MPFR_RNDN);
    mpfr_atan2(th, y, x, MPFR_RNDN);  // principal argument in (-pi, pi]
    mpfr_cbrt(mag, r, MPFR_RNDN);
    mpfr_div_ui(th, th, 3, MPFR_RNDN);
    mpfr_cos(x, th, MPFR_RNDN);
    mpfr_sin(y, th, MPFR_RNDN);
    mpfr_mul(out.re_, mag, x, MPFR_RNDN);
    mpfr_mul(out.im_, mag, y, MPFR_RNDN);
    mpfr_clears(x, y, r, th, mag, (mpfr_ptr) nullptr);
    return out;
}

BigComplex BigComplex::sqrt3(mpfr_prec_t prec) {
    BigComplex out(prec);
    mpfr_sqrt_ui(out.re(), 3, MPFR_RNDN);
    return out;
}

}  // namespace pd7kit
