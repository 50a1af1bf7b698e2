#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "pd7kit/laurent.hpp"
#include "pd7kit/ohyama.hpp"

namespace pd7kit {

using Cplx = std::complex<double>;

struct EvalOptions {
    // PoleHit when |R_n(zeta)|^2 < pole_tol * |R_{n+1} R_{n-1}|, and ZeroHit
    // for the mirrored criterion on the numerator product.
    double pole_tol = 1e-24;
};

// Index n with the three cached neighbors R_{n-1}, R_n, R_{n+1} and their
// exact zeta-derivatives. Second derivatives are kept as well since the
// Painleve residual needs u''.
class AlgebraicSolution {
   public:
    struct Compiled;  // evaluation-ready form, defined in the implementation

    AlgebraicSolution(OhyamaTable& table, long n);

    long n() const { return n_; }
    const LaurentPoly& r_minus() const { return r_minus_; }
    const LaurentPoly& r() const { return r_; }
    const LaurentPoly& r_plus() const { return r_plus_; }
    const LaurentPoly& dr_minus() const { return dr_minus_; }
    const LaurentPoly& dr() const { return dr_; }
    const LaurentPoly& dr_plus() const { return dr_plus_; }

    struct Bundle {
        Cplx u, du_dx, d2u_dx2;
    };

    // algebraic solution u_n(x) on the principal sheet -pi < arg(x) < pi
    Cplx eval_u(Cplx x, const EvalOptions& opt = {}) const;
    // exact derivatives evaluated through the stored Laurent derivatives
    Bundle eval_bundle(Cplx x, const EvalOptions& opt = {}) const;
    // evaluation at an explicitly chosen zeta (Riemann-surface access)
    Cplx eval_u_at_zeta(Cplx zeta, const EvalOptions& opt = {}) const;

    // u'' - [(u')^2/u - u'/x + (8u^2+2n)/x - 1/u], composed in extended
    // precision before rounding
    Cplx ode_residual_p3d7(Cplx x, const EvalOptions& opt = {}) const;
    double ode_residual_relative(Cplx x, const EvalOptions& opt = {}) const;

   private:
    long n_;
    LaurentPoly r_minus_, r_, r_plus_;
    LaurentPoly dr_minus_, dr_, dr_plus_;
    LaurentPoly d2r_minus_, d2r_, d2r_plus_;
    std::shared_ptr<const Compiled> compiled_;

    friend struct AlgebraicEvalAccess;
};

// Rescaled solution U_n(y) = n^{-1/2} u_n(n^{3/2} y). For n = 0 the scaling
// degenerates and U_0 is taken to be u_0 itself.
Cplx eval_U(const AlgebraicSolution& sol, Cplx y, const EvalOptions& opt = {});
// W(z) = U_n(y + z/n)
Cplx eval_U_shifted(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt = {});
// dW/dz = u_n'(x) at x = n^{3/2}(y + z/n)
Cplx eval_dU_dz(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt = {});
// d2W/dz2 = n^{1/2} u_n''(x)
Cplx eval_d2U_dz2(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt = {});

// +-i u_n(+-ix) = u_{-n}(e^{+-2pi i}x), the full rotation realized on the
// surface as zeta -> e^{+-2pi i/3} zeta. True iff both signs hold to rel_tol.
bool check_symmetry(OhyamaTable& table, long n, Cplx x, double rel_tol = 1e-10);

struct GridField {
    double re_lo, re_hi, im_lo, im_hi;
    int nx = 0, ny = 0;
    std::vector<double> values;  // row-major, ny rows by nx cols; INF at poles
    double at(int ix, int iy) const { return values[std::size_t(iy) * nx + ix]; }
    Cplx point(int ix, int iy) const;
};

// |U_n(Y^3)| over a Y-plane rectangle; the cube root is realized on the
// surface via zeta = sqrt(3) n^{1/2} Y so the field is continuous across
// arg(Y) = pi/3 lines. Poles are recorded as +infinity.
GridField density_grid(OhyamaTable& table, long n, double re_lo, double re_hi, double im_lo,
                       double im_hi, int nx, int ny, int threads = 1);

std::string grid_to_csv(const GridField& g);

}  // namespace pd7kit
