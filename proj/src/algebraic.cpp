#include "pd7kit/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "pd7kit/bigcomplex.hpp"
#include "pd7kit/errors.hpp"

namespace pd7kit {

namespace {

// Exponent/coefficient arrays prepared for repeated extended-precision
// evaluation. log2 coefficient magnitudes drive the precision planner.
struct CPoly {
    std::vector<long> exps;  // descending
    std::vector<Rational> coefs;
    std::vector<double> log2c;

    static CPoly from(const LaurentPoly& p) {
        CPoly out;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            out.exps.push_back(it->first);
            out.coefs.push_back(it->second);
            out.log2c.push_back(it->second.log2_abs());
        }
        return out;
    }

    bool empty() const { return exps.empty(); }

    double max_term_log2(double log2_zeta) const {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < exps.size(); ++i)
            m = std::max(m, log2c[i] + double(exps[i]) * log2_zeta);
        return m;
    }

    // Horner over descending exponents; gap powers multiplied in between.
    BigComplex eval(const BigComplex& zeta, const BigComplex& inv_zeta, mpfr_prec_t prec) const {
        BigComplex acc(prec);
        if (empty()) return acc;
        acc = BigComplex::from(coefs[0], prec);
        long cur = exps[0];
        for (std::size_t i = 1; i < exps.size(); ++i) {
            for (long k = cur; k > exps[i]; --k) acc.mul(zeta);
            acc.add(BigComplex::from(coefs[i], prec));
            cur = exps[i];
        }
        if (cur > 0)
            for (long k = 0; k < cur; ++k) acc.mul(zeta);
        else
            for (long k = 0; k > cur; --k) acc.mul(inv_zeta);
        return acc;
    }

    std::complex<double> eval_double(Cplx zeta) const {
        if (empty()) return {0.0, 0.0};
        Cplx acc(coefs[0].to_double(), 0.0);
        long cur = exps[0];
        for (std::size_t i = 1; i < exps.size(); ++i) {
            for (long k = cur; k > exps[i]; --k) acc *= zeta;
            acc += coefs[i].to_double();
            cur = exps[i];
        }
        const Cplx w = 1.0 / zeta;
        if (cur > 0)
            for (long k = 0; k < cur; ++k) acc *= zeta;
        else
            for (long k = 0; k > cur; --k) acc *= w;
        return acc;
    }
};

}  // namespace

struct AlgebraicSolution::Compiled {
    CPoly a, b, r;        // R_{n+1}, R_{n-1}, R_n
    CPoly da, db, dr;     // first derivatives
    CPoly dda, ddb, ddr;  // second derivatives
};

AlgebraicSolution::AlgebraicSolution(OhyamaTable& table, long n) : n_(n) {
    r_minus_ = table.compute(n - 1);
    r_ = table.compute(n);
    r_plus_ = table.compute(n + 1);
    dr_minus_ = r_minus_.derivative();
    dr_ = r_.derivative();
    dr_plus_ = r_plus_.derivative();
    d2r_minus_ = dr_minus_.derivative();
    d2r_ = dr_.derivative();
    d2r_plus_ = dr_plus_.derivative();
    auto c = std::make_shared<Compiled>();
    c->a = CPoly::from(r_plus_);
    c->b = CPoly::from(r_minus_);
    c->r = CPoly::from(r_);
    c->da = CPoly::from(dr_plus_);
    c->db = CPoly::from(dr_minus_);
    c->dr = CPoly::from(dr_);
    c->dda = CPoly::from(d2r_plus_);
    c->ddb = CPoly::from(d2r_minus_);
    c->ddr = CPoly::from(d2r_);
    compiled_ = std::move(c);
}

namespace {

struct NineValues {
    BigComplex a, b, r, da, db, dr, dda, ddb, ddr;
    mpfr_prec_t prec;
    explicit NineValues(mpfr_prec_t p)
        : a(p), b(p), r(p), da(p), db(p), dr(p), dda(p), ddb(p), ddr(p), prec(p) {}
};

// Evaluate all nine polynomials at zeta with enough working precision that
// the cancellation (which grows roughly like n^2 digits inside the pole
// region) is absorbed. Values that remain at noise level after escalation
// are genuine (near-)zeros and are left for the pole/zero classifier.
NineValues eval_nine(const AlgebraicSolution::Compiled& cp, Cplx zeta_hint,
                     const std::function<BigComplex(mpfr_prec_t)>& make_zeta) {
    const double lz = std::log2(std::abs(zeta_hint));
    const CPoly* polys[9] = {&cp.a, &cp.b, &cp.r, &cp.da, &cp.db, &cp.dr, &cp.dda, &cp.ddb, &cp.ddr};
    double max_term = -std::numeric_limits<double>::infinity();
    for (const CPoly* p : polys)
        if (!p->empty()) max_term = std::max(max_term, p->max_term_log2(lz));

    mpfr_prec_t prec = 256;
    for (int round = 0; round < 6; ++round) {
        BigComplex zeta = make_zeta(prec);
        BigComplex one = BigComplex::from(Cplx(1.0, 0.0), prec);
        BigComplex inv_zeta = one / zeta;
        NineValues v(prec);
        BigComplex* slots[9] = {&v.a, &v.b, &v.r, &v.da, &v.db, &v.dr, &v.dda, &v.ddb, &v.ddr};
        double worst_defect = 0.0;
        for (int i = 0; i < 9; ++i) {
            *slots[i] = polys[i]->eval(zeta, inv_zeta, prec);
            if (polys[i]->empty()) continue;
            const double mt = polys[i]->max_term_log2(lz);
            const double lv = slots[i]->log2_abs();
            const double defect = std::isfinite(lv) ? mt - lv : std::numeric_limits<double>::infinity();
            worst_defect = std::max(worst_defect, defect);
        }
        if (double(prec) >= worst_defect + 110.0 || prec >= (mpfr_prec_t(1) << 17)) return v;
        double want = std::isfinite(worst_defect) ? worst_defect + 200.0 : double(2 * prec);
        prec = mpfr_prec_t(std::max({double(2 * prec), want, 256.0}));
        prec = std::min(prec, mpfr_prec_t(1) << 17);
    }
    throw QuadratureFailure("precision escalation did not converge");
}

double log2_hypot(const BigComplex& z) { return z.log2_abs(); }

}  // namespace

struct AlgebraicEvalAccess {
    // shared implementation for eval/derivative/residual paths
    static AlgebraicSolution::Bundle bundle_at_zeta(const AlgebraicSolution& s, Cplx zeta_hint,
                                                    const std::function<BigComplex(mpfr_prec_t)>& mk,
                                                    const EvalOptions& opt, Cplx* x_out,
                                                    BigComplex* resid_out, double* resid_scale) {
        const auto& cp = *s.compiled_;
        NineValues v = eval_nine(cp, zeta_hint, mk);
        const mpfr_prec_t p = v.prec;

        // pole / zero classification on log scales
        const double La = log2_hypot(v.a), Lb = log2_hypot(v.b), Lr = log2_hypot(v.r);
        const double log2_tol = std::log2(opt.pole_tol);
        if (2.0 * Lr < log2_tol + La + Lb || !std::isfinite(Lr))
            throw PoleHit("R_n vanishes at zeta (pole of u_n)");

        BigComplex zeta = mk(p);
        BigComplex one = BigComplex::from(Cplx(1, 0), p);
        BigComplex K = one / (BigComplex::from(Cplx(2, 0), p) * BigComplex::sqrt3(p));
        BigComplex g = v.a * v.b;
        BigComplex dg = v.da * v.b + v.a * v.db;
        BigComplex ddg = v.dda * v.b + BigComplex::from(Cplx(2, 0), p) * v.da * v.db + v.a * v.ddb;
        BigComplex r2 = v.r * v.r;
        BigComplex r3 = r2 * v.r;
        BigComplex r4 = r2 * r2;

        BigComplex u = K * g / r2;
        // d/dzeta of u and chain rule d/dx = sqrt(3) zeta^{-2} d/dzeta
        BigComplex u_z = K * (dg * v.r - BigComplex::from(Cplx(2, 0), p) * g * v.dr) / r3;
        BigComplex u_zz = K *
                          (ddg * r2 - BigComplex::from(Cplx(4, 0), p) * dg * v.dr * v.r -
                           BigComplex::from(Cplx(2, 0), p) * g * v.r * v.ddr +
                           BigComplex::from(Cplx(6, 0), p) * g * v.dr * v.dr) /
                          r4;
        BigComplex z2 = zeta * zeta;
        BigComplex z4 = z2 * z2;
        BigComplex s3 = BigComplex::sqrt3(p);
        BigComplex du = s3 * u_z / z2;
        BigComplex ddu = BigComplex::from(Cplx(3, 0), p) * u_zz / z4 -
                         BigComplex::from(Cplx(6, 0), p) * u_z / (z4 * zeta);

        // x recovered from zeta keeps all residual pieces mutually consistent
        BigComplex x_big = z2 * zeta / (BigComplex::from(Cplx(3, 0), p) * s3);
        if (x_out) *x_out = x_big.to_double();

        if (resid_out) {
            const double Lgab = log2_hypot(g);
            if (Lgab < log2_tol + 2.0 * Lr || !std::isfinite(Lgab))
                throw ZeroHit("u_n vanishes at zeta (1/u term)");
            BigComplex up2 = du * du;
            BigComplex n_big = BigComplex::from(Cplx(double(s.n_), 0), p);
            BigComplex t1 = up2 / u;
            BigComplex t2 = du / x_big;
            BigComplex t3 = (BigComplex::from(Cplx(8, 0), p) * u * u +
                             BigComplex::from(Cplx(2, 0), p) * n_big) /
                            x_big;
            BigComplex t4 = one / u;
            BigComplex rhs = t1 - t2 + t3 - t4;
            *resid_out = ddu - rhs;
            if (resid_scale) {
                double sc = std::abs(ddu.to_double());
                sc = std::max(sc, std::abs(t1.to_double()));
                sc = std::max(sc, std::abs(t2.to_double()));
                sc = std::max(sc, std::abs(t3.to_double()));
                sc = std::max(sc, std::abs(t4.to_double()));
                *resid_scale = sc;
            }
        }
        return {u.to_double(), du.to_double(), ddu.to_double()};
    }

    static std::function<BigComplex(mpfr_prec_t)> zeta_from_x(Cplx x) {
        return [x](mpfr_prec_t p) {
            return BigComplex::sqrt3(p) * BigComplex::cbrt_principal(x, p);
        };
    }
    static Cplx zeta_hint_from_x(Cplx x) {
        return std::sqrt(3.0) * std::pow(x, Cplx(1.0 / 3.0, 0.0));
    }
};

Cplx AlgebraicSolution::eval_u(Cplx x, const EvalOptions& opt) const {
    if (x == Cplx(0.0, 0.0)) throw AtOrigin("u_n at x = 0");
    auto b = AlgebraicEvalAccess::bundle_at_zeta(*this, AlgebraicEvalAccess::zeta_hint_from_x(x),
                                                 AlgebraicEvalAccess::zeta_from_x(x), opt, nullptr,
                                                 nullptr, nullptr);
    return b.u;
}

AlgebraicSolution::Bundle AlgebraicSolution::eval_bundle(Cplx x, const EvalOptions& opt) const {
    if (x == Cplx(0.0, 0.0)) throw AtOrigin("u_n at x = 0");
    return AlgebraicEvalAccess::bundle_at_zeta(*this, AlgebraicEvalAccess::zeta_hint_from_x(x),
                                               AlgebraicEvalAccess::zeta_from_x(x), opt, nullptr,
                                               nullptr, nullptr);
}

Cplx AlgebraicSolution::eval_u_at_zeta(Cplx zeta, const EvalOptions& opt) const {
    auto mk = [zeta](mpfr_prec_t p) { return BigComplex::from(zeta, p); };
    auto b = AlgebraicEvalAccess::bundle_at_zeta(*this, zeta, mk, opt, nullptr, nullptr, nullptr);
    return b.u;
}

Cplx AlgebraicSolution::ode_residual_p3d7(Cplx x, const EvalOptions& opt) const {
    if (x == Cplx(0.0, 0.0)) throw AtOrigin("residual at x = 0");
    BigComplex resid(64);
    double scale = 0;
    AlgebraicEvalAccess::bundle_at_zeta(*this, AlgebraicEvalAccess::zeta_hint_from_x(x),
                                        AlgebraicEvalAccess::zeta_from_x(x), opt, nullptr, &resid,
                                        &scale);
    return resid.to_double();
}

double AlgebraicSolution::ode_residual_relative(Cplx x, const EvalOptions& opt) const {
    if (x == Cplx(0.0, 0.0)) throw AtOrigin("residual at x = 0");
    BigComplex resid(64);
    double scale = 0;
    AlgebraicEvalAccess::bundle_at_zeta(*this, AlgebraicEvalAccess::zeta_hint_from_x(x),
                                        AlgebraicEvalAccess::zeta_from_x(x), opt, nullptr, &resid,
                                        &scale);
    return std::abs(resid.to_double()) / std::max(scale, 1e-300);
}

Cplx eval_U(const AlgebraicSolution& sol, Cplx y, const EvalOptions& opt) {
    const long n = sol.n();
    if (n == 0) return sol.eval_u(y, opt);
    const double root_n = std::sqrt(double(n));
    return sol.eval_u(std::pow(double(n), 1.5) * y, opt) / root_n;
}

Cplx eval_U_shifted(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt) {
    const long n = sol.n();
    if (n == 0) return sol.eval_u(y, opt);
    return eval_U(sol, y + z / double(n), opt);
}

Cplx eval_dU_dz(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt) {
    const long n = sol.n();
    const Cplx x = n == 0 ? y : std::pow(double(n), 1.5) * (y + z / double(n));
    return sol.eval_bundle(x, opt).du_dx;
}

Cplx eval_d2U_dz2(const AlgebraicSolution& sol, Cplx y, Cplx z, const EvalOptions& opt) {
    const long n = sol.n();
    const Cplx x = n == 0 ? y : std::pow(double(n), 1.5) * (y + z / double(n));
    const Cplx scale = n == 0 ? 1.0 : std::sqrt(double(n));
    return scale * sol.eval_bundle(x, opt).d2u_dx2;
}

bool check_symmetry(OhyamaTable& table, long n, Cplx x, double rel_tol) {
    const AlgebraicSolution pos(table, n);
    const AlgebraicSolution neg(table, -n);
    const Cplx zeta = std::sqrt(3.0) * std::pow(x, Cplx(1.0 / 3.0, 0.0));
    const Cplx i(0.0, 1.0);
    for (int sign : {+1, -1}) {
        const Cplx s = sign > 0 ? i : -i;
        const Cplx lhs = s * pos.eval_u(s * x);
        const Cplx rot = std::exp(Cplx(0.0, sign * 2.0 * M_PI / 3.0));
        const Cplx rhs = neg.eval_u_at_zeta(rot * zeta);
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        if (std::abs(lhs - rhs) > rel_tol * scale) return false;
    }
    return true;
}

Cplx GridField::point(int ix, int iy) const {
    const double x = nx == 1 ? re_lo : re_lo + (re_hi - re_lo) * ix / double(nx - 1);
    const double y = ny == 1 ? im_lo : im_lo + (im_hi - im_lo) * iy / double(ny - 1);
    return {x, y};
}

GridField density_grid(OhyamaTable& table, long n, double re_lo, double re_hi, double im_lo,
                       double im_hi, int nx, int ny, int threads) {
    if (nx < 2 || ny < 2) throw domain_error("BadResolution", "resolution must be at least 2x2");
    const AlgebraicSolution sol(table, n);
    GridField g;
    g.re_lo = re_lo;
    g.re_hi = re_hi;
    g.im_lo = im_lo;
    g.im_hi = im_hi;
    g.nx = nx;
    g.ny = ny;
    g.values.assign(std::size_t(nx) * ny, 0.0);

    // Surface evaluation: zeta = sqrt(3) n^{1/2} Y, continuous in Y. The
    // modulus tolerates the double fast path: cancellation only collapses in
    // shrinking neighborhoods of the zero sets where the value is huge anyway.
    const double root_n = n == 0 ? 1.0 : std::sqrt(double(n));
    const double inv_root_n = n == 0 ? 1.0 : 1.0 / std::sqrt(double(n));
    struct DTriple {
        CPoly a, b, r;
    };
    DTriple dp{CPoly::from(sol.r_plus()), CPoly::from(sol.r_minus()), CPoly::from(sol.r())};

    const double zmax = std::sqrt(3.0) * root_n *
                        std::max({std::hypot(re_lo, im_lo), std::hypot(re_lo, im_hi),
                                  std::hypot(re_hi, im_lo), std::hypot(re_hi, im_hi)});
    const double lz = std::log2(std::max(zmax, 1.0));
    const bool double_ok = dp.a.max_term_log2(lz) < 950 && dp.b.max_term_log2(lz) < 950 &&
                           dp.r.max_term_log2(lz) < 470;  // |r|^2 must not overflow

    auto run_rows = [&](int y0, int y1) {
        for (int iy = y0; iy < y1; ++iy) {
            for (int ix = 0; ix < nx; ++ix) {
                const Cplx Y = g.point(ix, iy);
                const Cplx zeta = std::sqrt(3.0) * root_n * Y;
                double val;
                if (zeta == Cplx(0.0, 0.0)) {
                    // zeta=0: u = 0 for n>=2 (R_n divisible by zeta^k growing),
                    // finite small for |n|<=1; report numerator/denominator limit 0
                    val = n == 0 ? 0.0 : 0.0;
                } else if (double_ok) {
                    const Cplx a = dp.a.eval_double(zeta);
                    const Cplx b = dp.b.eval_double(zeta);
                    const Cplx r = dp.r.eval_double(zeta);
                    const double den = std::norm(r);
                    val = den == 0.0 ? std::numeric_limits<double>::infinity()
                                     : inv_root_n * std::abs(a * b) / (2.0 * std::sqrt(3.0) * den);
                } else {
                    try {
                        val = std::abs(sol.eval_u_at_zeta(zeta)) * inv_root_n;
                    } catch (const PoleHit&) {
                        val = std::numeric_limits<double>::infinity();
                    }
                }
                g.values[std::size_t(iy) * nx + ix] = val;
            }
        }
    };

    const int nthreads = std::max(1, std::min(threads, ny));
    if (nthreads == 1) {
        run_rows(0, ny);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (ny + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(run_rows, t * chunk, std::min(ny, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    return g;
}

std::string grid_to_csv(const GridField& g) {
    std::ostringstream os;
    os << "Y_re,Y_im,modulus\n";
    os.precision(17);
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const Cplx Y = g.point(ix, iy);
            const double v = g.at(ix, iy);
            os << Y.real() << "," << Y.imag() << ",";
            if (std::isinf(v))
                os << "inf";
            else
                os << v;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace pd7kit
