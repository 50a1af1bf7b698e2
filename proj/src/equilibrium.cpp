#include "pd7kit/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "pd7kit/cubic.hpp"
#include "pd7kit/errors.hpp"
#include "pd7kit/rational.hpp"

namespace pd7kit {

namespace {

std::array<Cplx, 3> equilibrium_roots(Cplx y) {
    // 8U^3 + 2U - y = 0  =>  U^3 + (1/4)U - y/8 = 0
    return solve_cubic_monic(Cplx(0.0), Cplx(0.25), -y / 8.0);
}

Cplx nearest_root(const std::array<Cplx, 3>& roots, Cplx target, double* gap = nullptr) {
    int best = 0;
    double bd = std::abs(roots[0] - target);
    for (int k = 1; k < 3; ++k) {
        const double d = std::abs(roots[k] - target);
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    if (gap) {
        double second = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k)
            if (k != best) second = std::min(second, std::abs(roots[k] - target));
        *gap = second - bd;
    }
    return roots[best];
}

}  // namespace

EquilibriumBranch solve_equilibrium(Cplx y) {
    if (y == Cplx(0.0, 0.0)) throw AtOrigin("equilibrium branch at y = 0");
    const double r = std::abs(y);
    const Cplx dir = y / r;
    const double r_start = std::max(10.0, r);
    Cplx cur_y = dir * r_start;
    Cplx u = 0.5 * std::pow(cur_y, Cplx(1.0 / 3.0, 0.0));
    u = nearest_root(equilibrium_roots(cur_y), u);
    // radial continuation inward; at each step the tracked root must stay
    // well separated from the other two
    const double step = 1e-2;
    double t = r_start;
    while (t > r) {
        t = std::max(r, t - step);
        cur_y = dir * t;
        const auto roots = equilibrium_roots(cur_y);
        double gap = 0.0;
        const Cplx next = nearest_root(roots, u, &gap);
        if (gap < 1e-6 * std::max(1.0, std::abs(next)))
            throw BranchAmbiguity("root collision during radial continuation at |y| = " +
                                  std::to_string(t));
        u = next;
    }
    EquilibriumBranch out;
    out.y = y;
    out.U = u;
    out.cubic_residual = std::abs(8.0 * u * u * u + 2.0 * u - y);
    return out;
}

WeierstrassInvariants invariants_from_E(Cplx y, Cplx E) {
    if (y == Cplx(0.0, 0.0)) throw AtOrigin("invariants at y = 0");
    WeierstrassInvariants w;
    w.y = y;
    w.E = E;
    const Cplx y2 = y * y;
    w.g2 = 16.0 / y2 + E * E / 3.0;
    w.g3 = -16.0 / y2 - 8.0 * E / (3.0 * y2) - E * E * E / 27.0;
    return w;
}

Cplx first_order_residual(Cplx U, Cplx Uprime, Cplx y, Cplx E) {
    if (y == Cplx(0.0, 0.0)) throw AtOrigin("first-order residual at y = 0");
    return Uprime * Uprime - ((16.0 / y) * U * U * U + 2.0 * E * U * U - (4.0 / y) * U + 1.0);
}

Cplx second_order_residual(Cplx U, Cplx Uprime, Cplx Usecond, Cplx y) {
    if (y == Cplx(0.0, 0.0)) throw AtOrigin("second-order residual at y = 0");
    if (U == Cplx(0.0, 0.0)) throw DivisionByZero("second-order residual at U = 0");
    return Usecond - (Uprime * Uprime / U + (8.0 / y) * U * U + 2.0 / y - 1.0 / U);
}

namespace {

// Elements of Q[y, 1/y, E]: map (y exponent, E exponent) -> coefficient.
using BiRat = std::map<std::pair<int, int>, Rational>;

BiRat bi_term(int ye, int ee, Rational c) {
    BiRat out;
    if (!c.is_zero()) out[{ye, ee}] = std::move(c);
    return out;
}

BiRat bi_add(const BiRat& a, const BiRat& b) {
    BiRat out = a;
    for (const auto& [k, c] : b) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

BiRat bi_mul(const BiRat& a, const BiRat& b) {
    BiRat out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(k, ca * cb);
            else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

// polynomial in P with BiRat coefficients, index = power of P
using PPoly = std::map<int, BiRat>;

PPoly pp_add(const PPoly& a, const PPoly& b) {
    PPoly out = a;
    for (const auto& [k, c] : b) {
        auto merged = bi_add(out.count(k) ? out[k] : BiRat{}, c);
        if (merged.empty())
            out.erase(k);
        else
            out[k] = std::move(merged);
    }
    return out;
}

PPoly pp_mul(const PPoly& a, const PPoly& b) {
    PPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto prod = bi_mul(ca, cb);
            auto merged = bi_add(out.count(ka + kb) ? out[ka + kb] : BiRat{}, prod);
            if (merged.empty())
                out.erase(ka + kb);
            else
                out[ka + kb] = std::move(merged);
        }
    return out;
}

PPoly pp_scalar(BiRat c) {
    PPoly out;
    if (!c.empty()) out[0] = std::move(c);
    return out;
}

}  // namespace

bool weierstrass_reduction_exact() {
    // U = (y/4) P - (1/24) y E,  U' = (y/4) P'
    // U'^2 = (y^2/16) P'^2 = (y^2/16)(4P^3 - g2 P - g3)
    // with g2 = 16/y^2 + E^2/3, g3 = -16/y^2 - 8E/(3y^2) - E^3/27.
    const PPoly U = pp_add({{1, bi_term(1, 0, Rational(1, 4))}},
                           pp_scalar(bi_term(1, 1, Rational(-1, 24))));

    const BiRat g2 = bi_add(bi_term(-2, 0, Rational(16)), bi_term(0, 2, Rational(1, 3)));
    const BiRat g3 = bi_add(bi_add(bi_term(-2, 0, Rational(-16)), bi_term(-2, 1, Rational(-8, 3))),
                            bi_term(0, 3, Rational(-1, 27)));

    // (y^2/16) * (4 P^3 - g2 P - g3)
    PPoly Pprime2;
    Pprime2[3] = bi_term(0, 0, Rational(4));
    Pprime2 = pp_add(Pprime2, PPoly{{1, bi_mul(g2, bi_term(0, 0, Rational(-1)))}});
    Pprime2 = pp_add(Pprime2, pp_scalar(bi_mul(g3, bi_term(0, 0, Rational(-1)))));
    const PPoly Uprime2 = pp_mul(pp_scalar(bi_term(2, 0, Rational(1, 16))), Pprime2);

    const PPoly U2 = pp_mul(U, U);
    const PPoly U3 = pp_mul(U2, U);

    // Uprime^2 - (16/y) U^3 - 2E U^2 + (4/y) U - 1
    PPoly resid = Uprime2;
    resid = pp_add(resid, pp_mul(pp_scalar(bi_term(-1, 0, Rational(-16))), U3));
    resid = pp_add(resid, pp_mul(pp_scalar(bi_term(0, 1, Rational(-2))), U2));
    resid = pp_add(resid, pp_mul(pp_scalar(bi_term(-1, 0, Rational(4))), U));
    resid = pp_add(resid, pp_scalar(bi_term(0, 0, Rational(-1))));

    for (const auto& [pow, coef] : resid)
        if (!coef.empty()) return false;
    return true;
}

}  // namespace pd7kit
