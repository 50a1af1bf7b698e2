#pragma once

#include <complex>

namespace pd7kit {

using Cplx = std::complex<double>;

// z-independent solution branch of 8U^3 + 2U - y = 0 continued from
// U ~ (1/2) y^{1/3} at large |y|.
struct EquilibriumBranch {
    Cplx y;
    Cplx U;
    double cubic_residual;  // |8U^3 + 2U - y|
};

// Root selection at |y| >= 10 by proximity to (1/2) y^{1/3}, then radial
// continuation inward with step <= 1e-2. Throws BranchAmbiguity on a root
// collision along the path.
EquilibriumBranch solve_equilibrium(Cplx y);

struct WeierstrassInvariants {
    Cplx g2, g3, E, y;
};

// g2 = 16/y^2 + E^2/3,  g3 = -16/y^2 - 8E/(3y^2) - E^3/27
WeierstrassInvariants invariants_from_E(Cplx y, Cplx E);

// Uprime^2 - [(16/y) U^3 + 2 E U^2 - (4/y) U + 1]
Cplx first_order_residual(Cplx U, Cplx Uprime, Cplx y, Cplx E);

// Usecond - [Uprime^2/U + (8/y) U^2 + 2/y - 1/U]
Cplx second_order_residual(Cplx U, Cplx Uprime, Cplx Usecond, Cplx y);

// Exact-arithmetic check that substituting U = (y/4) P - yE/24 with
// P'^2 = 4P^3 - g2 P - g3 annihilates the first-order form identically as a
// polynomial in P with coefficients in Q[y, 1/y, E]. Returns true when every
// coefficient vanishes.
bool weierstrass_reduction_exact();

}  // namespace pd7kit
