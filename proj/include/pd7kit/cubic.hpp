#pragma once

#include <array>
#include <complex>

namespace pd7kit {

// Roots of the monic cubic t^3 + a2 t^2 + a1 t + a0 with complex
// coefficients: depressed-cubic Cardano with the numerically stable cube-root
// pairing, then one Newton polish per root.
std::array<std::complex<double>, 3> solve_cubic_monic(std::complex<double> a2,
                                                      std::complex<double> a1,
                                                      std::complex<double> a0);

}  // namespace pd7kit
