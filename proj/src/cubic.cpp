#include "pd7kit/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace pd7kit {

using C = std::complex<double>;

std::array<C, 3> solve_cubic_monic(C a2, C a1, C a0) {
    // t = s - a2/3 reduces to s^3 + p s + q = 0
    const C shift = a2 / 3.0;
    const C p = a1 - a2 * a2 / 3.0;
    const C q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

    std::array<C, 3> roots;
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        roots = {-shift, -shift, -shift};
        return roots;
    }
    const C disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    // pick the larger branch to avoid cancellation in u^3
    C u3 = -q / 2.0 + disc;
    if (std::abs(-q / 2.0 - disc) > std::abs(u3)) u3 = -q / 2.0 - disc;
    const C u = std::pow(u3, C(1.0 / 3.0, 0.0));
    const C omega(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        const C uk = u * (k == 0 ? C(1.0) : (k == 1 ? omega : omega * omega));
        const C vk = std::abs(uk) == 0.0 ? C(0.0) : -p / (3.0 * uk);
        roots[k] = uk + vk - shift;
    }
    // Newton polish on the original cubic
    for (auto& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const C f = ((r + a2) * r + a1) * r + a0;
            const C df = (3.0 * r + 2.0 * a2) * r + a1;
            if (std::abs(df) == 0.0) break;
            r -= f / df;
        }
    }
    return roots;
}

}  // namespace pd7kit
