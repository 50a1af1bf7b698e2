#include "pd7kit/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace pd7kit {

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return num_string();
    return num_string() + "/" + den_string();
}

double Rational::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long nexp = 0, dexp = 0;
    double nman = mpz_get_d_2exp(&nexp, v_.get_num().get_mpz_t());
    double dman = mpz_get_d_2exp(&dexp, v_.get_den().get_mpz_t());
    return std::log2(std::fabs(nman)) + double(nexp) - std::log2(std::fabs(dman)) - double(dexp);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace pd7kit
