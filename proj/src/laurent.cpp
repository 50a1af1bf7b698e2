#include "pd7kit/laurent.hpp"

#include <gmp.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "pd7kit/errors.hpp"

namespace pd7kit {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<long, Rational>> terms) {
    for (const auto& [e, c] : terms) set_coeff(e, c);
}

LaurentPoly LaurentPoly::monomial(long exp, Rational coef) {
    LaurentPoly p;
    p.set_coeff(exp, std::move(coef));
    return p;
}

long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw domain_error("EmptyPolynomial", "min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw domain_error("EmptyPolynomial", "max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, Rational c) {
    if (c.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs_) {
        auto it = out.coeffs_.find(e);
        if (it == out.coeffs_.end()) {
            out.coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.var_ = a.var_;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    // dense accumulation with raw mpq ops; the convolution dominates the
    // recurrence cost for large n
    const long lo = a.min_exp() + b.min_exp();
    const long hi = a.max_exp() + b.max_exp();
    std::vector<mpq_class> acc(static_cast<std::size_t>(hi - lo + 1), mpq_class(0));
    mpq_t tmp;
    mpq_init(tmp);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            mpq_class& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
            mpq_mul(tmp, ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
    for (long e = lo; e <= hi; ++e) {
        mpq_class& q = acc[static_cast<std::size_t>(e - lo)];
        if (sgn(q) != 0) out.coeffs_.emplace_hint(out.coeffs_.end(), e, Rational(std::move(q)));
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& k) const {
    LaurentPoly out(var_);
    if (k.is_zero()) return out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e, c * k);
    return out;
}

LaurentPoly LaurentPoly::shifted(long dexp) const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + dexp, c);
    return out;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : coeffs_) {
        if (e == 0) continue;
        out.coeffs_.emplace_hint(out.coeffs_.end(), e - 1, c * Rational(e));
    }
    return out;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& den) const {
    if (den.is_zero()) throw DivisionByZero("laurent division by zero polynomial");
    LaurentPoly q;
    q.var_ = var_;
    if (is_zero()) return q;
    LaurentPoly rem = *this;
    const long dtop = den.max_exp();
    const Rational dlead = den.coeffs_.rbegin()->second;
    // long division from the top; Laurent exponents make every monomial
    // divisor exact
    while (!rem.is_zero()) {
        const long ntop = rem.max_exp();
        const long shift = ntop - dtop;
        if (!q.coeffs_.empty() && shift >= q.min_exp())
            throw NonExactDivision("degree not decreasing; remainder " + rem.to_string());
        const Rational t = rem.coeffs_.rbegin()->second / dlead;
        q.coeffs_.emplace(shift, t);
        rem = rem - den.shifted(shift).scaled(t);
        if (!rem.is_zero() && rem.max_exp() >= ntop)
            throw NonExactDivision("nonterminating division");
    }
    return q;
}

std::complex<double> LaurentPoly::eval(std::complex<double> zeta) const {
    using C = std::complex<double>;
    if (zeta == C(0.0, 0.0)) {
        if (!coeffs_.empty() && min_exp() < 0)
            throw PoleAtZero("negative exponents evaluated at zero");
        return coeffs_.count(0) ? C(coeff(0).to_double(), 0.0) : C(0.0, 0.0);
    }
    // Horner on the nonnegative part (descending) and the negative part
    // (ascending in 1/zeta), with gap powers multiplied in between.
    C pos(0.0, 0.0), neg(0.0, 0.0);
    bool pos_any = false, neg_any = false;
    long pos_bottom = 0, neg_top = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (it->first < 0) break;
        if (!pos_any) {
            pos = C(it->second.to_double(), 0.0);
            pos_any = true;
        } else {
            for (long k = pos_bottom; k > it->first; --k) pos *= zeta;
            pos += it->second.to_double();
        }
        pos_bottom = it->first;
    }
    const C w = 1.0 / zeta;
    for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
        if (it->first >= 0) break;
        if (!neg_any) {
            neg = C(it->second.to_double(), 0.0);
            neg_any = true;
        } else {
            for (long k = neg_top; k < it->first; ++k) neg *= w;
            neg += it->second.to_double();
        }
        neg_top = it->first;
    }
    C out(0.0, 0.0);
    if (pos_any) {
        for (long k = 0; k < pos_bottom; ++k) pos *= zeta;
        out += pos;
    }
    if (neg_any) {
        for (long k = 0; k > neg_top; --k) neg *= w;
        out += neg;
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        if (first && c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.sign() < 0 ? -c : c;
        const bool unit = a == Rational(1);
        if (e == 0) {
            os << a.to_string();
        } else {
            if (!unit) os << a.to_string() << "*";
            os << var_;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string LaurentPoly::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : coeffs_) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        t["num"] = c.num_string();
        t["den"] = c.den_string();
        arr.push_back(std::move(t));
    }
    return arr.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    LaurentPoly p;
    for (const auto& t : arr)
        p.set_coeff(t.at("exp").get<long>(),
                    Rational(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
    return p;
}

}  // namespace pd7kit
