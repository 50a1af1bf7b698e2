#include "pd7kit/ohyama.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "pd7kit/errors.hpp"

namespace pd7kit {

OhyamaTable::OhyamaTable() {
    entries_[0] = LaurentPoly::constant(Rational(1));
    entries_[1] = LaurentPoly::monomial(2);
}

OhyamaTable::OhyamaTable(std::string cache_path) : OhyamaTable() {
    cache_path_ = std::move(cache_path);
    load();
}

// RHS of the bilinear recurrence:
//   -R_n R_n'' + (R_n')^2 - (1/zeta) R_n R_n' + 2 (zeta^2 - n) R_n^2
LaurentPoly OhyamaTable::recurrence_rhs(long n) const {
    const LaurentPoly& r = entries_.at(n);
    const LaurentPoly d1 = r.derivative();
    const LaurentPoly d2 = d1.derivative();
    const LaurentPoly sq = r * r;
    LaurentPoly rhs = -(r * d2) + d1 * d1 - (r * d1).shifted(-1);
    rhs = rhs + sq.shifted(2).scaled(Rational(2)) - sq.scaled(Rational(2 * n));
    return rhs;
}

void OhyamaTable::check_entry(long n, const LaurentPoly& p) const {
    if (p.is_zero()) throw DegreeViolation("R_" + std::to_string(n) + " is zero");
    if (n >= 1 && p.max_exp() != expected_top_exponent(n))
        throw DegreeViolation("R_" + std::to_string(n) + " top exponent " +
                              std::to_string(p.max_exp()) + ", expected " +
                              std::to_string(expected_top_exponent(n)));
    if (n >= 2 && p.min_exp() <= 0)
        throw DegreeViolation("R_" + std::to_string(n) + " not divisible by zeta");
}

const LaurentPoly& OhyamaTable::compute(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
    bool grew = false;
    while (max_up_ < n) {
        // 2 zeta R_{m+1} R_{m-1} = rhs(m)  =>  R_{m+1} = rhs(m) / (2 zeta R_{m-1})
        const long m = max_up_;
        const LaurentPoly den = entries_.at(m - 1).shifted(1).scaled(Rational(2));
        LaurentPoly next = recurrence_rhs(m).exact_divide(den);
        check_entry(m + 1, next);
        entries_.emplace(m + 1, std::move(next));
        ++max_up_;
        grew = true;
    }
    while (min_down_ > n) {
        const long m = min_down_;
        const LaurentPoly den = entries_.at(m + 1).shifted(1).scaled(Rational(2));
        LaurentPoly prev = recurrence_rhs(m).exact_divide(den);
        check_entry(m - 1, prev);
        entries_.emplace(m - 1, std::move(prev));
        --min_down_;
        grew = true;
    }
    if (grew && !cache_path_.empty()) save();
    return entries_.at(n);
}

bool OhyamaTable::verify_recurrence(long n) {
    compute(n + 1);
    compute(n - 1);
    std::lock_guard<std::mutex> lock(mu_);
    const LaurentPoly lhs =
        (entries_.at(n + 1) * entries_.at(n - 1)).shifted(1).scaled(Rational(2));
    return lhs == recurrence_rhs(n);
}

bool OhyamaTable::has(long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.count(n) != 0;
}

void OhyamaTable::save() const {
    if (cache_path_.empty()) return;
    nlohmann::ordered_json doc;
    doc["schema"] = "pd7kit/1";
    nlohmann::ordered_json ents = nlohmann::ordered_json::object();
    for (const auto& [n, p] : entries_)
        ents[std::to_string(n)] = nlohmann::ordered_json::parse(p.to_json());
    doc["entries"] = std::move(ents);
    const std::string tmp = cache_path_ + ".tmp";
    {
        std::ofstream os(tmp);
        os << doc.dump();
    }
    std::rename(tmp.c_str(), cache_path_.c_str());
}

void OhyamaTable::load() {
    std::ifstream is(cache_path_);
    if (!is) return;
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception&) {
        return;  // unreadable cache is ignored, not fatal
    }
    if (!doc.contains("entries")) return;
    for (const auto& [key, val] : doc["entries"].items()) {
        const long n = std::stol(key);
        LaurentPoly p = LaurentPoly::from_json(val.dump());
        try {
            check_entry(n, p);
        } catch (const domain_error&) {
            continue;
        }
        entries_[n] = std::move(p);
    }
    // recompute the contiguous computed ranges
    while (entries_.count(max_up_ + 1)) ++max_up_;
    while (entries_.count(min_down_ - 1)) --min_down_;
}

}  // namespace pd7kit
