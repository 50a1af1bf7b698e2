#pragma once

#include <map>
#include <mutex>
#include <string>

#include "pd7kit/laurent.hpp"

namespace pd7kit {

// Table of the recurrence-generated Laurent polynomials R_n, n in Z, with an
// optional JSON disk cache (R_n around n = 40+ is expensive to recompute).
class OhyamaTable {
   public:
    OhyamaTable();
    explicit OhyamaTable(std::string cache_path);

    // Computes (and caches) R_n for any integer n. Upward for n >= 2 by
    // solving the recurrence for R_{n+1}, downward for n <= -1 by solving for
    // R_{n-1}. NonExactDivision propagates; it would indicate a bug since the
    // R_n exist for all n.
    const LaurentPoly& compute(long n);

    // Exact check that 2 zeta R_{n+1} R_{n-1} equals the right-hand side built
    // from R_n.
    bool verify_recurrence(long n);

    bool has(long n) const;
    long max_computed_up() const { return max_up_; }
    long min_computed_down() const { return min_down_; }

    void save() const;
    const std::string& cache_path() const { return cache_path_; }

    // Observed top-degree law n(n+3)/2 for n >= 1; an extrapolation from the
    // listed examples, enforced as a self-check on every computed entry.
    static long expected_top_exponent(long n) { return n * (n + 3) / 2; }

   private:
    LaurentPoly recurrence_rhs(long n) const;
    void check_entry(long n, const LaurentPoly& p) const;
    void load();

    std::map<long, LaurentPoly> entries_;
    long max_up_ = 1;
    long min_down_ = 0;
    std::string cache_path_;
    mutable std::mutex mu_;
};

}  // namespace pd7kit
