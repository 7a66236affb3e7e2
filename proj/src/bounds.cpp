#include "unitfrac/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace unitfrac {

namespace {

long double to_ld(const mpz_class& v) {
    // via the decimal string to keep the full 64-bit mantissa
    return strtold(v.get_str().c_str(), nullptr);
}

}  // namespace

BoundReport evaluate_bounds(const mpz_class& m, const mpz_class& n, unsigned k) {
    if (m < 1 || n < 1) throw std::invalid_argument("evaluate_bounds: m, n must be positive");
    if (k < 3 || k > 12) throw std::invalid_argument("evaluate_bounds: k must be in 3..12");
    BoundReport rep;
    rep.m = m;
    rep.n = n;
    rep.k = k;
    const long double lm = to_ld(m), ln = to_ld(n), lk = k;
    if (k == 3) {
        rep.entries.push_back(
            {"f3_fifth_root_shape (n^3/m^2)^(1/5), eps=0", powl(ln * ln * ln / (lm * lm), 1.0L / 5)});
        rep.entries.push_back(
            {"f3_two_thirds_shape (n/m)^(2/3), eps=0", powl(ln / lm, 2.0L / 3)});
    } else if (k == 4) {
        rep.entries.push_back({"f4_shape n^(4/3)/m^(2/3) + n^(28/17)/m^(8/5), eps=0",
                               powl(ln, 4.0L / 3) / powl(lm, 2.0L / 3) +
                                   powl(ln, 28.0L / 17) / powl(lm, 8.0L / 5)});
    } else {
        const long double expo = (28.0L / 17) * powl(2.0L, static_cast<long double>(k) - 5);
        rep.entries.push_back({"fk_shape (k^(4/3) n^2/m)^((28/17) 2^(k-5)), eps=0",
                               powl(powl(lk, 4.0L / 3) * ln * ln / lm, expo)});
        rep.entries.push_back(
            {"fk_direct_shape (n^2/m)^((28/17) 2^(k-5)), eps=0", powl(ln * ln / lm, expo)});
        rep.entries.push_back({"fk11_shape k^((7/51) 2^(k-1)), eps=0",
                               powl(lk, (7.0L / 51) * powl(2.0L, static_cast<long double>(k) - 1))});
    }
    return rep;
}

std::vector<mpq_class> theta_sequence(unsigned k_max, const mpq_class& seed) {
    if (k_max < 5) throw std::invalid_argument("theta_sequence: k_max must be >= 5");
    std::vector<mpq_class> out;
    mpq_class theta = seed;
    theta.canonicalize();
    out.push_back(theta);
    for (unsigned k = 6; k <= k_max; ++k) {
        theta = theta / 2 + mpq_class(2, 3);
        theta.canonicalize();
        out.push_back(theta);
    }
    return out;
}

LowerBoundProfiles lower_bound_profiles(const mpz_class& n, const mpz_class& m,
                                        const mpz_class& f) {
    if (m < 1 || f < 1)
        throw std::invalid_argument("lower_bound_profiles: m, f must be positive");
    if (n <= 2) throw std::invalid_argument("lower_bound_profiles: need n > e for log log n");
    LowerBoundProfiles prof;
    const long double ln = logl(to_ld(n));
    prof.log_ratio = ln / logl(ln);
    prof.composite_coeff = logl(6.0L);
    prof.composite_value = expl(prof.composite_coeff * prof.log_ratio);
    prof.prime_coeff = 5.0L * logl(2.0L) / (12.0L * to_ld(lcm(m, f)));
    prof.prime_value = expl(prof.prime_coeff * prof.log_ratio);
    return prof;
}

}  // namespace unitfrac
