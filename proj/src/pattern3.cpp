#include "unitfrac/pattern3.hpp"

#include <stdexcept>

namespace unitfrac {

std::vector<std::array<u64, 3>> enumerate_patterns(const std::vector<Factor64>& n_fact) {
    std::vector<u64> divs = divisors_u64(n_fact);
    std::vector<std::array<u64, 3>> out;
    out.reserve(divs.size() * divs.size() * divs.size());
    for (u64 a : divs)
        for (u64 b : divs)
            for (u64 c : divs) out.push_back({a, b, c});
    return out;
}

Pattern3 derive_constants(u64 m, u64 n, const std::array<u64, 3>& triple) {
    if (m < 1 || n < 1) throw std::invalid_argument("derive_constants: m, n must be positive");
    for (u64 ni : triple)
        if (ni == 0 || n % ni != 0)
            throw std::invalid_argument("derive_constants: each n_i must divide n");

    Pattern3 p;
    p.n1 = triple[0];
    p.n2 = triple[1];
    p.n3 = triple[2];
    const u64 q1 = n / p.n1, q2 = n / p.n2, q3 = n / p.n3;
    p.d12 = gcd_u64(q1, q2);
    p.d13 = gcd_u64(q1, q3);
    p.d23 = gcd_u64(q2, q3);

    mpz_class den = mpz_class(p.n1) * p.n1 * p.d23;
    mpz_class g = gcd(mpz_class(36), den);
    p.c_num = 36 / g;
    p.c_den = den / g;

    // B = floor((36 n^3 / (n1^2 d23 m^2))^(1/5)); floor the rational first,
    // then take the exact integer fifth root.
    u128 num, t;
    if (!mul_check_u128(static_cast<u128>(n) * n, n, t) || !mul_check_u128(t, 36, num))
        throw std::domain_error("derive_constants: n exceeds the native 128-bit range");
    u128 div = static_cast<u128>(p.n1) * p.n1;
    bool over = !mul_check_u128(div, p.d23, div);
    over = over || !mul_check_u128(div, m, div) || !mul_check_u128(div, m, div);
    p.bound = over ? 0 : ififth_root_u128(num / div);
    return p;
}

}  // namespace unitfrac
