#include "unitfrac/fraction.hpp"

#include <stdexcept>

namespace unitfrac {

Fraction::Fraction(mpz_class m, mpz_class n) : num(std::move(m)), den(std::move(n)) {
    if (num <= 0 || den <= 0)
        throw std::invalid_argument("Fraction: numerator and denominator must be positive");
    reduced = gcd(num, den) == 1;
}

Fraction Fraction::reduce() const {
    if (reduced) return *this;
    mpz_class g = gcd(num, den);
    return Fraction(num / g, den / g);
}

bool exact_unit_sum(const Solution& s, const Fraction& f) {
    if (s.empty()) return false;
    mpq_class total = 0;
    for (const mpz_class& a : s) {
        if (a < 1) return false;
        total += mpq_class(1, a);  // already canonical for a >= 1
    }
    mpq_class target(f.num, f.den);
    target.canonicalize();
    return total == target;
}

}  // namespace unitfrac
