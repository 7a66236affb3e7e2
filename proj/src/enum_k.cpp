#include "unitfrac/enum_k.hpp"

#include <stdexcept>

#include "unitfrac/enum3.hpp"

namespace unitfrac {

AlphaBounds alpha_bounds(unsigned k) {
    if (k < 1) throw std::invalid_argument("alpha_bounds: k must be >= 1");
    AlphaBounds out;
    out.k = k;
    mpz_class prod = 1;  // empty product for i = 1
    for (unsigned i = 1; i <= k; ++i) {
        mpz_class alpha = (k - i + 1) * prod;
        prod *= alpha;
        out.alphas.push_back(std::move(alpha));
    }
    return out;
}

namespace {

void check_arity(unsigned k, unsigned k_cap) {
    if (k < 2) throw std::invalid_argument("enumerate_k: arity must be at least 2");
    if (k > k_cap)
        throw std::invalid_argument(
            "enumerate_k: arity exceeds the configured cap (search space is doubly "
            "exponential in k)");
}

// Fix denominators down to a three-fraction residual; the residual stays
// an exact rational throughout.
void recurse(const mpq_class& residual, unsigned remaining, const mpz_class& min_a,
             std::vector<mpz_class>& prefix, std::set<Solution>& out) {
    const mpz_class& num = residual.get_num();
    const mpz_class& den = residual.get_den();
    if (remaining == 3) {
        for (const Solution& tail : enumerate3(Fraction(num, den), min_a)) {
            Solution s = prefix;
            s.insert(s.end(), tail.begin(), tail.end());
            out.insert(std::move(s));
        }
        return;
    }
    mpz_class lo = den / num + 1;
    if (lo < min_a) lo = min_a;
    const mpz_class hi = remaining * den / num;
    for (mpz_class a = lo; a <= hi; ++a) {
        mpq_class next = residual - mpq_class(1, a);
        prefix.push_back(a);
        recurse(next, remaining - 1, a, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::set<Solution> enumerate_k(const Fraction& f, unsigned k, unsigned k_cap) {
    check_arity(k, k_cap);
    Fraction r = f.reduce();
    if (r.num > k * r.den) return {};
    if (k == 2) return solve_two(r);
    if (k == 3) return enumerate3(r);
    std::set<Solution> out;
    std::vector<mpz_class> prefix;
    mpq_class residual(r.num, r.den);
    recurse(residual, k, 1, prefix, out);
    return out;
}

namespace {

std::optional<Solution> first_rec(const mpq_class& residual, unsigned remaining,
                                  const mpz_class& min_a, std::vector<mpz_class>& prefix) {
    const mpz_class& num = residual.get_num();
    const mpz_class& den = residual.get_den();
    if (remaining == 3) {
        auto tail = first_solution3(Fraction(num, den));
        if (!tail || (*tail)[0] < min_a) {
            // the scan-order first may sit below min_a; fall back to the
            // full constrained set for correctness
            if (tail) {
                auto all = enumerate3(Fraction(num, den), min_a);
                if (all.empty()) return std::nullopt;
                tail = *all.begin();
            } else {
                return std::nullopt;
            }
        }
        Solution s = prefix;
        s.insert(s.end(), tail->begin(), tail->end());
        return s;
    }
    mpz_class lo = den / num + 1;
    if (lo < min_a) lo = min_a;
    const mpz_class hi = remaining * den / num;
    for (mpz_class a = lo; a <= hi; ++a) {
        mpq_class next = residual - mpq_class(1, a);
        prefix.push_back(a);
        auto found = first_rec(next, remaining - 1, a, prefix);
        prefix.pop_back();
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> first_solution_k(const Fraction& f, unsigned k, unsigned k_cap) {
    check_arity(k, k_cap);
    Fraction r = f.reduce();
    if (r.num > k * r.den) return std::nullopt;
    if (k == 3) return first_solution3(r);
    if (k == 2) {
        auto all = solve_two(r);
        if (all.empty()) return std::nullopt;
        return *all.begin();
    }
    std::vector<mpz_class> prefix;
    mpq_class residual(r.num, r.den);
    return first_rec(residual, k, 1, prefix);
}

}  // namespace unitfrac
