#pragma once

// Enumeration of all sorted solutions of m/n = 1/a1 + 1/a2 + 1/a3.
//
// Every solution determines a pattern (n1,n2,n3) with n_i = gcd(a_i, n)
// and a parameter quad (x12, x13, x23, x123) via the relative gcds of the
// t_i = a_i / n_i. The quad satisfies the balance equation
//
//   m * x12 * x13 * x23 * x123 = (n/n1) x23 + (n/n2) x13 + (n/n3) x12
//
// and at least one of y, z, x12*x13, x12*x123 is at most the pattern bound
// B, which yields the four bounded branch searches below.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "unitfrac/fraction.hpp"
#include "unitfrac/pattern3.hpp"

namespace unitfrac {

struct ParamQuad {
    u128 x12 = 1, x13 = 1, x23 = 1, x123 = 1;
    friend bool operator==(const ParamQuad&, const ParamQuad&) = default;
};

enum class BranchKind { Y, Z, P12_13, Q12_123 };

// Derived integers y, z, w of a quad (present when their defining
// quotients are exact, which holds for every genuine solution).
struct QuadParams {
    mpz_class y, z, w;
};
std::optional<QuadParams> quad_parameters(u64 m, u64 n, const Pattern3& p, const ParamQuad& q);

// One bounded branch search. Every emitted quad satisfies the balance
// equation exactly. With `pruned` the search additionally applies the
// sound ordering/size pre-filters that final validation enforces anyway;
// the default emits every exactly-recovered quad.
std::vector<ParamQuad> enumerate_branch(u64 m, u64 n, const Pattern3& p, BranchKind kind,
                                        bool pruned = false);

// Accepts iff the balance equation, pairwise coprimality of x12/x13/x23,
// gcd(x_ij, d_ij) = 1, gcd(t_i, n/n_i) = 1 and the ordering
// n1 t1 <= n2 t2 <= n3 t3 all hold. Returns the sorted denominators.
std::optional<std::array<mpz_class, 3>> validate_quad(u64 m, u64 n, const Pattern3& p,
                                                      const ParamQuad& q);

// All sorted pairs with 1/a1 + 1/a2 = m/n (a1 >= min_first).
std::set<Solution> solve_two(const Fraction& f, const mpz_class& min_first = 1);

// Complete duplicate-free solution set via the pattern/branch machinery.
// min_first restricts the smallest denominator (used by the k-recursion).
std::set<Solution> enumerate3(const Fraction& f, const mpz_class& min_first = 1);

// Independent brute-force enumeration: a1 scans (n/m, 3n/m], the exact
// residual is reduced and handed to the two-fraction scan with a2 >= a1.
std::set<Solution> oracle3(const Fraction& f);

// First solution in the oracle's (a1 ascending, a2 ascending) scan order,
// or nullopt. Early-exit existence check for range verification.
std::optional<Solution> first_solution3(const Fraction& f);

inline std::size_t count3(const Fraction& f) { return enumerate3(f).size(); }

}  // namespace unitfrac
