#pragma once

#include <optional>
#include <string>

#include "hypercat/numbers.hpp"
#include "hypercat/type_vector.hpp"

namespace hypercat {

/// Hyper-Catalan number C_m = (E-1)! / ((V-1)! m!), the number of
/// subdigons of type m. The rational always reduces to an integer.
BigInt hyper_catalan(const TypeVector& m);

/// Coefficient of t^m in the r-th power of the hyper-Catalan series:
/// r (r-2+E)! / (m! (r-2+V)!). For r = 1 this is hyper_catalan(m);
/// r = 0 gives the constant series.
BigInt hyper_catalan_power(const TypeVector& m, unsigned r);

/// Tutrank number T[k1; m] = binom(k1 + E_m - 1, k1) C_m, the number of
/// tubdigons (two-gons allowed) of type k. Takes a base-one vector.
BigInt tutrank(const TypeVector& k);

/// Two-parameter Fuss number (nm)! / ((1+(n-1)m)! m!), n >= 2.
/// Equals the hyper-Catalan of the vector with m in position n.
BigInt fuss(unsigned n, unsigned m);

/// C_m computed purely by the recurrence
///   C_m = sum_j sum_{multisets} binom(j; k) prod C_n^{k_n}
/// over multisets of j smaller types with componentwise weighted sum
/// m - unit(j), base case C[] = 1. Memoized per call. Independent of the
/// closed form above.
BigInt hyper_catalan_recurrence(const TypeVector& m);

/// Outcome of a verification sweep. On failure, `counterexample`
/// describes the first mismatch with both values.
struct CheckReport {
    bool pass = true;
    unsigned long cases = 0;
    std::string counterexample;
};

/// Verifies the Segner convolution C_{m+1} = sum C_n C_{m-n} for all
/// m <= max_m, with every Catalan taken from the hyper-Catalan closed
/// form.
CheckReport segner_check(unsigned max_m);

/// Left side of Fine's identity: the sum over compositions with
/// sum k_i = k and sum i*k_i = n of multinomial(k; k1, k2, ...).
/// Empty sum (zero) when k = 0 or k > n, except fine_lhs(0,0) = 1.
BigInt fine_lhs(unsigned n, unsigned k);

/// fine_lhs(n, k) == binom(n-1, k-1) for all 1 <= k <= n <= max_n.
CheckReport fine_check(unsigned max_n);

} // namespace hypercat
