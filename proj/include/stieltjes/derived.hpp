#ifndef STIELTJES_DERIVED_HPP
#define STIELTJES_DERIVED_HPP

#include <cstdint>

#include "stieltjes/combinatorics.hpp"
#include "stieltjes/types.hpp"

namespace stieltjes {

/// Evaluate gamma_k(a) with the chosen producer.  stirling covers k <= 1 and
/// asymptotic covers k = 0 only; other (k, method) pairs are unsupported.
ComputedValue compute_gamma(Method method, int k, double a);

/// gamma_k(a+n) = gamma_k(a) - sum_{j=0..n-1} ln^k(a+j)/(a+j), delegating the
/// gamma_k(a) evaluation to the selected method.
ComputedValue gamma_shift(int k, double a, int n, Method sel);

/// Partial sum of gamma_l(a) - gamma_l(b) = sum_n [ln^l(n+a)/(n+a) - ln^l(n+b)/(n+b)]
/// through n = N, plus the analytic midpoint tail integral
/// [ln^{l+1}(N+1/2+b) - ln^{l+1}(N+1/2+a)]/(l+1) (without it the partial sums
/// drift like ln^l(N)/N and the stated N=1e6 accuracy is unreachable).
/// err_estimate keeps the documented heuristic |a-b|(l+1) ln^l(N)/N^2.
ComputedValue gamma_diff(int ell, double a, double b, std::int64_t N);

/// psi^(n)(a) = (-1)^{n+1} n! zeta(n+1, a) for n >= 1; n = 0 is the digamma
/// reference series.
double polygamma(int n, double a);

/// H_n^(r) three ways: exact rational, polygamma differences, and the
/// quadrature of (t^n - 1)/(t - 1) ln^{r-1} t over (0,1).
struct HarmonicCheck {
    BigRat exact;
    double exact_value = 0.0;
    double via_polygamma = 0.0;
    double via_integral = 0.0;
    bool integral_converged = true;
};
HarmonicCheck gen_harmonic_check(int n, int r);

/// Right-hand sides of the zero-sum identities:
///   order 2: 1 - pi^2/8 + 2 gamma_1 + gamma^2
///   order 3: 1 - (7/8) zeta(3) + gamma^3 + 3 gamma gamma_1 + (3/2) gamma_2
/// with the Stieltjes constants from the selected method.  The sums over
/// nontrivial zeros themselves are out of scope; the combinations serve as
/// cross-method consistency probes (order 3 cancels to ~1e-4).
double zero_sum_rhs(int order, Method sel);

}  // namespace stieltjes

#endif
