#ifndef STIELTJES_ORACLE_HPP
#define STIELTJES_ORACLE_HPP

#include <cstdint>

#include "stieltjes/types.hpp"

namespace stieltjes {

struct OracleConfig {
    std::int64_t N_base = 5000;
    int doublings = 6;        // floor; raised with k (see gamma_limit_oracle)
    int richardson_depth = 6; // floor on extrapolation stages, likewise raised
};

/// gamma_k(a) by the defining limit relation with sequence extrapolation.
///
/// Partial sums S(N) = sum_{j=0..N} ln^k(j+a)/(j+a) - ln^{k+1}(N+a)/(k+1)
/// are accumulated in double-double along the ladder N = N_base * 2^i, then
/// extrapolated.  By Euler-Maclaurin the error of S(N) is
///     f(N)/2 + sum_{m even} c_{m,p} ln^p(N+a)/(N+a)^m,   f(x) = ln^k(x+a)/(x+a),
/// so the extrapolation annihilates, in order, ln^k(N+a)/(N+a) and then the
/// blocks ln^p(N+a)/(N+a)^m for m = 2, 4, ... and p = k..0.  Plain
/// polynomial-in-1/N Richardson ignores the logarithmic factors and loses all
/// accuracy beyond k = 2 (errors reach 0.17 at k = 5); the structured basis
/// restores it.  Ladder length and depth grow with k: max(doublings, k+4).
///
/// The relation sums ln^k(j+a)/(j+a) from j = 0; the variant with summand
/// ln^k(j+a)/j from j = 1 reproduces gamma at a = 1 but not -psi(a) elsewhere
/// (see limit_sum_alt_printed and its test).
ComputedValue gamma_limit_oracle(int k, double a, const OracleConfig& cfg = {});

/// One partial sum of the production reading (exposed for tests).
double limit_sum(int k, double a, std::int64_t N);

/// Partial sum with summand ln^k(j+a)/j, j >= 1.  Kept to document that this
/// reading fails self-consistency for a != 1.
double limit_sum_alt_printed(int k, double a, std::int64_t N);

/// zeta(m), m >= 2, by direct summation with the integral tail correction
/// N^{1-m}/(m-1) + N^{-m}/2 taken at the first unsummed index; N is chosen so
/// the next Euler-Maclaurin correction m N^{-m-1}/12 is below 1e-15.
double zeta_int(int m);

/// zeta(m, a) = sum_{n>=0} (n+a)^{-m}, same tail treatment.
double hurwitz_zeta_int(int m, double a);

/// psi(a) from -gamma + sum_{n=0..N} (1/(n+1) - 1/(n+a)) + (a-1)/N.
/// Independent cross-check for gamma_0(a) = -psi(a); shares no code with the
/// representation modules.
double digamma_series_ref(double a);

/// Euler's constant from gamma_limit_oracle(0, 1), computed once.
double euler_gamma_ref();

}  // namespace stieltjes

#endif
