#ifndef STIELTJES_SERIES_REPS_HPP
#define STIELTJES_SERIES_REPS_HPP

#include <cstdint>

#include "stieltjes/types.hpp"

namespace stieltjes {

struct SeriesResult {
    ComputedValue value;
    SeriesDiagnostics diag;
};

/// gamma_0(a) from the reordered (n-outer) Stirling series
///   1/(2a) - ln a - (1/(pi a)) sum_n (1/(n! n)) sum_k (2k+1)! (-1)^k
///                                (2 pi a)^{-(2k+1)} s(n,2k+1) (-1)^n.
/// Terms use factorial-scaled rows s(n,j)/n! held in scaled double-double;
/// the inner alternating sums cancel through huge intermediates once
/// ln n exceeds 2 pi a, so evaluation stops when the cancellation guard
/// trips (or |tail| < tol, or n = N).  No convergence rate is known; the
/// observed decay near a = 1 is about n^{-1.1}, and err_estimate is
/// max(|last term|, |S_N - S_{N/2}|) rather than the bare last term, which
/// undershoots the true error by two orders of magnitude there.
SeriesResult gamma0_stirling(double a, std::int64_t N, double tol = 1e-10);

/// The same double sum in the printed k-outer order, exploratory: the inner
/// n-sums collapse to zeta(2k+2)-type values, so the outer k-series is
/// asymptotic in k and is reported with regime diagnostics.
SeriesResult gamma0_stirling_kfirst(double a, int K, std::int64_t N);

/// gamma_0(a) from the asymptotic series
///   1/(2a) - ln a + (1/(2 pi^2 a^2)) sum_n (2n+1)! (-1)^n zeta(2n+2) / (2 pi a)^{2n}
/// truncated at the smallest term.  regime_ok is false when the first term is
/// already the smallest.
SeriesResult gamma0_asymptotic(double a);

/// Same series truncated after terms 0..n_trunc (comparison baseline for the
/// optimal-truncation property).
SeriesResult gamma0_asymptotic_truncated(double a, int n_trunc);

/// gamma_1(a) from the harmonic-weighted Stirling series
///   ln a/(2a) - ln^2 a/2 + ln a [ -psi(a) - 1/(2a) + ln a ]
///   - (1/(pi a)) sum_n (1/(n n!)) sum_k (-1)^k (2 pi a)^{-(2k+1)}
///                     |s(2k+2,2)| |s(n,2k+1)|,
/// with |s(2k+2,2)| = (2k+1)! H_{2k+1}.  psi(a) comes from psi_source
/// (Method::oracle selects digamma_series_ref).  diag.conditioning reports
/// the sum of |term| across the closed-form part for small a, where the
/// ln a prefactor terms partially cancel.
SeriesResult gamma1_stirling(double a, std::int64_t N, Method psi_source = Method::oracle,
                             double tol = 1e-10);

}  // namespace stieltjes

#endif
