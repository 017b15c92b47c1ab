#ifndef STIELTJES_COMBINATORICS_HPP
#define STIELTJES_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "stieltjes/types.hpp"

namespace stieltjes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Triangular tables of Stirling numbers of the first kind:
/// exact s(n,k) and factorial-scaled t(n,k) = s(n,k)/n!.
///
/// Series evaluation never touches the exact table; s(n,k) grows
/// super-exponentially while s(n,k)/n! stays bounded by 1.
class StirlingTable {
  public:
    explicit StirlingTable(int n_max = 128);

    int n_max() const { return n_max_; }

    /// s(n,k) from the recurrence s(n+1,k) = s(n,k-1) - n s(n,k), s(0,0)=1.
    const BigInt& exact(int n, int k) const;

    /// t(n,k) = s(n,k)/n! from the scaled recurrence
    /// t(n+1,k) = t(n,k-1)/(n+1) - (n/(n+1)) t(n,k); n! is never formed.
    double scaled(int n, int k) const;

    /// Row n of the scaled table.
    const std::vector<double>& scaled_row(int n) const;

  private:
    int n_max_;
    std::vector<std::vector<BigInt>> exact_;
    std::vector<std::vector<double>> scaled_;
    void check(int n) const;
};

/// Process-wide table, built on first use (immutable afterwards).
const StirlingTable& stirling_table(int n_max = 128);

BigInt stirling_exact(int n, int k, int n_max = 128);
double stirling_scaled(int n, int k, int n_max = 128);

/// Closed forms for s(m,k), k = 1..4, via (generalized) harmonic numbers:
///   s(n+1,1) = (-1)^n n!
///   s(n+1,2) = (-1)^(n+1) n! H_n
///   s(n+1,3) = (-1)^n  (n!/2) [H_n^2 - H_n^(2)]
///   s(n+1,4) = (-1)^(n+1) (n!/6) [H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3)]
/// evaluated in exact rational arithmetic (m = n+1 >= 1).
BigInt stirling_closed_form(int m, int k);

/// Exact generalized harmonic number H_n^(r) with a floating rendering.
struct HarmonicValue {
    int n = 0;
    int r = 1;
    BigRat exact;
    double value = 0.0;
};

HarmonicValue harmonic(int n, int r);

/// Partial sum of the generating function sum_n s(n,k) x^n / n! against its
/// target ln^k(1+x)/k!.  x = -1 is excluded.
std::pair<double, double> gf_partial(double x, int k, int N);

/// First even Bernoulli numbers B_2..B_16 as exact rationals
/// (independent of the zeta machinery; used only for cross-checks).
BigRat bernoulli_even(int two_n);

}  // namespace stieltjes

#endif
