#include "stieltjes/derived.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stieltjes/integral_reps.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/series_reps.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

ComputedValue compute_gamma(Method method, int k, double a) {
    require_positive_a(a);
    if (k < 0) throw std::domain_error("index k must be non-negative");
    switch (method) {
        case Method::hermite:
            return gamma_hermite({k, a});
        case Method::u_integral:
            return k == 0 ? gamma0_u_integral(a) : gamma_m_u_integral({k, a});
        case Method::oracle:
            return gamma_limit_oracle(k, a);
        case Method::stirling:
            if (k == 0) return gamma0_stirling(a, 32768, 1e-9).value;
            if (k == 1) return gamma1_stirling(a, 32768, Method::oracle, 1e-9).value;
            throw UnsupportedError("stirling series cover k <= 1, got k = " + std::to_string(k));
        case Method::asymptotic:
            if (k == 0) return gamma0_asymptotic(a).value;
            throw UnsupportedError("asymptotic series covers k = 0 only, got k = " +
                                   std::to_string(k));
    }
    throw UnsupportedError("unknown method");
}

ComputedValue gamma_shift(int k, double a, int n, Method sel) {
    require_positive_a(a);
    if (n < 1) throw std::domain_error("shift count n must be positive");
    ComputedValue cv = compute_gamma(sel, k, a);
    KahanSum corr;
    for (int j = 0; j < n; ++j) {
        const double x = a + j;
        corr.add(pow_int(std::log(x), k) / x);
    }
    cv.value -= corr.value();
    return cv;
}

ComputedValue gamma_diff(int ell, double a, double b, std::int64_t N) {
    require_positive_a(a);
    require_positive_a(b);
    if (ell < 0) throw std::domain_error("index must be non-negative");
    if (N < 1) throw std::domain_error("N must be positive");
    const double s = parallel::sum_terms(0, N + 1, [ell, a, b](std::int64_t n) {
        const double xa = static_cast<double>(n) + a;
        const double xb = static_cast<double>(n) + b;
        return pow_int(std::log(xa), ell) / xa - pow_int(std::log(xb), ell) / xb;
    });
    const double c = static_cast<double>(N) + 0.5;
    const double tail =
        (pow_int(std::log(c + b), ell + 1) - pow_int(std::log(c + a), ell + 1)) / (ell + 1);
    ComputedValue cv;
    cv.method = Method::oracle;
    cv.value = s + tail;
    cv.err_estimate = std::abs(a - b) * (ell + 1) *
                      pow_int(std::log(static_cast<double>(N)), ell) /
                      (static_cast<double>(N) * static_cast<double>(N));
    cv.work = N + 1;
    cv.converged = true;
    return cv;
}

double polygamma(int n, double a) {
    require_positive_a(a);
    if (n < 0) throw std::domain_error("polygamma order must be non-negative");
    if (n == 0) return digamma_series_ref(a);
    double nfac = 1.0;
    for (int i = 2; i <= n; ++i) nfac *= i;
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    return sign * nfac * hurwitz_zeta_int(n + 1, a);
}

HarmonicCheck gen_harmonic_check(int n, int r) {
    if (n < 0) throw std::domain_error("harmonic numbers need n >= 0");
    if (r < 1) throw std::domain_error("harmonic order needs r >= 1");
    HarmonicCheck hc;
    const HarmonicValue hv = harmonic(n, r);
    hc.exact = hv.exact;
    hc.exact_value = hv.value;

    const double sign = (r % 2 == 1) ? 1.0 : -1.0;  // (-1)^{r-1}
    double rfac = 1.0;                              // (r-1)!
    for (int i = 2; i <= r - 1; ++i) rfac *= i;
    hc.via_polygamma = sign / rfac * (polygamma(r - 1, n + 1.0) - polygamma(r - 1, 1.0));

    if (n == 0) {
        hc.via_integral = 0.0;  // integrand vanishes identically
        return hc;
    }
    // (t^n - 1)/(t - 1) ln^{r-1} t dt over (0,1), as the u = 1-t image
    // (1 - (1-u)^n)/u * (-v)^{r-1}, v = -ln(1-u); finite value n at u=0 when
    // r = 1, else 0.
    auto g = [n, r](double u, double v) {
        if (u == 0.0) return r == 1 ? static_cast<double>(n) : 0.0;
        const double poly = -std::expm1(-static_cast<double>(n) * v);  // 1-(1-u)^n
        return poly / u * pow_int(-v, r - 1);
    };
    const QuadratureResult q = integrate_unit_log(g);
    hc.via_integral = sign / rfac * q.value;
    hc.integral_converged = q.converged;
    return hc;
}

double zero_sum_rhs(int order, Method sel) {
    if (order != 2 && order != 3)
        throw UnsupportedError("zero-sum right-hand sides cover orders 2 and 3");
    const double g0 = compute_gamma(sel, 0, 1.0).value;
    const double g1 = compute_gamma(sel, 1, 1.0).value;
    if (order == 2) return 1.0 - kPi * kPi / 8.0 + 2.0 * g1 + g0 * g0;
    const double g2 = compute_gamma(sel, 2, 1.0).value;
    return 1.0 - 7.0 / 8.0 * zeta_int(3) + g0 * g0 * g0 + 3.0 * g0 * g1 + 1.5 * g2;
}

}  // namespace stieltjes
