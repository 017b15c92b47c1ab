#include "stieltjes/integral_reps.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace stieltjes {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

std::complex<double> cpow_int(std::complex<double> z, int k) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

void check(const StieltjesQuery& q) {
    require_positive_a(q.a);
    if (q.k < 0) throw std::domain_error("index k must be non-negative");
}

}  // namespace

double hermite_integrand_limit(int k, double a) {
    const double lna = std::log(a);
    const double lead = pow_int(lna, k) - (k >= 1 ? k * pow_int(lna, k - 1) : 0.0);
    return lead / (kPi * a);
}

ComputedValue gamma_hermite(const StieltjesQuery& q, const QuadratureSpec& spec) {
    check(q);
    const int k = q.k;
    const double a = q.a;
    auto f = [k, a](double y) {
        if (y == 0.0) return hermite_integrand_limit(k, a);
        const std::complex<double> z{a, y};
        const std::complex<double> w =
            (std::complex<double>{y / a, 1.0}) * cpow_int(std::log(z), k);
        const double num = 2.0 * w.real();
        const double den = (1.0 + (y / a) * (y / a)) * std::expm1(2.0 * kPi * y);
        return num / den;
    };
    const QuadratureResult rq = integrate_boltzmann_tail(f, spec);
    const double lna = std::log(a);
    ComputedValue cv;
    cv.method = Method::hermite;
    cv.value = pow_int(lna, k) / (2.0 * a) - pow_int(lna, k + 1) / (k + 1) + rq.value / a;
    cv.err_estimate = rq.err_estimate / a;
    cv.work = rq.nodes_used;
    cv.converged = rq.converged;
    return cv;
}

ComputedValue gamma0_u_integral(double a, const QuadratureSpec& spec) {
    require_positive_a(a);
    auto g = [a](double u, double v) {
        if (u == 0.0) return 1.0 / (2.0 * kPi * a);
        const double w = v / (2.0 * kPi * a);
        return w / ((1.0 + w * w) * u);
    };
    const QuadratureResult rq = integrate_unit_log(g, spec);
    ComputedValue cv;
    cv.method = Method::u_integral;
    cv.value = 1.0 / (2.0 * a) - std::log(a) + rq.value / (kPi * a);
    cv.err_estimate = rq.err_estimate / (kPi * a);
    cv.work = rq.nodes_used;
    cv.converged = rq.converged;
    return cv;
}

ComputedValue gamma_m_u_integral(const StieltjesQuery& q, const QuadratureSpec& spec) {
    check(q);
    if (q.k < 1) throw std::domain_error("gamma_m_u_integral needs m >= 1; use gamma0_u_integral");
    const int m = q.k;
    const double a = q.a;
    const double lna = std::log(a);
    auto g = [m, a, lna](double u, double v) {
        if (u == 0.0) {
            const double d = m * pow_int(lna, m - 1) - pow_int(lna, m);
            return -d / (2.0 * kPi * kPi * a * a);
        }
        const std::complex<double> z{a, v / (2.0 * kPi)};
        const std::complex<double> w = cpow_int(std::log(z), m) / z;
        return -(1.0 / kPi) * w.imag() / u;
    };
    const QuadratureResult rq = integrate_unit_log(g, spec);
    ComputedValue cv;
    cv.method = Method::u_integral;
    cv.value = pow_int(lna, m) / (2.0 * a) - pow_int(lna, m + 1) / (m + 1) + rq.value;
    cv.err_estimate = rq.err_estimate;
    cv.work = rq.nodes_used;
    cv.converged = rq.converged;
    return cv;
}

namespace literal {

ComplexPair hermite_integrand_literal(int k, double a, double y) {
    const std::complex<double> zp{a, y};
    const std::complex<double> zm{a, -y};
    const std::complex<double> num =
        (std::complex<double>{y / a, -1.0}) * cpow_int(std::log(zm), k) +
        (std::complex<double>{y / a, +1.0}) * cpow_int(std::log(zp), k);
    const double den = (1.0 + (y / a) * (y / a)) * std::expm1(2.0 * kPi * y);
    return {num.real() / den, num.imag() / den};
}

double gamma_hermite_second_term_km1(const StieltjesQuery& q, const QuadratureSpec& spec) {
    const ComputedValue base = gamma_hermite(q, spec);
    const double lna = std::log(q.a);
    // swap -ln^{k+1}a/(k+1) for -ln^{k-1}a/(k+1) as printed (k >= 1)
    return base.value + pow_int(lna, q.k + 1) / (q.k + 1) - pow_int(lna, q.k - 1) / (q.k + 1);
}

}  // namespace literal

}  // namespace stieltjes
