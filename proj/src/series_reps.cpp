#include "stieltjes/series_reps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/integral_reps.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

constexpr double kPi = std::numbers::pi;
// 2*pi to double-double precision
const DD kTwoPi{6.283185307179586232e+00, 2.449293598294706354e-16};

constexpr std::int64_t kSeriesCapN = 1 << 20;
constexpr int kRowBand = 320;          // row columns kept; exact for the terms used
constexpr double kGuardExponent = 70;  // stop once terms pass 2^70 (~1.2e21)

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

/// psi(a) for the gamma_1 lead terms, by the selected gamma_0 producer.
double psi_from(Method m, double a) {
    switch (m) {
        case Method::oracle: return digamma_series_ref(a);
        case Method::u_integral: return -gamma0_u_integral(a).value;
        case Method::hermite: return -gamma_hermite({0, a}).value;
        default:
            throw UnsupportedError(std::string("psi_source '") + method_name(m) +
                                   "' is not a gamma_0 producer");
    }
}

struct EngineResult {
    DD sum;                 // sum over n of (1/n) * inner_n, signs included
    DD half_sum;            // snapshot near n = terms/2
    std::int64_t terms = 0;
    double last_term = 0.0;
    double abs_sum = 0.0;   // sum of |outer term|, conditioning aid
    bool hit_guard = false;
    bool tail_met = false;
};

/// Shared evaluator for the two n-outer Stirling series.
///
/// Maintains u(n,j) = |s(n,j)|/n! as a scaled double-double row via
///   u(n,j) = (u(n-1,j-1) + (n-1) u(n-1,j)) / n      (all inputs exact),
/// and per row accumulates  inner_n = sum_k (-1)^k C_k u(n,2k+1)  with
/// C_k = (2k+1)!/(2 pi a)^{2k+1} (times H_{2k+1} when weighted).  Everything
/// is carried in double-double: near a = 1 the inner sums cancel through
/// intermediates ~1e20 while the result sits near 1e-10.
EngineResult stirling_series_sum(double a, std::int64_t N, bool harmonic_weights,
                                 double stop_tol) {
    const DD two_pi_a = kTwoPi * a;
    const DD inv_sq = DD{1.0} / (two_pi_a * two_pi_a);
    const ScaledDD inv_sq_s = [&] {
        ScaledDD s;
        s.m = inv_sq;
        s.e = 0;
        s.normalize();
        return s;
    }();

    const int kmax = (kRowBand - 1) / 2;
    // C_k (optionally with the H weight folded in) as scaled double-double
    std::vector<ScaledDD> coef(static_cast<std::size_t>(kmax) + 1);
    {
        ScaledDD c;  // (2k+1)!/(2 pi a)^{2k+1}
        c.m = DD{1.0} / two_pi_a;
        c.normalize();
        DD H{1.0};  // H_{2k+1}
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                c = c * static_cast<double>(2 * k) * static_cast<double>(2 * k + 1) * inv_sq_s;
                H = H + DD{1.0} / static_cast<double>(2 * k) + DD{1.0} / static_cast<double>(2 * k + 1);
            }
            coef[static_cast<std::size_t>(k)] = harmonic_weights ? [&] {
                ScaledDD w = c;
                w.m = w.m * H;
                w.normalize();
                return w;
            }() : c;
        }
    }

    std::vector<ScaledDD> row(static_cast<std::size_t>(kRowBand) + 1);
    row[0] = ScaledDD::from(1.0);

    EngineResult out;
    DD running;
    DD half_snapshot;
    std::vector<std::pair<std::int64_t, DD>> snapshots;  // at n = 2^i

    for (std::int64_t n = 1; n <= std::min(N, kSeriesCapN); ++n) {
        const int jhi = static_cast<int>(std::min<std::int64_t>(n, kRowBand));
        for (int j = jhi; j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                (row[static_cast<std::size_t>(j - 1)] +
                 row[static_cast<std::size_t>(j)] * static_cast<double>(n - 1)) /
                static_cast<double>(n);
        row[0] = row[0] * static_cast<double>(n - 1) / static_cast<double>(n);

        DD inner;
        double max_exp = -1e9;
        for (int k = 0; 2 * k + 1 <= jhi; ++k) {
            const ScaledDD& uj = row[static_cast<std::size_t>(2 * k + 1)];
            if (uj.is_zero()) continue;
            const ScaledDD t = coef[static_cast<std::size_t>(k)] * uj;
            if (t.is_zero()) continue;
            const double e2 = static_cast<double>(t.e);
            if (e2 > max_exp) max_exp = e2;
            if (e2 < -120.0 && e2 < max_exp - 120.0) break;  // spent
            const DD tv = t.to_dd();
            inner = (k % 2 == 0) ? inner + tv : inner - tv;
        }
        if (max_exp > kGuardExponent) {
            out.hit_guard = true;
            break;
        }
        const DD term = inner / static_cast<double>(n);
        running = running + term;
        out.terms = n;
        out.last_term = std::abs(term.to_double());
        out.abs_sum += out.last_term;
        if ((n & (n - 1)) == 0) snapshots.emplace_back(n, running);
        // observed tail ~ n * |T_n|; stop_tol applies to the final value (one
        // more factor 1/(pi a) downstream)
        if (n >= 16 && out.last_term * static_cast<double>(n) < 0.5 * stop_tol * kPi * a) {
            out.tail_met = true;
            break;
        }
    }
    out.sum = running;
    // snapshot nearest to terms/2 for the sequence-difference error estimate
    for (const auto& [n, s] : snapshots)
        if (n <= out.terms / 2) half_snapshot = s;
    out.half_sum = half_snapshot;
    return out;
}

void check_series_args(double a, std::int64_t N) {
    require_positive_a(a);
    if (N < 1) throw std::domain_error("series length N must be positive");
    if (N > kSeriesCapN)
        throw CapacityError("stirling series capped at N <= " + std::to_string(kSeriesCapN) +
                            ", requested " + std::to_string(N));
}

}  // namespace

SeriesResult gamma0_stirling(double a, std::int64_t N, double tol) {
    check_series_args(a, N);
    const EngineResult er = stirling_series_sum(a, N, /*harmonic_weights=*/false, tol);
    // s(n,2k+1)(-1)^n = -|s(n,2k+1)|, so the printed minus sign flips to plus.
    const double series = er.sum.to_double() / (kPi * a);
    SeriesResult r;
    r.value.method = Method::stirling;
    r.value.value = 1.0 / (2.0 * a) - std::log(a) + series;
    r.value.work = er.terms;
    const double seq_diff = std::abs((er.sum - er.half_sum).to_double()) / (kPi * a);
    r.value.err_estimate = std::max(er.last_term / (kPi * a), seq_diff);
    r.value.converged = r.value.err_estimate <= tol && !er.hit_guard;
    r.diag.terms_used = er.terms;
    r.diag.last_term = er.last_term / (kPi * a);
    r.diag.regime_ok = !er.hit_guard;
    r.diag.conditioning = er.abs_sum / (kPi * a);
    return r;
}

SeriesResult gamma1_stirling(double a, std::int64_t N, Method psi_source, double tol) {
    check_series_args(a, N);
    const double psi_a = psi_from(psi_source, a);
    const double lna = std::log(a);
    const double lead1 = lna / (2.0 * a);
    const double lead2 = -0.5 * lna * lna;
    const double lead3 = lna * (-psi_a - 1.0 / (2.0 * a) + lna);

    const EngineResult er = stirling_series_sum(a, N, /*harmonic_weights=*/true, tol);
    const double series = -er.sum.to_double() / (kPi * a);

    SeriesResult r;
    r.value.method = Method::stirling;
    r.value.value = lead1 + lead2 + lead3 + series;
    r.value.work = er.terms;
    const double seq_diff = std::abs((er.sum - er.half_sum).to_double()) / (kPi * a);
    r.value.err_estimate = std::max(er.last_term / (kPi * a), seq_diff);
    r.value.converged = r.value.err_estimate <= tol && !er.hit_guard;
    r.diag.terms_used = er.terms;
    r.diag.last_term = er.last_term / (kPi * a);
    r.diag.regime_ok = !er.hit_guard;
    r.diag.conditioning =
        std::abs(lead1) + std::abs(lead2) + std::abs(lead3) + er.abs_sum / (kPi * a);
    return r;
}

SeriesResult gamma0_stirling_kfirst(double a, int K, std::int64_t N) {
    check_series_args(a, N);
    if (K < 0) throw std::domain_error("outer order K must be non-negative");
    if (2 * K + 1 > kRowBand)
        throw CapacityError("k-outer series capped at K <= " + std::to_string((kRowBand - 1) / 2));

    // Inner sums sum_n s(n,j)(-1)^n/(n! n) = -sum_n u(n,j)/n for odd j:
    // positive terms, plain compensated double suffices.
    const int jmax = 2 * K + 1;
    std::vector<double> u(static_cast<std::size_t>(jmax) + 1, 0.0);
    u[0] = 1.0;
    std::vector<KahanSum> cols(static_cast<std::size_t>(K) + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        const int jhi = static_cast<int>(std::min<std::int64_t>(n, jmax));
        for (int j = jhi; j >= 1; --j)
            u[static_cast<std::size_t>(j)] =
                (u[static_cast<std::size_t>(j - 1)] +
                 static_cast<double>(n - 1) * u[static_cast<std::size_t>(j)]) /
                static_cast<double>(n);
        u[0] = 0.0;
        for (int k = 0; 2 * k + 1 <= jhi; ++k)
            cols[static_cast<std::size_t>(k)].add(u[static_cast<std::size_t>(2 * k + 1)] /
                                                  static_cast<double>(n));
    }

    // Outer sum as printed: -(1/(pi a)) sum_k (2k+1)!(-1)^k (2pia)^{-(2k+1)} * inner_k,
    // inner_k = -cols[k].  Coefficients scale-tracked against factorial overflow.
    const double twopia = 2.0 * kPi * a;
    KahanSum outer;
    double cm = 1.0 / twopia;  // coefficient mantissa
    int ce = 0;                // coefficient exponent (base 2)
    double smallest = std::numeric_limits<double>::infinity();
    int smallest_at = 0;
    double last = 0.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            cm *= static_cast<double>(2 * k) * static_cast<double>(2 * k + 1) / (twopia * twopia);
            int ex = 0;
            cm = std::frexp(cm, &ex);
            ce += ex;
        }
        const double coef = std::ldexp(cm, ce);
        const double inner = -cols[static_cast<std::size_t>(k)].value();
        const double term = ((k % 2 == 0) ? 1.0 : -1.0) * coef * inner;
        outer.add(term);
        const double mag = std::abs(term);
        if (mag < smallest) {
            smallest = mag;
            smallest_at = k;
        }
        last = term;
    }

    SeriesResult r;
    r.value.method = Method::stirling;
    r.value.value = 1.0 / (2.0 * a) - std::log(a) - outer.value() / (kPi * a);
    r.value.err_estimate = std::abs(last) / (kPi * a);
    r.value.work = static_cast<std::int64_t>(N) * (K + 1);
    r.diag.terms_used = K + 1;
    r.diag.last_term = std::abs(last) / (kPi * a);
    r.diag.truncation_index = smallest_at;
    // asymptotic in k: once K passes the smallest term the sum is divergent
    r.diag.regime_ok = smallest_at == K;
    r.value.converged = r.diag.regime_ok;
    return r;
}

namespace {

SeriesResult asymptotic_impl(double a, int forced_trunc) {
    require_positive_a(a);
    constexpr int kMaxTerms = 400;
    const double twopia = 2.0 * kPi * a;
    const double pref = 1.0 / (2.0 * kPi * kPi * a * a);

    std::vector<double> terms;
    double cm = 1.0;  // (2n+1)!/(2pia)^{2n}, scale-tracked
    int ce = 0;
    double smallest = std::numeric_limits<double>::infinity();
    int nstar = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        if (n > 0) {
            cm *= static_cast<double>(2 * n) * static_cast<double>(2 * n + 1) / (twopia * twopia);
            int ex = 0;
            cm = std::frexp(cm, &ex);
            ce += ex;
        }
        const double mag = pref * std::ldexp(cm, ce) * zeta_int(2 * n + 2);
        terms.push_back(((n % 2 == 0) ? 1.0 : -1.0) * mag);
        if (mag < smallest) {
            smallest = mag;
            nstar = n;
        } else if (n > nstar + 1 && std::abs(terms.back()) > 10.0 * smallest) {
            break;  // well past the minimum
        }
        if (mag < 1e-300) break;
    }

    const int trunc = forced_trunc >= 0 ? std::min<int>(forced_trunc, static_cast<int>(terms.size()) - 1)
                                        : nstar;
    KahanSum s;
    for (int n = 0; n <= trunc; ++n) s.add(terms[static_cast<std::size_t>(n)]);

    SeriesResult r;
    r.value.method = Method::asymptotic;
    r.value.value = 1.0 / (2.0 * a) - std::log(a) + s.value();
    const double omitted = trunc + 1 < static_cast<int>(terms.size())
                               ? std::abs(terms[static_cast<std::size_t>(trunc) + 1])
                               : smallest;
    r.value.err_estimate = omitted;
    r.value.work = trunc + 1;
    r.diag.terms_used = trunc + 1;
    r.diag.last_term = std::abs(terms[static_cast<std::size_t>(trunc)]);
    r.diag.truncation_index = nstar;
    r.diag.regime_ok = nstar >= 1;  // first term already smallest => out of regime
    r.value.converged = r.diag.regime_ok;
    return r;
}

}  // namespace

SeriesResult gamma0_asymptotic(double a) { return asymptotic_impl(a, -1); }

SeriesResult gamma0_asymptotic_truncated(double a, int n_trunc) {
    if (n_trunc < 0) throw std::domain_error("truncation index must be non-negative");
    return asymptotic_impl(a, n_trunc);
}

}  // namespace stieltjes
