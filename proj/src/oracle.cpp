#include "stieltjes/oracle.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void check_query(int k, double a) {
    if (k < 0) throw std::domain_error("index k must be non-negative");
    if (k > 8)
        throw UnsupportedError("oracle accuracy budget covers k <= 8, got k = " +
                               std::to_string(k));
    require_positive_a(a);
}

}  // namespace

double limit_sum(int k, double a, std::int64_t N) {
    const double s = parallel::sum_terms(0, N + 1, [k, a](std::int64_t j) {
        const double x = static_cast<double>(j) + a;
        return pow_int(std::log(x), k) / x;
    });
    return s - pow_int(std::log(static_cast<double>(N) + a), k + 1) / (k + 1);
}

double limit_sum_alt_printed(int k, double a, std::int64_t N) {
    const double s = parallel::sum_terms(1, N + 1, [k, a](std::int64_t j) {
        return pow_int(std::log(static_cast<double>(j) + a), k) / static_cast<double>(j);
    });
    return s - pow_int(std::log(static_cast<double>(N) + a), k + 1) / (k + 1);
}

ComputedValue gamma_limit_oracle(int k, double a, const OracleConfig& cfg) {
    check_query(k, a);
    const int doublings = std::max(cfg.doublings, k + 4);
    const int stages_cap = std::max(cfg.richardson_depth, k + 4);

    // Ladder sums, each segment summed once (double-double, deterministic).
    std::vector<std::int64_t> Ns(static_cast<std::size_t>(doublings) + 1);
    for (int i = 0; i <= doublings; ++i) Ns[static_cast<std::size_t>(i)] = cfg.N_base << i;
    std::vector<DD> S(Ns.size());
    DD running;
    std::int64_t done = -1;
    std::int64_t work = 0;
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        const std::int64_t N = Ns[i];
        running = running + parallel::sum_terms_dd(done + 1, N + 1, [k, a](std::int64_t j) {
            const double x = static_cast<double>(j) + a;
            return DD{pow_int(std::log(x), k) / x};
        });
        work += N - done;
        done = N;
        const double lg = std::log(static_cast<double>(N) + a);
        S[i] = running - pow_int(lg, k + 1) / (k + 1);
    }

    // Annihilation basis: (m=1, p=k), then (m, p) for m = 2,4,... p = k..0.
    std::vector<std::pair<int, int>> basis;
    basis.emplace_back(1, k);
    for (int m = 2; static_cast<int>(basis.size()) < doublings; m += 2)
        for (int p = k; p >= 0 && static_cast<int>(basis.size()) < doublings; --p)
            basis.emplace_back(m, p);

    std::vector<DD> seq = S;
    std::vector<double> xs(Ns.begin(), Ns.end());
    std::vector<double> diag{S.back().to_double()};
    const int stages = std::min(static_cast<int>(basis.size()), stages_cap);
    for (int t = 0; t < stages && seq.size() > 1; ++t) {
        const auto [m, p] = basis[static_cast<std::size_t>(t)];
        std::vector<DD> next(seq.size() - 1);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const double phi_i = pow_int(std::log(xs[i] + a), p) / pow_int(xs[i] + a, m);
            const double phi_j = pow_int(std::log(xs[i + 1] + a), p) / pow_int(xs[i + 1] + a, m);
            const double r = phi_i / phi_j;
            next[i] = (seq[i + 1] * r - seq[i]) / (r - 1.0);
        }
        seq = std::move(next);
        xs.erase(xs.begin());
        diag.push_back(seq.back().to_double());
    }

    ComputedValue cv;
    cv.method = Method::oracle;
    cv.work = work;
    cv.value = diag.back();
    const std::size_t d = diag.size();
    cv.err_estimate = d >= 2 ? std::abs(diag[d - 1] - diag[d - 2]) : 0.0;
    cv.converged = true;
    if (d >= 3) {
        const double prev = std::abs(diag[d - 2] - diag[d - 3]);
        if (cv.err_estimate > prev) cv.converged = false;  // non-monotone tail
    }
    return cv;
}

double zeta_int(int m) {
    if (m < 2) throw std::domain_error("zeta_int needs m >= 2");
    if (m >= 54) return 1.0 + std::pow(2.0, -m);  // everything later underflows
    static std::mutex mu;
    static std::vector<double> cache(54, 0.0);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (cache[static_cast<std::size_t>(m)] != 0.0) return cache[static_cast<std::size_t>(m)];
    }
    const double boundary = std::pow(m / 1.2e-14, 1.0 / (m + 1));
    const std::int64_t N = std::max<std::int64_t>(8, static_cast<std::int64_t>(boundary) + 1);
    const double s = parallel::sum_terms(1, N + 1, [m](std::int64_t n) {
        return std::pow(static_cast<double>(n), -m);
    });
    const double M = static_cast<double>(N) + 1.0;
    const double z = s + std::pow(M, 1.0 - m) / (m - 1) + 0.5 * std::pow(M, -m);
    std::lock_guard<std::mutex> lock(mu);
    cache[static_cast<std::size_t>(m)] = z;
    return z;
}

double hurwitz_zeta_int(int m, double a) {
    if (m < 2) throw std::domain_error("hurwitz_zeta_int needs m >= 2");
    require_positive_a(a);
    const double boundary = std::pow(m / 1.2e-14, 1.0 / (m + 1));
    std::int64_t N = static_cast<std::int64_t>(boundary - a) + 1;
    N = std::max<std::int64_t>(N, 8);
    const double s = parallel::sum_terms(0, N + 1, [m, a](std::int64_t n) {
        return std::pow(static_cast<double>(n) + a, -m);
    });
    const double M = static_cast<double>(N) + 1.0 + a;
    return s + std::pow(M, 1.0 - m) / (m - 1) + 0.5 * std::pow(M, -m);
}

double euler_gamma_ref() {
    static std::once_flag once;
    static double g = 0.0;
    std::call_once(once, [] { g = gamma_limit_oracle(0, 1.0).value; });
    return g;
}

double digamma_series_ref(double a) {
    require_positive_a(a);
    constexpr std::int64_t N = 2'000'000;
    const double s = parallel::sum_terms(0, N + 1, [a](std::int64_t n) {
        return 1.0 / (static_cast<double>(n) + 1.0) - 1.0 / (static_cast<double>(n) + a);
    });
    return -euler_gamma_ref() + s + (a - 1.0) / static_cast<double>(N);
}

}  // namespace stieltjes
