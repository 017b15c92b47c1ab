#include "stieltjes/combinatorics.hpp"

#include <cmath>

#include "stieltjes/summation.hpp"
#include <map>
#include <mutex>
#include <string>

namespace stieltjes {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
    exact_.resize(static_cast<std::size_t>(n_max_) + 1);
    scaled_.resize(static_cast<std::size_t>(n_max_) + 1);
    exact_[0] = {BigInt(1)};
    scaled_[0] = {1.0};
    for (int n = 0; n < n_max_; ++n) {
        const auto& er = exact_[static_cast<std::size_t>(n)];
        const auto& sr = scaled_[static_cast<std::size_t>(n)];
        std::vector<BigInt> en(static_cast<std::size_t>(n) + 2);
        std::vector<double> sn(static_cast<std::size_t>(n) + 2);
        const double inv = 1.0 / (n + 1);
        for (int k = 0; k <= n + 1; ++k) {
            BigInt e = (k >= 1) ? er[static_cast<std::size_t>(k - 1)] : BigInt(0);
            if (k <= n) e -= BigInt(n) * er[static_cast<std::size_t>(k)];
            en[static_cast<std::size_t>(k)] = std::move(e);
            double s = (k >= 1) ? sr[static_cast<std::size_t>(k - 1)] * inv : 0.0;
            if (k <= n) s -= (static_cast<double>(n) * inv) * sr[static_cast<std::size_t>(k)];
            sn[static_cast<std::size_t>(k)] = s;
        }
        exact_[static_cast<std::size_t>(n) + 1] = std::move(en);
        scaled_[static_cast<std::size_t>(n) + 1] = std::move(sn);
    }
}

void StirlingTable::check(int n) const {
    if (n < 0 || n > n_max_)
        throw CapacityError("stirling table holds n <= " + std::to_string(n_max_) +
                            ", requested n = " + std::to_string(n));
}

const BigInt& StirlingTable::exact(int n, int k) const {
    check(n);
    static const BigInt zero(0);
    if (k < 0 || k > n) return zero;  // cutoff s(n,k) = 0 for n < k
    return exact_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

double StirlingTable::scaled(int n, int k) const {
    check(n);
    if (k < 0 || k > n) return 0.0;
    return scaled_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<double>& StirlingTable::scaled_row(int n) const {
    check(n);
    return scaled_[static_cast<std::size_t>(n)];
}

const StirlingTable& stirling_table(int n_max) {
    static std::mutex mu;
    static std::map<int, StirlingTable> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n_max);
    if (it == tables.end()) it = tables.emplace(n_max, StirlingTable(n_max)).first;
    return it->second;
}

BigInt stirling_exact(int n, int k, int n_max) { return stirling_table(n_max).exact(n, k); }
double stirling_scaled(int n, int k, int n_max) { return stirling_table(n_max).scaled(n, k); }

namespace {

BigRat harmonic_exact(int n, int r) {
    BigRat h(0);
    for (int i = 1; i <= n; ++i) {
        BigInt p(1);
        for (int j = 0; j < r; ++j) p *= i;
        h += BigRat(1, p);
    }
    return h;
}

BigInt factorial_big(int n) {
    BigInt f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt rat_to_int(const BigRat& r) {
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

}  // namespace

BigInt stirling_closed_form(int m, int k) {
    if (k < 1 || k > 4)
        throw UnsupportedError("closed forms cover k = 1..4, got k = " + std::to_string(k));
    if (m < 1) throw std::domain_error("closed forms need m >= 1");
    const int n = m - 1;
    const BigInt nf = factorial_big(n);
    const int sgn_even = (n % 2 == 0) ? 1 : -1;  // (-1)^n
    switch (k) {
        case 1:
            return sgn_even * nf;
        case 2: {
            BigRat v = BigRat(nf) * harmonic_exact(n, 1);
            return -sgn_even * rat_to_int(v);
        }
        case 3: {
            const BigRat h1 = harmonic_exact(n, 1);
            const BigRat h2 = harmonic_exact(n, 2);
            BigRat v = BigRat(nf) * (h1 * h1 - h2) / 2;
            return sgn_even * rat_to_int(v);
        }
        default: {
            const BigRat h1 = harmonic_exact(n, 1);
            const BigRat h2 = harmonic_exact(n, 2);
            const BigRat h3 = harmonic_exact(n, 3);
            BigRat v = BigRat(nf) * (h1 * h1 * h1 - 3 * h1 * h2 + 2 * h3) / 6;
            return -sgn_even * rat_to_int(v);
        }
    }
}

HarmonicValue harmonic(int n, int r) {
    if (n < 0) throw std::domain_error("harmonic numbers need n >= 0");
    if (r < 1) throw std::domain_error("harmonic order needs r >= 1");
    HarmonicValue h;
    h.n = n;
    h.r = r;
    h.exact = harmonic_exact(n, r);
    h.value = static_cast<double>(h.exact);
    return h;
}

std::pair<double, double> gf_partial(double x, int k, int N) {
    if (x == -1.0)
        throw std::domain_error("generating function excludes x = -1");
    if (x < -1.0 || x > 1.0)
        throw std::domain_error("generating function needs |x| <= 1");
    if (k < 1) throw std::domain_error("gf_partial needs k >= 1");
    const StirlingTable& tbl = stirling_table(std::max(N, 128));
    KahanSum s;
    double xn = 1.0;
    for (int n = 0; n <= N; ++n) {
        s.add(tbl.scaled(n, k) * xn);
        xn *= x;
    }
    double lk = 1.0;
    double kfac = 1.0;
    const double l = std::log1p(x);
    for (int i = 1; i <= k; ++i) {
        lk *= l;
        kfac *= i;
    }
    return {s.value(), lk / kfac};
}

BigRat bernoulli_even(int two_n) {
    switch (two_n) {
        case 0: return BigRat(1);
        case 2: return BigRat(1, 6);
        case 4: return BigRat(-1, 30);
        case 6: return BigRat(1, 42);
        case 8: return BigRat(-1, 30);
        case 10: return BigRat(5, 66);
        case 12: return BigRat(-691, 2730);
        case 14: return BigRat(7, 6);
        case 16: return BigRat(-3617, 510);
        default:
            throw UnsupportedError("bernoulli table holds B_2..B_16");
    }
}

}  // namespace stieltjes
