#ifndef STIELTJES_SUMMATION_HPP
#define STIELTJES_SUMMATION_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace stieltjes {

/// Kahan compensated accumulator for plain binary64 sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Unevaluated double-double value hi + lo with |lo| <= ulp(hi)/2.
/// Gives ~32 significant digits; used where a binary64 running sum of
/// large terms must survive cancellation against a large closed-form part.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    constexpr DD(double h, double l = 0.0) : hi(h), lo(l) {}

    static DD two_sum(double a, double b) {
        const double s = a + b;
        const double v = s - a;
        const double e = (a - (s - v)) + (b - v);
        return {s, e};
    }
    static DD two_prod(double a, double b) {
        const double p = a * b;
        const double e = std::fma(a, b, -p);
        return {p, e};
    }
    static DD quick_sum(double a, double b) {  // requires |a| >= |b|
        const double s = a + b;
        return {s, b - (s - a)};
    }

    DD operator+(const DD& o) const {
        DD s = two_sum(hi, o.hi);
        s.lo += lo + o.lo;
        return quick_sum(s.hi, s.lo);
    }
    DD operator-(const DD& o) const { return *this + DD{-o.hi, -o.lo}; }
    DD operator+(double x) const { return *this + DD{x}; }
    DD operator-(double x) const { return *this + DD{-x}; }
    DD operator*(const DD& o) const {
        DD p = two_prod(hi, o.hi);
        p.lo += hi * o.lo + lo * o.hi;
        return quick_sum(p.hi, p.lo);
    }
    DD operator*(double x) const {
        DD p = two_prod(hi, x);
        p.lo += lo * x;
        return quick_sum(p.hi, p.lo);
    }
    DD operator/(const DD& o) const {
        const double q1 = hi / o.hi;
        DD r = *this - o * q1;
        const double q2 = r.hi / o.hi;
        r = r - o * q2;
        const double q3 = r.hi / o.hi;
        DD q = two_sum(q1, q2);
        q.lo += q3;
        return quick_sum(q.hi, q.lo);
    }
    DD operator/(double x) const { return *this / DD{x}; }
    DD operator-() const { return {-hi, -lo}; }

    double to_double() const { return hi + lo; }
};

/// Positive quantity m * 2^e with a double-double mantissa, m in [1, 2).
/// Stirling-series rows and factorial coefficients individually overflow or
/// underflow binary64 while their products stay moderate; this keeps both
/// factors exactly representable.
struct ScaledDD {
    DD m{0.0, 0.0};
    std::int64_t e = 0;

    static ScaledDD zero() { return {}; }
    static ScaledDD from(double x) {
        ScaledDD s;
        if (x == 0.0) return s;
        int ex = 0;
        s.m = DD{std::frexp(x, &ex) * 2.0};  // mantissa in [1,2)
        s.e = ex - 1;
        return s;
    }
    bool is_zero() const { return m.hi == 0.0; }

    void normalize() {
        if (m.hi == 0.0) { e = 0; m.lo = 0.0; return; }
        int ex = 0;
        const double f = std::frexp(m.hi, &ex);  // f in [0.5,1)
        const int shift = ex - 1;                // bring hi into [1,2)
        if (shift != 0) {
            m.hi = std::ldexp(m.hi, -shift);
            m.lo = std::ldexp(m.lo, -shift);
            e += shift;
        }
        (void)f;
    }

    ScaledDD operator*(const ScaledDD& o) const {
        if (is_zero() || o.is_zero()) return zero();
        ScaledDD r;
        r.m = m * o.m;
        r.e = e + o.e;
        r.normalize();
        return r;
    }
    ScaledDD operator*(double x) const {
        if (is_zero() || x == 0.0) return zero();
        ScaledDD r;
        r.m = m * x;
        r.e = e;
        r.normalize();
        return r;
    }
    ScaledDD operator/(double x) const {
        ScaledDD r;
        r.m = m / x;
        r.e = e;
        r.normalize();
        return r;
    }
    // addition of non-negative values only (all series rows are |s(n,k)|/n!)
    ScaledDD operator+(const ScaledDD& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const ScaledDD *big = this, *small = &o;
        if (o.e > e) { big = &o; small = this; }
        const std::int64_t d = big->e - small->e;
        if (d > 140) return *big;  // beyond dd resolution
        ScaledDD r;
        r.m = big->m + DD{std::ldexp(small->m.hi, -static_cast<int>(d)),
                          std::ldexp(small->m.lo, -static_cast<int>(d))};
        r.e = big->e;
        r.normalize();
        return r;
    }

    /// Value as double-double, valid when e is within binary64 exponent range.
    DD to_dd() const {
        return DD{std::ldexp(m.hi, static_cast<int>(e)),
                  std::ldexp(m.lo, static_cast<int>(e))};
    }
    double log_abs() const {
        if (is_zero()) return -1e308;
        return std::log(m.hi) + static_cast<double>(e) * 0.6931471805599453;
    }
};

namespace parallel {

inline constexpr std::int64_t kChunk = 8192;

// Deterministic chunked reductions: every chunk is summed serially in index
// order, chunk subtotals are combined in chunk order. The OpenMP variant
// distributes chunks over threads and is bit-identical to the serial variant
// for any thread count.

template <class Term>
double sum_terms_serial(std::int64_t lo, std::int64_t hi, Term&& term) {
    const std::int64_t n = hi - lo;
    if (n <= 0) return 0.0;
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    KahanSum total;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t b = lo + c * kChunk;
        const std::int64_t e = std::min(hi, b + kChunk);
        KahanSum local;
        for (std::int64_t i = b; i < e; ++i) local.add(term(i));
        total.add(local.value());
    }
    return total.value();
}

template <class Term>
double sum_terms(std::int64_t lo, std::int64_t hi, Term&& term) {
    const std::int64_t n = hi - lo;
    if (n <= 0) return 0.0;
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks < 2) return sum_terms_serial(lo, hi, term);
    std::vector<double> partial(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t b = lo + c * kChunk;
        const std::int64_t e = std::min(hi, b + kChunk);
        KahanSum local;
        for (std::int64_t i = b; i < e; ++i) local.add(term(i));
        partial[static_cast<std::size_t>(c)] = local.value();
    }
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

template <class Term>
DD sum_terms_dd_serial(std::int64_t lo, std::int64_t hi, Term&& term) {
    const std::int64_t n = hi - lo;
    if (n <= 0) return DD{};
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    DD total;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t b = lo + c * kChunk;
        const std::int64_t e = std::min(hi, b + kChunk);
        DD local;
        for (std::int64_t i = b; i < e; ++i) local = local + term(i);
        total = total + local;
    }
    return total;
}

template <class Term>
DD sum_terms_dd(std::int64_t lo, std::int64_t hi, Term&& term) {
    const std::int64_t n = hi - lo;
    if (n <= 0) return DD{};
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks < 2) return sum_terms_dd_serial(lo, hi, term);
    std::vector<DD> partial(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t b = lo + c * kChunk;
        const std::int64_t e = std::min(hi, b + kChunk);
        DD local;
        for (std::int64_t i = b; i < e; ++i) local = local + term(i);
        partial[static_cast<std::size_t>(c)] = local;
    }
    DD total;
    for (const DD& p : partial) total = total + p;
    return total;
}

}  // namespace parallel
}  // namespace stieltjes

#endif
