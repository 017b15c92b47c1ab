#include "stieltjes/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "stieltjes/summation.hpp"

namespace stieltjes {

const GaussRule& gauss_legendre(int points) {
    if (points < 2) throw std::invalid_argument("gauss rule needs >= 2 points");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(points);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.x.resize(static_cast<std::size_t>(points));
    r.w.resize(static_cast<std::size_t>(points));
    const int n = points;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev estimate; converges in a handful of steps.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // one clean-up pass for the weight at the converged node
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.x[static_cast<std::size_t>(i)] = -x;
        r.w[static_cast<std::size_t>(i)] = w;
        r.x[static_cast<std::size_t>(n - 1 - i)] = x;
        r.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(points, std::move(r)).first->second;
}

namespace {

std::vector<double> base_panels(double decay, const QuadratureSpec& spec) {
    // Truncate where exp(-decay*y) < tol/100; first panel spans half a decay
    // length, widths then grow geometrically.
    const double Y = -std::log(spec.tol / 100.0) / decay;
    std::vector<double> b{0.0};
    double w = 0.5 / decay;
    while (b.back() < Y) {
        b.push_back(b.back() + w);
        w *= spec.panel_growth;
    }
    return b;
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double decay, const QuadratureSpec& spec) {
    if (!(decay > 0.0)) throw std::invalid_argument("decay rate must be positive");
    if (!(spec.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto bounds = base_panels(decay, spec);
    const GaussRule& rule = gauss_legendre(spec.points_per_panel);
    const int base = static_cast<int>(bounds.size()) - 1;

    QuadratureResult res;
    double prev = 0.0;
    bool have_prev = false;
    for (int level = 0;; ++level) {
        const int splits = 1 << level;
        if (base * splits > spec.max_panels) {
            res.converged = false;
            return res;  // last completed level already stored
        }
        KahanSum total;
        for (int p = 0; p < base; ++p) {
            const double lo = bounds[static_cast<std::size_t>(p)];
            const double hi = bounds[static_cast<std::size_t>(p) + 1];
            const double h = (hi - lo) / splits;
            for (int s = 0; s < splits; ++s) {
                const double mid = lo + (s + 0.5) * h;
                const double half = 0.5 * h;
                for (std::size_t j = 0; j < rule.x.size(); ++j)
                    total.add(half * rule.w[j] * f(mid + half * rule.x[j]));
            }
        }
        res.nodes_used += static_cast<std::int64_t>(base) * splits * spec.points_per_panel;
        const double cur = total.value();
        if (have_prev) {
            res.err_estimate = std::abs(cur - prev);
            res.value = cur;
            if (res.err_estimate <= spec.tol) {
                res.converged = true;
                return res;
            }
        } else {
            res.value = cur;
            have_prev = true;
        }
        prev = cur;
    }
}

QuadratureResult integrate_boltzmann_tail(const std::function<double(double)>& f,
                                          const QuadratureSpec& spec) {
    return integrate_semi_infinite(f, 2.0 * std::numbers::pi, spec);
}

QuadratureResult integrate_unit_log(const std::function<double(double, double)>& g,
                                    const QuadratureSpec& spec) {
    auto image = [&g](double v) {
        const double ev = std::exp(-v);
        const double u = -std::expm1(-v);
        return g(u, v) * ev;
    };
    return integrate_semi_infinite(image, 1.0, spec);
}

}  // namespace stieltjes
