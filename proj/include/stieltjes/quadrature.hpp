#ifndef STIELTJES_QUADRATURE_HPP
#define STIELTJES_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace stieltjes {

struct QuadratureSpec {
    int points_per_panel = 32;
    double panel_growth = 2.0;  // geometric panel widths on semi-infinite domains
    double tol = 1e-12;
    int max_panels = 64;
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;  // difference between the last two refinement levels
    std::int64_t nodes_used = 0;
    bool converged = false;
};

/// Gauss-Legendre nodes/weights on [-1,1], cached per order.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int points);

/// Integral over [0, infinity) of an integrand decaying like exp(-decay*y)
/// times polylogarithmic growth.  Panels grow geometrically; every level
/// halves the panel widths; nodes never touch y = 0, but f must still return
/// its finite y->0 limit when called there.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double decay, const QuadratureSpec& spec = {});

/// The paper family damped by 1/(e^{2 pi y} - 1): decay rate fixed at 2*pi.
QuadratureResult integrate_boltzmann_tail(const std::function<double(double)>& f,
                                          const QuadratureSpec& spec = {});

/// Integral over (0,1) of g(u) with a logarithmic endpoint singularity at
/// u = 1.  Applies u = 1 - e^{-v} and integrates the image over [0,inf) with
/// decay rate 1.  g receives (u, v) with v = -ln(1-u) supplied exactly, so
/// integrands built from ln(1-u) keep full precision near u = 1; g(0, 0)
/// must return the finite u->0 limit.
QuadratureResult integrate_unit_log(const std::function<double(double, double)>& g,
                                    const QuadratureSpec& spec = {});

}  // namespace stieltjes

#endif
