#ifndef STIELTJES_TYPES_HPP
#define STIELTJES_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stieltjes {

/// Identifies the generalized Stieltjes constant gamma_k(a), a > 0.
struct StieltjesQuery {
    int k = 0;
    double a = 1.0;
};

enum class Method { hermite, u_integral, stirling, asymptotic, oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::hermite: return "hermite";
        case Method::u_integral: return "u_integral";
        case Method::stirling: return "stirling";
        case Method::asymptotic: return "asymptotic";
        case Method::oracle: return "oracle";
    }
    return "?";
}

/// Numeric result with its error estimate and work diagnostics.
struct ComputedValue {
    double value = 0.0;
    double err_estimate = 0.0;
    Method method = Method::oracle;
    std::int64_t work = 0;  // quadrature nodes or series/sum terms
    bool converged = true;
};

/// Per-evaluation diagnostics for the series representations.
struct SeriesDiagnostics {
    std::int64_t terms_used = 0;
    double last_term = 0.0;       // magnitude of final included term
    std::int64_t truncation_index = 0;  // asymptotic case: index of smallest term
    bool regime_ok = true;        // false when terms never decreased
    double conditioning = 0.0;    // sum of |term|, reported for cancellation-prone cases
};

class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline void require_positive_a(double a) {
    if (!(a > 0.0))
        throw std::domain_error("parameter a must be positive, got " + std::to_string(a));
}

}  // namespace stieltjes

#endif
