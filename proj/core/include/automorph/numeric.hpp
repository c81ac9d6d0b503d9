#ifndef AUTOMORPH_NUMERIC_HPP
#define AUTOMORPH_NUMERIC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <automorph/basis.hpp>
#include <automorph/groups.hpp>
#include <automorph/qseries.hpp>

// Double-precision evaluation of q-expansions on the upper half-plane.
namespace automorph::numeric
{

struct EvalConfig {
    // Exponents e < terms_used (units of 1/h) are summed.
    std::int64_t terms_used = 80;
    // Points with smaller imaginary part are rejected.
    double min_imag = 0.8;
    double tolerance = 1e-8;

    void validate() const;
};

// Guard against division by near-zero values in relative residuals.
inline constexpr double kResidualFloor = 1e-30;

// sum c_e exp(2 pi i tau e / h) over stored e < terms_used. Throws
// PrecisionError when the window is shorter than terms_used and
// std::domain_error ("series accuracy not guaranteed") below min_imag.
Complex eval_qseries(const QSeries &f, Complex tau, const EvalConfig &cfg);

// |h_j(g tau) - (c tau + d)^k h_j(tau)| / max(|h_j(tau)|, eps).
double automorphy_residual(const Basis &basis, std::int64_t j, const GroupElement &g, Complex tau,
                           const EvalConfig &cfg);
double automorphy_residual(const GroupData &gd, int k, std::int64_t j, const GroupElement &g, Complex tau,
                           const EvalConfig &cfg);

// |w(g tau) - w(tau)| / max(|w(tau)|, eps).
double hauptmodul_invariance_residual(const GroupData &gd, const GroupElement &g, Complex tau,
                                      const EvalConfig &cfg);

// |w'(g tau) - (c tau + d)^p w'(tau)| / max(|w'(tau)|, eps) for a real
// exponent p (principal branch). The chain rule gives p = 2.
double derivative_cocycle_residual(const GroupData &gd, const GroupElement &g, Complex tau, double exponent,
                                   const EvalConfig &cfg);

// Four radii logarithmically spaced in [1e-3, 1e-2].
std::vector<double> default_slope_radii();

// Least-squares slope of log max_{|tau - tau_i| = rho} |h_j(tau)| against
// log rho: an estimate of the zero order of h_j at the vertex.
double vanishing_slope(const Basis &basis, std::int64_t j, std::size_t vertex, std::span<const double> radii,
                       const EvalConfig &cfg);
double vanishing_slope(const GroupData &gd, int k, std::int64_t j, std::size_t vertex,
                       std::span<const double> radii, const EvalConfig &cfg);

} // namespace automorph::numeric

#endif
