#include <automorph/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace automorph::numeric
{

void EvalConfig::validate() const
{
    if (!(min_imag > 0) || !(tolerance > 0) || terms_used < 1) {
        throw std::invalid_argument("EvalConfig: min_imag, tolerance and terms_used must be positive");
    }
}

namespace
{

void require_admissible(Complex tau, const EvalConfig &cfg)
{
    if (tau.imag() < cfg.min_imag) {
        throw std::domain_error("series accuracy not guaranteed: Im(tau) = " + std::to_string(tau.imag())
                                + " < " + std::to_string(cfg.min_imag));
    }
}

Complex int_power(Complex z, int k)
{
    Complex out{1.0, 0.0};
    for (int i = 0; i < k; ++i) {
        out *= z;
    }
    return out;
}

double relative(Complex lhs, Complex rhs, Complex reference)
{
    return std::abs(lhs - rhs) / std::max(std::abs(reference), kResidualFloor);
}

} // namespace

Complex eval_qseries(const QSeries &f, Complex tau, const EvalConfig &cfg)
{
    cfg.validate();
    require_admissible(tau, cfg);
    if (f.prec() < cfg.terms_used) {
        throw PrecisionError("eval_qseries: window " + std::to_string(f.prec()) + " is shorter than "
                             + std::to_string(cfg.terms_used) + " terms");
    }
    const Complex step = 2.0 * std::numbers::pi * Complex{0.0, 1.0} * tau / static_cast<double>(f.base_den());
    Complex sum{0.0, 0.0};
    for (const auto &t : f.terms()) {
        if (t.exponent >= cfg.terms_used) {
            break;
        }
        sum += t.coefficient.get_d() * std::exp(step * static_cast<double>(t.exponent));
    }
    return sum;
}

double automorphy_residual(const Basis &basis, std::int64_t j, const GroupElement &g, Complex tau,
                           const EvalConfig &cfg)
{
    if (j < 0 || j >= static_cast<std::int64_t>(basis.forms.size())) {
        throw std::invalid_argument("automorphy_residual: no form h_" + std::to_string(j));
    }
    const Complex image = moebius_apply(g, tau);
    require_admissible(tau, cfg);
    require_admissible(image, cfg);
    const auto &form = basis.forms[static_cast<std::size_t>(j)];
    const Complex at_tau = eval_qseries(form, tau, cfg);
    const Complex at_image = eval_qseries(form, image, cfg);
    return relative(at_image, int_power(automorphy_factor(g, tau), basis.weight.k) * at_tau, at_tau);
}

double automorphy_residual(const GroupData &gd, int k, std::int64_t j, const GroupElement &g, Complex tau,
                           const EvalConfig &cfg)
{
    return automorphy_residual(build_basis(gd, k, cfg.terms_used), j, g, tau, cfg);
}

double hauptmodul_invariance_residual(const GroupData &gd, const GroupElement &g, Complex tau,
                                      const EvalConfig &cfg)
{
    const Complex image = moebius_apply(g, tau);
    require_admissible(tau, cfg);
    require_admissible(image, cfg);
    const Complex at_tau = eval_qseries(gd.hauptmodul, tau, cfg);
    return relative(eval_qseries(gd.hauptmodul, image, cfg), at_tau, at_tau);
}

double derivative_cocycle_residual(const GroupData &gd, const GroupElement &g, Complex tau, double exponent,
                                   const EvalConfig &cfg)
{
    const Complex image = moebius_apply(g, tau);
    require_admissible(tau, cfg);
    require_admissible(image, cfg);
    const auto dw = theta(gd.hauptmodul);
    const Complex at_tau = eval_qseries(dw, tau, cfg);
    const Complex factor = std::pow(automorphy_factor(g, tau), exponent);
    return relative(eval_qseries(dw, image, cfg), factor * at_tau, at_tau);
}

std::vector<double> default_slope_radii()
{
    std::vector<double> radii;
    for (int i = 0; i < 4; ++i) {
        radii.push_back(std::pow(10.0, -3.0 + i / 3.0));
    }
    return radii;
}

double vanishing_slope(const Basis &basis, std::int64_t j, std::size_t vertex, std::span<const double> radii,
                       const EvalConfig &cfg)
{
    if (vertex >= basis.group.vertices.size() || !basis.group.vertices[vertex].location) {
        throw std::invalid_argument("vanishing_slope: vertex has no stored location in H");
    }
    if (j < 0 || j >= static_cast<std::int64_t>(basis.forms.size())) {
        throw std::invalid_argument("vanishing_slope: no form h_" + std::to_string(j));
    }
    if (radii.size() < 2) {
        throw std::invalid_argument("vanishing_slope: need at least two radii");
    }
    const Complex centre = *basis.group.vertices[vertex].location;
    const auto &form = basis.forms[static_cast<std::size_t>(j)];
    constexpr int samples = 32;

    std::vector<double> xs;
    std::vector<double> ys;
    for (const double rho : radii) {
        double peak = 0.0;
        for (int s = 0; s < samples; ++s) {
            const double angle = 2.0 * std::numbers::pi * s / samples;
            const Complex tau = centre + std::polar(rho, angle);
            peak = std::max(peak, std::abs(eval_qseries(form, tau, cfg)));
        }
        xs.push_back(std::log(rho));
        ys.push_back(std::log(std::max(peak, kResidualFloor)));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

double vanishing_slope(const GroupData &gd, int k, std::int64_t j, std::size_t vertex,
                       std::span<const double> radii, const EvalConfig &cfg)
{
    return vanishing_slope(build_basis(gd, k, cfg.terms_used), j, vertex, radii, cfg);
}

} // namespace automorph::numeric
