#ifndef AUTOMORPH_ORACLE_HPP
#define AUTOMORPH_ORACLE_HPP

#include <cstdint>
#include <vector>

#include <automorph/qseries.hpp>
#include <automorph/rational.hpp>

// Classical q-expansions computed from divisor sums and eta products. They are
// ground truth for the Hauptmodul construction and never depend on it.
namespace automorph::oracle
{

// sum of d^k over the divisors d of n; n >= 1.
Integer sigma(unsigned k, std::int64_t n);

// 1 + 240 sum sigma_3(n) q^n and 1 - 504 sum sigma_5(n) q^n, window `window`.
QSeries eisenstein4(std::int64_t window);
QSeries eisenstein6(std::int64_t window);

// (E4^3 - E6^2) / 1728 = q - 24 q^2 + 252 q^3 - ...; window >= 2.
QSeries discriminant(std::int64_t window);

struct EtaFactor {
    std::int64_t scale;    // m >= 1 in eta(m tau)
    std::int64_t exponent; // e
};

// prod eta(m tau)^e written in q^(1/base_den). The leading power
// sum(m e)/24 must be a multiple of 1/base_den.
struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;
    int base_den = 1;

    // Leading q-power in units of 1/base_den; throws std::invalid_argument when
    // it is not representable.
    [[nodiscard]] std::int64_t leading_exponent() const;
};

QSeries eta_quotient(const EtaQuotientSpec &spec, std::int64_t window);

// E4^3 / Delta = q^-1 + 744 + 196884 q + ...; window >= 0.
QSeries j_invariant(std::int64_t window);

// (eta(tau) / eta(2 tau))^24 = q^-1 - 24 + 276 q - ..., Hauptmodul of Gamma0(2).
QSeries gamma0_2_hauptmodul(std::int64_t window);

// lambda = 16 q^(1/2) - 128 q + 704 q^(3/2) - ..., in base 2; window counts
// half-integer steps. Built as 16 eta(t)^8 eta(4t)^16 / eta(2t)^24 at t = tau/2.
QSeries modular_lambda(std::int64_t window);

} // namespace automorph::oracle

#endif
