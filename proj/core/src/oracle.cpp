#include <automorph/oracle.hpp>

#include <stdexcept>

namespace automorph::oracle
{

Integer sigma(unsigned k, std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("sigma: n must be positive");
    }
    Integer total = 0;
    Integer term;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += term;
        const std::int64_t other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(other), k);
            total += term;
        }
    }
    return total;
}

namespace
{

QSeries eisenstein(unsigned k, long factor, std::int64_t window)
{
    if (window < 1) {
        throw std::invalid_argument("Eisenstein series need a window of at least 1");
    }
    std::vector<Rational> c(static_cast<std::size_t>(window));
    c[0] = 1;
    for (std::int64_t n = 1; n < window; ++n) {
        c[static_cast<std::size_t>(n)] = Rational(Integer(factor) * sigma(k, n));
    }
    return QSeries::from_dense(1, 0, std::move(c), window);
}

} // namespace

QSeries eisenstein4(std::int64_t window)
{
    return eisenstein(3, 240, window);
}

QSeries eisenstein6(std::int64_t window)
{
    return eisenstein(5, -504, window);
}

QSeries discriminant(std::int64_t window)
{
    if (window < 2) {
        throw std::invalid_argument("discriminant needs a window of at least 2");
    }
    const auto e4 = eisenstein4(window);
    const auto e6 = eisenstein6(window);
    return scale(sub(pow(e4, 3), pow(e6, 2)), make_rational(1, 1728));
}

std::int64_t EtaQuotientSpec::leading_exponent() const
{
    if (base_den < 1) {
        throw std::invalid_argument("eta quotient: base_den must be positive");
    }
    std::int64_t weighted = 0;
    for (const auto &f : factors) {
        if (f.scale < 1) {
            throw std::invalid_argument("eta quotient: scales must be positive");
        }
        weighted += f.scale * f.exponent;
    }
    if ((weighted * base_den) % 24 != 0) {
        throw std::invalid_argument("eta quotient: leading power " + std::to_string(weighted)
                                    + "/24 is not a multiple of 1/" + std::to_string(base_den));
    }
    return weighted * base_den / 24;
}

QSeries eta_quotient(const EtaQuotientSpec &spec, std::int64_t window)
{
    const auto lead = spec.leading_exponent();
    const auto h = static_cast<std::int64_t>(spec.base_den);
    const auto span = window - lead;
    if (span <= 0) {
        return QSeries::zero(spec.base_den, window);
    }
    const auto n = static_cast<std::size_t>(span);
    std::vector<Integer> c(n);
    c[0] = 1;
    // Each (1 - x^s)^e is applied one sparse unit factor at a time: multiplying
    // by (1 - x^s) or by 1/(1 - x^s) is a single in-place pass.
    for (const auto &f : spec.factors) {
        for (std::int64_t k = 1; f.scale * k * h < span; ++k) {
            const auto s = static_cast<std::size_t>(f.scale * k * h);
            if (f.exponent > 0) {
                for (std::int64_t rep = 0; rep < f.exponent; ++rep) {
                    for (std::size_t t = n - 1; t >= s; --t) {
                        c[t] -= c[t - s];
                    }
                }
            } else {
                for (std::int64_t rep = 0; rep < -f.exponent; ++rep) {
                    for (std::size_t t = s; t < n; ++t) {
                        c[t] += c[t - s];
                    }
                }
            }
        }
    }
    std::vector<Rational> coeffs(n);
    for (std::size_t t = 0; t < n; ++t) {
        coeffs[t] = Rational(c[t]);
    }
    return QSeries::from_dense(spec.base_den, lead, std::move(coeffs), window);
}

QSeries j_invariant(std::int64_t window)
{
    if (window < 0) {
        throw std::invalid_argument("j_invariant: window must be non-negative");
    }
    // E4^3 / Delta loses two steps of window: one for ord Delta = 1, one for
    // the quotient's leading power q^-1.
    const auto w = window + 2;
    const auto e4 = eisenstein4(w);
    const auto delta = discriminant(w);
    return div(pow(e4, 3), delta).truncated(window);
}

QSeries gamma0_2_hauptmodul(std::int64_t window)
{
    return eta_quotient(EtaQuotientSpec{{{1, 24}, {2, -24}}, 1}, window);
}

QSeries modular_lambda(std::int64_t window)
{
    // lambda(2t) = 16 eta(t)^8 eta(4t)^16 / eta(2t)^24; substituting
    // q -> q^(1/2) gives lambda(tau) in base 2 with the same window count.
    const auto base = eta_quotient(EtaQuotientSpec{{{1, 8}, {4, 16}, {2, -24}}, 1}, window);
    return substitute_root(scale(base, Rational(16)), 2);
}

} // namespace automorph::oracle
