#ifndef AUTOMORPH_QSERIES_HPP
#define AUTOMORPH_QSERIES_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <automorph/rational.hpp>

namespace automorph
{

// Precision value of a series known to all orders (polynomials, constants).
inline constexpr std::int64_t kExactPrec = std::numeric_limits<std::int64_t>::max();

struct SeriesTerm {
    std::int64_t exponent;
    Rational coefficient;
};

/// Truncated Laurent/Puiseux series in the variable q^(1/h) with exact
/// rational coefficients.
///
/// A series is the tuple (h, terms, prec): the term with exponent e stands
/// for c_e q^(e/h), every exponent below prec is fully determined and every
/// exponent at or above prec is unknown. The representation is canonical:
/// coefficients are kept densely between the first and last nonzero term, so
/// two series with the same value, base and window compare equal.
///
/// Values are immutable once built; all operations are free functions that
/// return new series.
class QSeries
{
public:
    // The zero series in base 1 with window 0 (nothing known).
    QSeries() = default;

    // Throws std::invalid_argument when some exponent is >= prec or base_den < 1.
    // Repeated exponents are summed and zero coefficients dropped.
    static QSeries make(int base_den, std::span<const SeriesTerm> terms, std::int64_t prec);
    static QSeries make(int base_den, std::initializer_list<SeriesTerm> terms, std::int64_t prec)
    {
        return make(base_den, std::span<const SeriesTerm>(terms.begin(), terms.size()), prec);
    }

    static QSeries zero(int base_den, std::int64_t prec);
    static QSeries constant(const Rational &c, std::int64_t prec = kExactPrec, int base_den = 1);
    static QSeries monomial(const Rational &c, std::int64_t exponent, std::int64_t prec = kExactPrec,
                            int base_den = 1);

    // Dense constructor: coefficients[i] multiplies q^((first_exponent + i)/h).
    static QSeries from_dense(int base_den, std::int64_t first_exponent, std::vector<Rational> coefficients,
                              std::int64_t prec);

    [[nodiscard]] int base_den() const { return base_den_; }
    [[nodiscard]] std::int64_t prec() const { return prec_; }
    [[nodiscard]] bool is_exact() const { return prec_ == kExactPrec; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    // Least stored exponent; throws PrecisionError("order undetermined") for
    // a series that is zero on its whole window.
    [[nodiscard]] std::int64_t order() const;
    [[nodiscard]] const Rational &leading_coefficient() const;
    // Largest stored exponent; same error as order().
    [[nodiscard]] std::int64_t last_exponent() const;

    // Coefficient of q^(e/h); throws PrecisionError when e >= prec.
    [[nodiscard]] Rational coefficient(std::int64_t e) const;

    [[nodiscard]] std::vector<SeriesTerm> terms() const;
    [[nodiscard]] std::size_t term_count() const;

    // Drops everything at or above min(prec, new_prec).
    [[nodiscard]] QSeries truncated(std::int64_t new_prec) const;

    // The same series written in q^(1/new_base_den); new_base_den must be a
    // multiple of base_den.
    [[nodiscard]] QSeries rescaled(int new_base_den) const;

    // Human-readable form, e.g. "q^-1 + 744 + 196884*q + O(q^2)".
    [[nodiscard]] std::string to_string(std::size_t max_terms = 8) const;

    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    void trim();

    int base_den_ = 1;
    std::int64_t first_ = 0;
    std::vector<Rational> coeffs_;
    std::int64_t prec_ = 0;
};

// Least stored exponent (see QSeries::order).
std::int64_t order(const QSeries &f);

QSeries add(const QSeries &f, const QSeries &g);
QSeries sub(const QSeries &f, const QSeries &g);
QSeries negate(const QSeries &f);
QSeries scale(const QSeries &f, const Rational &c);

// Cauchy product; prec = min(prec_f + ord g, prec_g + ord f), where the
// order of a zero series is its window.
QSeries mul(const QSeries &f, const QSeries &g);

// Long division after factoring out the leading power of g. Throws
// PrecisionError("insufficient precision") when g has no leading term in
// its window.
QSeries div(const QSeries &f, const QSeries &g);

// Binary powering; negative exponents go through div.
QSeries pow(const QSeries &f, std::int64_t m);

// q d/dq: c q^(e/h) -> (e/h) c q^(e/h).
QSeries theta(const QSeries &f);

QSeries normalize_monic(const QSeries &f);

// f(q^(1/m)): same coefficients, base h*m.
QSeries substitute_root(const QSeries &f, int m);

// True iff the coefficients agree for every exponent below B, measured in
// units of 1/lcm(h_f, h_g). Throws PrecisionError if either window is short.
bool equal_to_prec(const QSeries &f, const QSeries &g, std::int64_t bound);

// Relative precision prec - order (kExactPrec for exact series).
std::int64_t relative_prec(const QSeries &f);

inline QSeries operator+(const QSeries &f, const QSeries &g) { return add(f, g); }
inline QSeries operator-(const QSeries &f, const QSeries &g) { return sub(f, g); }
inline QSeries operator-(const QSeries &f) { return negate(f); }
inline QSeries operator*(const QSeries &f, const QSeries &g) { return mul(f, g); }
inline QSeries operator/(const QSeries &f, const QSeries &g) { return div(f, g); }

} // namespace automorph

#endif
