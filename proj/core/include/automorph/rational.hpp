#ifndef AUTOMORPH_RATIONAL_HPP
#define AUTOMORPH_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace automorph
{

// Exact rationals are GMP rationals. Every arithmetic result of mpq_class is
// canonical (lowest terms, positive denominator); values built from a raw
// numerator/denominator pair must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

// Thrown whenever a truncated computation cannot certify its result.
class PrecisionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer &num, const Integer &den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "p", "p/q" or "-p/q" (decimal); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &r);
std::string to_string(const Integer &z);

bool is_integer(const Rational &r);

// floor(num / den) for den > 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

// A point of the projective line over Q: a rational or the symbol infinity.
class ExtendedRational
{
public:
    ExtendedRational() = default;
    ExtendedRational(Rational value) : value_(std::move(value)) {}
    ExtendedRational(std::int64_t value) : value_(Rational(value)) {}

    static ExtendedRational infinity()
    {
        ExtendedRational r;
        r.value_.reset();
        return r;
    }

    [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
    [[nodiscard]] bool is_finite() const { return value_.has_value(); }

    // Precondition: is_finite().
    [[nodiscard]] const Rational &value() const;

    // Image under t -> (p t + q) / (r t + s) with ps - qr != 0, treating
    // infinity projectively.
    [[nodiscard]] ExtendedRational mobius(const Rational &p, const Rational &q, const Rational &r,
                                          const Rational &s) const;

    friend bool operator==(const ExtendedRational &a, const ExtendedRational &b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() && b.is_infinite();
        }
        return *a.value_ == *b.value_;
    }

private:
    std::optional<Rational> value_ = Rational(0);
};

// "inf" or the rational in p/q form.
std::string to_string(const ExtendedRational &r);

} // namespace automorph

#endif
