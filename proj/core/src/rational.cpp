#include <automorph/rational.hpp>

#include <string>

namespace automorph
{

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    // mpz_class has no int64_t constructor on every platform; go through long.
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

namespace
{

Integer parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
    for (const char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer &z)
{
    return z.get_str(10);
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str(10);
    }
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    if (den <= 0) {
        throw std::invalid_argument("floor_div requires a positive denominator");
    }
    std::int64_t q = num / den;
    if ((num % den) != 0 && num < 0) {
        --q;
    }
    return q;
}

const Rational &ExtendedRational::value() const
{
    if (!value_) {
        throw std::logic_error("value() on the point at infinity");
    }
    return *value_;
}

ExtendedRational ExtendedRational::mobius(const Rational &p, const Rational &q, const Rational &r,
                                          const Rational &s) const
{
    if (p * s - q * r == 0) {
        throw std::invalid_argument("degenerate Moebius map (ps - qr = 0)");
    }
    if (is_infinite()) {
        if (r == 0) {
            return infinity();
        }
        return ExtendedRational(Rational(p / r));
    }
    const Rational den = r * *value_ + s;
    if (den == 0) {
        return infinity();
    }
    return ExtendedRational(Rational((p * *value_ + q) / den));
}

std::string to_string(const ExtendedRational &r)
{
    return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

} // namespace automorph
