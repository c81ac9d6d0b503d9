#include <automorph/groups.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <automorph/oracle.hpp>

namespace automorph
{

GroupElement::GroupElement(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    if (a_ * d_ - b_ * c_ != 1) {
        throw std::invalid_argument("group element must have determinant 1");
    }
    const Rational *lead = nullptr;
    for (const Rational *x : {&a_, &b_, &c_, &d_}) {
        if (*x != 0) {
            lead = x;
            break;
        }
    }
    if (*lead < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : GroupElement(make_rational(a), make_rational(b), make_rational(c), make_rational(d))
{
}

bool GroupElement::is_identity() const
{
    return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
}

GroupElement GroupElement::inverse() const
{
    return {d_, Rational(-b_), Rational(-c_), a_};
}

std::string GroupElement::to_string() const
{
    return "(" + automorph::to_string(a_) + " " + automorph::to_string(b_) + "; " + automorph::to_string(c_) + " "
           + automorph::to_string(d_) + ")";
}

GroupElement operator*(const GroupElement &x, const GroupElement &y)
{
    return {Rational(x.a_ * y.a_ + x.b_ * y.c_), Rational(x.a_ * y.b_ + x.b_ * y.d_),
            Rational(x.c_ * y.a_ + x.d_ * y.c_), Rational(x.c_ * y.b_ + x.d_ * y.d_)};
}

std::string to_string(ElementClass c)
{
    switch (c) {
    case ElementClass::elliptic:
        return "elliptic";
    case ElementClass::parabolic:
        return "parabolic";
    case ElementClass::hyperbolic:
        return "hyperbolic";
    }
    return "unknown";
}

ElementClass classify_element(const GroupElement &g)
{
    const Rational t = abs(g.trace());
    if (t < 2) {
        return ElementClass::elliptic;
    }
    if (t == 2) {
        return ElementClass::parabolic;
    }
    return ElementClass::hyperbolic;
}

Complex automorphy_factor(const GroupElement &g, Complex tau)
{
    return g.c().get_d() * tau + g.d().get_d();
}

Complex moebius_apply(const GroupElement &g, Complex tau)
{
    if (!(tau.imag() > 0)) {
        throw std::invalid_argument("moebius_apply: tau must lie in the upper half-plane");
    }
    if (g.c() == 0) {
        // Affine map; keeps the identity and translations bit-exact.
        const Rational scale = g.a() / g.d();
        const Rational shift = g.b() / g.d();
        return scale.get_d() * tau + shift.get_d();
    }
    const Complex num = g.a().get_d() * tau + g.b().get_d();
    return num / automorphy_factor(g, tau);
}

VertexOrder VertexOrder::finite(std::int64_t n)
{
    if (n < 2) {
        throw std::invalid_argument("vertex order must be at least 2");
    }
    return VertexOrder(n);
}

std::int64_t VertexOrder::value() const
{
    if (is_cusp()) {
        throw std::logic_error("cusp has infinite order");
    }
    return n_;
}

std::string VertexOrder::to_string() const
{
    return is_cusp() ? std::string("inf") : std::to_string(n_);
}

std::size_t GroupData::elliptic_count() const
{
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [](const Vertex &v) { return v.kind() == VertexKind::elliptic; }));
}

std::size_t GroupData::cusp_count() const
{
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [](const Vertex &v) { return v.kind() == VertexKind::cusp; }));
}

std::vector<VertexOrder> GroupData::orders() const
{
    std::vector<VertexOrder> out;
    out.reserve(vertices.size());
    for (const auto &v : vertices) {
        out.push_back(v.order);
    }
    return out;
}

std::optional<std::size_t> GroupData::pole_vertex() const
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].value.is_infinite()) {
            return i;
        }
    }
    return std::nullopt;
}

void GroupData::validate() const
{
    if (elliptic_count() + cusp_count() != vertices.size()) {
        throw std::logic_error(name + ": m + l != r");
    }
    const auto poles = std::count_if(vertices.begin(), vertices.end(), [](const Vertex &v) { return v.value.is_infinite(); });
    if (poles > 1) {
        throw std::logic_error(name + ": more than one vertex has value infinity");
    }
    for (const auto &v : vertices) {
        if (v.kind() == VertexKind::cusp && !v.cusp_point) {
            throw std::logic_error(name + ": cusp " + v.label + " has no boundary point");
        }
    }
    if (hauptmodul.base_den() != cusp_width) {
        throw std::logic_error(name + ": Hauptmodul base differs from the cusp width");
    }
    const auto pole = pole_vertex();
    const bool pole_at_infinity = pole && vertices[*pole].is_cusp_at_infinity();
    const auto ord = hauptmodul.order();
    if (pole_at_infinity != (ord < 0)) {
        throw std::logic_error(name + ": Hauptmodul order at infinity contradicts the vertex values");
    }
    if (elements.empty()) {
        throw std::logic_error(name + ": no sample elements");
    }
}

namespace
{

using Poly = std::vector<Rational>; // low degree first

void poly_trim(Poly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly poly_mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    poly_trim(out);
    return out;
}

Poly poly_rem(Poly a, const Poly &b)
{
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const auto shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b)
{
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_derivative(const Poly &p)
{
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i) {
        out.push_back(p[i] * static_cast<long>(i));
    }
    poly_trim(out);
    return out;
}

Poly poly_quotient(Poly a, const Poly &b)
{
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const auto shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
        }
        a.pop_back();
        poly_trim(a);
    }
    if (!a.empty()) {
        throw std::logic_error("polynomial division leaves a remainder");
    }
    return q;
}

// The unique simple root of a cubic of shape (t - x)(t - y)^2 with x != y.
Rational simple_root(const Poly &p)
{
    const auto repeated = poly_gcd(p, poly_derivative(p));
    const auto linear = poly_quotient(poly_quotient(p, repeated), repeated);
    if (linear.size() != 2) {
        throw std::logic_error("expected a cubic with one simple and one double root");
    }
    return -linear[0] / linear[1];
}

// j = (t + 256)^3 / t^2 on Gamma0(2), and j - 1728 = (t + 64)(t - 512)^2 / t^2.
// Over j = 1728 the double root is the unramified-stabilizer point, the
// simple root is the order-2 elliptic point.
Rational gamma0_2_elliptic_value()
{
    const Poly linear{Rational(256), Rational(1)};
    Poly p = poly_mul(poly_mul(linear, linear), linear);
    p[2] -= 1728;
    return simple_root(p);
}

const Complex kI{0.0, 1.0};
const Complex kRho{-0.5, std::numbers::sqrt3 / 2.0};

GroupData make_psl2z()
{
    GroupData g;
    g.name = "psl2z";
    g.genus = 0;
    g.cusp_width = 1;
    g.hauptmodul = oracle::j_invariant(kRegistryWindow);
    // Classical values j(i) = 1728 and j(rho) = 0.
    g.vertices = {
        {"i", VertexOrder::finite(2), ExtendedRational(1728), kI, std::nullopt},
        {"rho", VertexOrder::finite(3), ExtendedRational(0), kRho, std::nullopt},
        {"inf", VertexOrder::cusp(), ExtendedRational::infinity(), std::nullopt, ExtendedRational::infinity()},
    };
    g.elements = {
        {"T", GroupElement(1, 1, 0, 1), {{0.1, 1.2}, {0.3, 1.3}, {-0.45, 0.85}}, 0.8},
        {"S", GroupElement(0, -1, 1, 0), {{0.2, 1.0}, {-0.3, 0.9}, {0.1, 1.1}}, 0.8},
        {"ST", GroupElement(0, -1, 1, 1), {{-0.5, 0.9}, {-0.7, 1.0}}, 0.8},
    };
    return g;
}

// Elements with |c| = 2 satisfy Im(tau) Im(g tau) <= 1/4, so their test
// points sit near Im = 1/2 rather than above 0.8.
constexpr double kLevelTwoMinImag = 0.45;

GroupData make_gamma0_2()
{
    GroupData g;
    g.name = "gamma0_2";
    g.genus = 0;
    g.cusp_width = 1;
    g.hauptmodul = oracle::gamma0_2_hauptmodul(kRegistryWindow);
    g.vertices = {
        {"(1+i)/2", VertexOrder::finite(2), ExtendedRational(gamma0_2_elliptic_value()), Complex{0.5, 0.5},
         std::nullopt},
        {"0", VertexOrder::cusp(), ExtendedRational(0), std::nullopt, ExtendedRational(0)},
        {"inf", VertexOrder::cusp(), ExtendedRational::infinity(), std::nullopt, ExtendedRational::infinity()},
    };
    g.elements = {
        {"T", GroupElement(1, 1, 0, 1), {{0.25, 0.9}, {-0.4, 1.1}}, 0.8},
        {"U2", GroupElement(1, 0, 2, 1), {{-0.48, 0.52}, {-0.55, 0.5}}, kLevelTwoMinImag},
        {"E", GroupElement(1, -1, 2, -1), {{0.45, 0.52}, {0.56, 0.5}}, kLevelTwoMinImag},
    };
    return g;
}

GroupData make_gamma_2()
{
    GroupData g;
    g.name = "gamma_2";
    g.genus = 0;
    g.cusp_width = 2;
    g.hauptmodul = oracle::modular_lambda(kRegistryWindow);
    g.vertices = {
        {"inf", VertexOrder::cusp(), ExtendedRational(0), std::nullopt, ExtendedRational::infinity()},
        {"0", VertexOrder::cusp(), ExtendedRational(1), std::nullopt, ExtendedRational(0)},
        {"1", VertexOrder::cusp(), ExtendedRational::infinity(), std::nullopt, ExtendedRational(1)},
    };
    g.elements = {
        {"T2", GroupElement(1, 2, 0, 1), {{0.3, 0.9}, {-0.6, 1.2}}, 0.8},
        {"U2", GroupElement(1, 0, 2, 1), {{-0.48, 0.52}, {-0.55, 0.5}}, kLevelTwoMinImag},
        {"T2U2", GroupElement(5, 2, 2, 1), {{-0.48, 0.52}, {-0.55, 0.5}}, kLevelTwoMinImag},
    };
    return g;
}

const std::map<std::string, GroupData, std::less<>> &registry()
{
    static const std::map<std::string, GroupData, std::less<>> groups = [] {
        std::map<std::string, GroupData, std::less<>> m;
        for (auto g : {make_psl2z(), make_gamma0_2(), make_gamma_2()}) {
            g.validate();
            auto name = g.name;
            m.emplace(std::move(name), std::move(g));
        }
        return m;
    }();
    return groups;
}

} // namespace

const GroupData &registry_get(std::string_view name)
{
    const auto &reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) {
        throw std::out_of_range("unknown group '" + std::string(name) + "'");
    }
    return it->second;
}

std::vector<std::string> registry_names()
{
    // Fixed presentation order rather than map order.
    return {"psl2z", "gamma0_2", "gamma_2"};
}

GroupData transform_hauptmodul(const GroupData &gd, const Rational &p, const Rational &q, const Rational &r,
                               const Rational &s)
{
    if (p * s - q * r == 0) {
        throw std::invalid_argument("transform_hauptmodul: ps - qr must be nonzero");
    }
    if (r == 0 && q == 0 && p == s) {
        return gd;
    }
    const int h = gd.hauptmodul.base_den();
    const auto &w = gd.hauptmodul;

    GroupData out = gd;
    if (r == 0) {
        // Affine map: no division, so the window is kept.
        out.hauptmodul = add(scale(w, p / s), QSeries::constant(q / s, kExactPrec, h));
    } else {
        const auto numer = add(scale(w, p), QSeries::constant(q, kExactPrec, h));
        const auto denom = add(scale(w, r), QSeries::constant(s, kExactPrec, h));
        out.hauptmodul = div(numer, denom);
    }
    for (auto &v : out.vertices) {
        v.value = v.value.mobius(p, q, r, s);
    }
    std::ostringstream name;
    name << gd.name << "|(" << to_string(p) << "*w+" << to_string(q) << ")/(" << to_string(r) << "*w+"
         << to_string(s) << ")";
    out.name = name.str();
    out.validate();
    return out;
}

} // namespace automorph
