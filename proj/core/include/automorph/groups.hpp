#ifndef AUTOMORPH_GROUPS_HPP
#define AUTOMORPH_GROUPS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <automorph/qseries.hpp>
#include <automorph/rational.hpp>

namespace automorph
{

using Complex = std::complex<double>;

/// An element of PSL(2, R) with exact rational entries.
///
/// The determinant is checked to be exactly 1 and the sign is canonicalized
/// so that the first nonzero entry of (a, b, c, d) is positive; a matrix and
/// its negation therefore construct the same value.
class GroupElement
{
public:
    GroupElement(Rational a, Rational b, Rational c, Rational d);
    GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static GroupElement identity() { return {1, 0, 0, 1}; }

    [[nodiscard]] const Rational &a() const { return a_; }
    [[nodiscard]] const Rational &b() const { return b_; }
    [[nodiscard]] const Rational &c() const { return c_; }
    [[nodiscard]] const Rational &d() const { return d_; }

    [[nodiscard]] Rational trace() const { return a_ + d_; }
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] GroupElement inverse() const;
    [[nodiscard]] std::string to_string() const;

    friend GroupElement operator*(const GroupElement &x, const GroupElement &y);
    friend bool operator==(const GroupElement &, const GroupElement &) = default;

private:
    Rational a_, b_, c_, d_;
};

enum class ElementClass { elliptic, parabolic, hyperbolic };

std::string to_string(ElementClass c);

// By |trace|: < 2 elliptic, = 2 parabolic, > 2 hyperbolic.
ElementClass classify_element(const GroupElement &g);

// (a tau + b) / (c tau + d); throws std::invalid_argument unless Im tau > 0.
Complex moebius_apply(const GroupElement &g, Complex tau);

// c tau + d, the automorphy factor of g at tau.
Complex automorphy_factor(const GroupElement &g, Complex tau);

// Order of a vertex: a finite n >= 2 (elliptic point) or infinity (cusp).
class VertexOrder
{
public:
    static VertexOrder finite(std::int64_t n);
    static VertexOrder cusp() { return VertexOrder(0); }

    [[nodiscard]] bool is_cusp() const { return n_ == 0; }
    // Precondition: !is_cusp().
    [[nodiscard]] std::int64_t value() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const VertexOrder &, const VertexOrder &) = default;

private:
    explicit VertexOrder(std::int64_t n) : n_(n) {}
    std::int64_t n_;
};

enum class VertexKind { elliptic, cusp };

struct Vertex {
    std::string label;
    VertexOrder order;
    // w(tau_i), possibly infinity.
    ExtendedRational value;
    // Elliptic points: the location in H, to double precision.
    std::optional<Complex> location;
    // Cusps: the boundary point they sit at.
    std::optional<ExtendedRational> cusp_point;

    [[nodiscard]] VertexKind kind() const { return order.is_cusp() ? VertexKind::cusp : VertexKind::elliptic; }
    [[nodiscard]] bool is_cusp_at_infinity() const { return cusp_point && cusp_point->is_infinite(); }
};

// A known element of the group together with the points it is tested at.
// Every point tau has Im(tau) >= min_imag and Im(g tau) >= min_imag.
struct SampleElement {
    std::string label;
    GroupElement element;
    std::vector<Complex> test_points;
    double min_imag;
};

struct GroupData {
    std::string name;
    int genus = 0;
    std::vector<Vertex> vertices;
    // Expansion of the Hauptmodul at the cusp infinity in q^(1/h).
    QSeries hauptmodul;
    int cusp_width = 1;
    std::vector<SampleElement> elements;

    [[nodiscard]] std::size_t elliptic_count() const;
    [[nodiscard]] std::size_t cusp_count() const;
    [[nodiscard]] std::vector<VertexOrder> orders() const;
    // Index of the vertex with value infinity, if any.
    [[nodiscard]] std::optional<std::size_t> pole_vertex() const;
    // Checks the structural invariants; throws std::logic_error on violation.
    void validate() const;
};

// Window (in units of 1/h) to which registry Hauptmoduls are expanded.
inline constexpr std::int64_t kRegistryWindow = 160;

// Registered groups: "psl2z", "gamma0_2", "gamma_2". Throws std::out_of_range
// for an unknown name.
const GroupData &registry_get(std::string_view name);
std::vector<std::string> registry_names();

// Replaces the Hauptmodul w by (p w + q) / (r w + s) and maps every vertex
// value through the same map. Throws std::invalid_argument for ps - qr = 0
// and PrecisionError when the new denominator cannot be inverted.
GroupData transform_hauptmodul(const GroupData &gd, const Rational &p, const Rational &q, const Rational &r,
                               const Rational &s);

} // namespace automorph

#endif
