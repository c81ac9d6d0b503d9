#ifndef AUTOMORPH_BASIS_HPP
#define AUTOMORPH_BASIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <automorph/groups.hpp>
#include <automorph/qseries.hpp>

namespace automorph
{

/// Dimension of the space of weight-k automorphic forms for a group of
/// genus g with the given vertex orders:
///
///   k < 0: 0,   k = 0: 1,   k = 2: g,
///   k >= 4: (g - 1)(k - 1) + sum_i floor((k/2)(1 - 1/n_i)),
///
/// where a cusp contributes the limit k/2. Throws std::invalid_argument for
/// odd k ("unsupported weight parity").
std::int64_t dim_Ak(int genus, std::span<const VertexOrder> orders, int k);

// floor((k/2)(1 - 1/n)) for finite n, k/2 for a cusp.
std::int64_t weight_exponent(const VertexOrder &order, int k);

struct WeightData {
    int k = 0;
    // a_i, aligned with the group's vertices.
    std::vector<std::int64_t> exponents;
    // 1 - k + sum a_i; may be <= 0.
    std::int64_t d = 0;
};

// Requires genus 0, even k >= 4.
WeightData weight_exponents(const GroupData &gd, int k);

struct Basis {
    GroupData group;
    WeightData weight;
    // h_0 .. h_{d-1}, each scaled to leading coefficient 1 and truncated to window.
    std::vector<QSeries> forms;
    std::int64_t window = 0;
    // Set when no forms are produced (d <= 0).
    std::string diagnostic;
};

/// Builds h_j = (w')^(k/2) w^j / prod_{w_i finite} (w - w_i)^(a_i) for
/// j = 0 .. d-1 from the group's Hauptmodul w.
///
/// The derivative w' is taken as theta = q d/dq, which rescales each h_j by
/// the constant (2 pi i / h)^(k/2); the forms are then normalized to be
/// monic at the cusp. Vertices with w_i = infinity are left out of the
/// product. Throws PrecisionError naming the achievable window when the
/// Hauptmodul expansion is too short for `window`.
Basis build_basis(const GroupData &gd, int k, std::int64_t window);

enum class LedgerCase {
    // w finite at the vertex: zero order of h_j there.
    finite_value,
    // w has its pole at the vertex: pole order of h_j there.
    pole_at_vertex,
    // w has its pole at a point of H that is not a vertex.
    pole_off_vertices,
};

std::string to_string(LedgerCase c);

struct LedgerEntry {
    std::string vertex;
    LedgerCase kind;
    // finite_value: lower bound for the zero order, (k/2)(n-1) - n a (>= 0).
    // pole_at_vertex: upper bound N = -(k/2)(n-1) + n a for the pole order (<= 0).
    // pole_off_vertices: upper bound N0 = k + sum a - k - sum a (= 0).
    // Cusps use the local parameter instead of (tau - tau_i), so n drops out.
    std::int64_t bound = 0;
    // The exact zero order (finite_value) or pole order (pole cases) of h_j.
    std::int64_t order = 0;
};

struct OrderLedger {
    int k = 0;
    std::int64_t j = 0;
    std::vector<LedgerEntry> entries;

    // Bounds have the right sign and every exact order respects its bound.
    [[nodiscard]] bool holomorphic() const;
};

OrderLedger order_ledger(const GroupData &gd, int k, std::int64_t j);

// Zero order (pole orders negated) of h_j at the cusp infinity predicted by
// the ledger, in units of the local parameter q^(1/h). Requires a vertex at
// the cusp infinity.
std::int64_t ledger_order_at_infinity(const GroupData &gd, int k, std::int64_t j);

bool verify_holomorphic_at_cusp(const Basis &b);

// Distinct leading exponents, or else full rank by exact row reduction.
bool verify_independent(const Basis &b);

// Both bases span the same space on exponents below `bound`.
bool span_equal(const Basis &b1, const Basis &b2, std::int64_t bound);

// Same check for raw form lists (used against oracle spans).
bool span_equal(std::span<const QSeries> forms1, std::span<const QSeries> forms2, std::int64_t bound);

} // namespace automorph

#endif
