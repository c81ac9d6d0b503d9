#include <automorph/basis.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <automorph/linalg.hpp>

namespace automorph
{

namespace
{

void require_even(int k)
{
    if (k % 2 != 0) {
        throw std::invalid_argument("unsupported weight parity: k = " + std::to_string(k) + " is odd");
    }
}

} // namespace

std::int64_t weight_exponent(const VertexOrder &order, int k)
{
    const std::int64_t half = k / 2;
    if (order.is_cusp()) {
        return half;
    }
    const auto n = order.value();
    // (k/2)(1 - 1/n) = k (n - 1) / (2 n)
    return floor_div(static_cast<std::int64_t>(k) * (n - 1), 2 * n);
}

std::int64_t dim_Ak(int genus, std::span<const VertexOrder> orders, int k)
{
    require_even(k);
    if (genus < 0) {
        throw std::invalid_argument("genus must be non-negative");
    }
    if (k < 0) {
        return 0;
    }
    if (k == 0) {
        return 1;
    }
    if (k == 2) {
        return genus;
    }
    std::int64_t d = static_cast<std::int64_t>(genus - 1) * (k - 1);
    for (const auto &o : orders) {
        d += weight_exponent(o, k);
    }
    return d;
}

WeightData weight_exponents(const GroupData &gd, int k)
{
    require_even(k);
    if (k < 4) {
        throw std::invalid_argument("weight_exponents: the construction needs k >= 4 (got " + std::to_string(k)
                                    + "); use dim_Ak for smaller weights");
    }
    if (gd.genus != 0) {
        throw std::invalid_argument("weight_exponents: group " + gd.name + " does not have genus 0");
    }
    WeightData wd;
    wd.k = k;
    for (const auto &v : gd.vertices) {
        wd.exponents.push_back(weight_exponent(v.order, k));
    }
    wd.d = 1 - k + std::accumulate(wd.exponents.begin(), wd.exponents.end(), std::int64_t{0});
    return wd;
}

namespace
{

// Unnormalized h_0 .. h_{d-1} from a (possibly truncated) Hauptmodul.
std::vector<QSeries> construct_forms(const GroupData &gd, const WeightData &wd, const QSeries &w)
{
    const int h = w.base_den();
    const QSeries derivative_power = pow(theta(w), wd.k / 2);

    QSeries denominator = QSeries::constant(Rational(1), kExactPrec, h);
    for (std::size_t i = 0; i < gd.vertices.size(); ++i) {
        const auto &value = gd.vertices[i].value;
        if (value.is_infinite() || wd.exponents[i] == 0) {
            continue;
        }
        const QSeries shifted = sub(w, QSeries::constant(value.value(), kExactPrec, h));
        denominator = mul(denominator, pow(shifted, wd.exponents[i]));
    }

    std::vector<QSeries> forms;
    QSeries current = div(derivative_power, denominator);
    for (std::int64_t j = 0; j < wd.d; ++j) {
        forms.push_back(current);
        if (j + 1 < wd.d) {
            current = mul(current, w);
        }
    }
    return forms;
}

std::int64_t achieved_window(const std::vector<QSeries> &forms)
{
    std::int64_t out = kExactPrec;
    for (const auto &f : forms) {
        out = std::min(out, f.prec());
    }
    return out;
}

} // namespace

Basis build_basis(const GroupData &gd, int k, std::int64_t window)
{
    Basis b;
    b.group = gd;
    b.weight = weight_exponents(gd, k);
    b.window = window;
    if (b.weight.d <= 0) {
        b.diagnostic = "dim A_" + std::to_string(k) + " = " + std::to_string(b.weight.d) + " for " + gd.name
                       + "; no forms to construct";
        return b;
    }

    // Work with the shortest Hauptmodul window that reaches the target; the
    // cost is quadratic in the window.
    const auto full = gd.hauptmodul.prec();
    std::int64_t margin = 8;
    std::vector<QSeries> forms;
    for (;;) {
        const auto trial = std::min(full, window + margin);
        forms = construct_forms(gd, b.weight, gd.hauptmodul.truncated(trial));
        if (achieved_window(forms) >= window) {
            break;
        }
        if (trial == full) {
            throw PrecisionError("build_basis: " + gd.name + " k=" + std::to_string(k) + " reaches window "
                                 + std::to_string(achieved_window(forms)) + " < requested "
                                 + std::to_string(window));
        }
        margin *= 2;
    }

    for (auto &f : forms) {
        if (f.truncated(window).is_zero()) {
            throw PrecisionError("build_basis: a form vanishes on the whole window " + std::to_string(window));
        }
        b.forms.push_back(normalize_monic(f).truncated(window));
    }
    return b;
}

std::string to_string(LedgerCase c)
{
    switch (c) {
    case LedgerCase::finite_value:
        return "i";
    case LedgerCase::pole_at_vertex:
        return "ii";
    case LedgerCase::pole_off_vertices:
        return "iii";
    }
    return "?";
}

bool OrderLedger::holomorphic() const
{
    return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry &e) {
        if (e.kind == LedgerCase::finite_value) {
            return e.bound >= 0 && e.order >= e.bound;
        }
        return e.bound <= 0 && e.order <= e.bound;
    });
}

OrderLedger order_ledger(const GroupData &gd, int k, std::int64_t j)
{
    const auto wd = weight_exponents(gd, k);
    if (wd.d < 1 || j < 0 || j >= wd.d) {
        throw std::invalid_argument("order_ledger: j must lie in [0, d-1] with d = " + std::to_string(wd.d));
    }
    const std::int64_t half = k / 2;
    const std::int64_t sum_a = std::accumulate(wd.exponents.begin(), wd.exponents.end(), std::int64_t{0});

    OrderLedger ledger;
    ledger.k = k;
    ledger.j = j;
    for (std::size_t i = 0; i < gd.vertices.size(); ++i) {
        const auto &v = gd.vertices[i];
        const auto a = wd.exponents[i];
        LedgerEntry e;
        e.vertex = v.label;
        if (v.value.is_finite()) {
            // (w')^(k/2) vanishes to order (k/2)(n-1), the product to order n a;
            // w^j adds j n when w_i = 0. At a cusp both w - w_i and w' vanish
            // to order 1 in the local parameter.
            e.kind = LedgerCase::finite_value;
            const bool value_zero = v.value.value() == 0;
            if (v.order.is_cusp()) {
                e.bound = half - a;
                e.order = e.bound + (value_zero ? j : 0);
            } else {
                const auto n = v.order.value();
                e.bound = half * (n - 1) - n * a;
                e.order = e.bound + (value_zero ? j * n : 0);
            }
        } else {
            // Pole of order n for w, n + 1 for w', nj for w^j, n sum_{other} a
            // for the product.
            e.kind = LedgerCase::pole_at_vertex;
            const auto others = sum_a - a;
            if (v.order.is_cusp()) {
                e.bound = a - half;
                e.order = half + j - others;
            } else {
                const auto n = v.order.value();
                e.bound = -half * (n - 1) + n * a;
                e.order = half * (n + 1) + n * j - n * others;
            }
        }
        ledger.entries.push_back(std::move(e));
    }
    if (!gd.pole_vertex()) {
        LedgerEntry e;
        e.vertex = "tau0";
        e.kind = LedgerCase::pole_off_vertices;
        // Simple pole of w: order k for (w')^(k/2), sum a for the product, j for w^j.
        e.bound = k + sum_a - k - sum_a;
        e.order = k + j - sum_a;
        ledger.entries.push_back(std::move(e));
    }
    return ledger;
}

std::int64_t ledger_order_at_infinity(const GroupData &gd, int k, std::int64_t j)
{
    const auto ledger = order_ledger(gd, k, j);
    for (std::size_t i = 0; i < gd.vertices.size(); ++i) {
        if (gd.vertices[i].is_cusp_at_infinity()) {
            const auto &e = ledger.entries[i];
            return e.kind == LedgerCase::finite_value ? e.order : -e.order;
        }
    }
    throw std::invalid_argument(gd.name + " has no vertex at the cusp infinity");
}

bool verify_holomorphic_at_cusp(const Basis &b)
{
    return std::all_of(b.forms.begin(), b.forms.end(),
                       [](const QSeries &f) { return !f.is_zero() && f.order() >= 0; });
}

namespace
{

RationalMatrix coefficient_matrix(std::span<const QSeries> forms, std::int64_t from, std::int64_t to)
{
    RationalMatrix m;
    for (const auto &f : forms) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(std::max<std::int64_t>(to - from, 0)));
        for (auto e = from; e < to; ++e) {
            row.push_back(f.coefficient(e));
        }
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<QSeries> in_common_base(std::span<const QSeries> a, std::span<const QSeries> b)
{
    int l = 1;
    for (const auto &f : a) {
        l = std::lcm(l, f.base_den());
    }
    for (const auto &f : b) {
        l = std::lcm(l, f.base_den());
    }
    std::vector<QSeries> out;
    for (const auto &f : a) {
        out.push_back(f.rescaled(l));
    }
    for (const auto &f : b) {
        out.push_back(f.rescaled(l));
    }
    return out;
}

} // namespace

bool verify_independent(const Basis &b)
{
    if (b.forms.empty()) {
        return true;
    }
    std::set<std::int64_t> leads;
    std::int64_t window = kExactPrec;
    std::int64_t lowest = kExactPrec;
    for (const auto &f : b.forms) {
        if (f.is_zero()) {
            throw PrecisionError("verify_independent: a form is zero on its window");
        }
        leads.insert(f.order());
        window = std::min(window, f.prec());
        lowest = std::min(lowest, f.order());
    }
    if (leads.size() == b.forms.size()) {
        return true;
    }
    return rank(coefficient_matrix(b.forms, lowest, window)) == b.forms.size();
}

bool span_equal(std::span<const QSeries> forms1, std::span<const QSeries> forms2, std::int64_t bound)
{
    const auto all = in_common_base(forms1, forms2);
    std::int64_t lowest = bound;
    for (const auto &f : all) {
        if (f.prec() < bound) {
            throw PrecisionError("span_equal: window " + std::to_string(f.prec()) + " does not reach "
                                 + std::to_string(bound));
        }
        if (!f.is_zero()) {
            lowest = std::min(lowest, f.order());
        }
    }
    const std::span<const QSeries> first(all.data(), forms1.size());
    const std::span<const QSeries> second(all.data() + forms1.size(), forms2.size());
    return row_reduce(coefficient_matrix(first, lowest, bound))
           == row_reduce(coefficient_matrix(second, lowest, bound));
}

bool span_equal(const Basis &b1, const Basis &b2, std::int64_t bound)
{
    if (b1.weight.d != b2.weight.d) {
        throw std::invalid_argument("span_equal: bases of different dimension");
    }
    return span_equal(std::span<const QSeries>(b1.forms), std::span<const QSeries>(b2.forms), bound);
}

} // namespace automorph
