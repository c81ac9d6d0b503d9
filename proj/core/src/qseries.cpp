#include <automorph/qseries.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace automorph
{

namespace
{

// Window arithmetic where kExactPrec absorbs everything.
std::int64_t prec_add(std::int64_t a, std::int64_t b)
{
    if (a == kExactPrec || b == kExactPrec) {
        return kExactPrec;
    }
    return a + b;
}

std::int64_t prec_sub(std::int64_t a, std::int64_t b)
{
    if (a == kExactPrec) {
        return kExactPrec;
    }
    return a - b;
}

// Order used in window propagation: the window itself for a zero series.
std::int64_t effective_order(const QSeries &f)
{
    return f.is_zero() ? f.prec() : f.order();
}

bool all_integral(const std::vector<Rational> &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &c) { return c.get_den() == 1; });
}

std::vector<Rational> dense_coefficients(const QSeries &f, std::int64_t from, std::int64_t to)
{
    std::vector<Rational> out(static_cast<std::size_t>(std::max<std::int64_t>(to - from, 0)));
    if (f.is_zero()) {
        return out;
    }
    const auto lo = std::max(from, f.order());
    const auto hi = std::min(to, f.last_exponent() + 1);
    for (auto e = lo; e < hi; ++e) {
        out[static_cast<std::size_t>(e - from)] = f.coefficient(e);
    }
    return out;
}

std::pair<QSeries, QSeries> common_base(const QSeries &f, const QSeries &g)
{
    if (f.base_den() == g.base_den()) {
        return {f, g};
    }
    const int l = std::lcm(f.base_den(), g.base_den());
    return {f.rescaled(l), g.rescaled(l)};
}

std::string exponent_text(std::int64_t e, int h)
{
    const Rational x = make_rational(e, h);
    if (x == 1) {
        return "q";
    }
    if (is_integer(x)) {
        return "q^" + automorph::to_string(x);
    }
    return "q^(" + automorph::to_string(x) + ")";
}

} // namespace

QSeries QSeries::make(int base_den, std::span<const SeriesTerm> terms, std::int64_t prec)
{
    if (base_den < 1) {
        throw std::invalid_argument("base_den must be positive");
    }
    std::map<std::int64_t, Rational> acc;
    for (const auto &t : terms) {
        if (t.exponent >= prec) {
            throw std::invalid_argument("inconsistent precision: exponent " + std::to_string(t.exponent)
                                        + " is not below the window " + std::to_string(prec));
        }
        acc[t.exponent] += t.coefficient;
    }
    QSeries out;
    out.base_den_ = base_den;
    out.prec_ = prec;
    std::erase_if(acc, [](const auto &kv) { return kv.second == 0; });
    if (acc.empty()) {
        return out;
    }
    out.first_ = acc.begin()->first;
    const auto last = acc.rbegin()->first;
    out.coeffs_.resize(static_cast<std::size_t>(last - out.first_ + 1));
    for (auto &[e, c] : acc) {
        out.coeffs_[static_cast<std::size_t>(e - out.first_)] = std::move(c);
    }
    return out;
}

QSeries QSeries::zero(int base_den, std::int64_t prec)
{
    return make(base_den, std::span<const SeriesTerm>{}, prec);
}

QSeries QSeries::constant(const Rational &c, std::int64_t prec, int base_den)
{
    return monomial(c, 0, prec, base_den);
}

QSeries QSeries::monomial(const Rational &c, std::int64_t exponent, std::int64_t prec, int base_den)
{
    if (c == 0) {
        return zero(base_den, prec);
    }
    const SeriesTerm t{exponent, c};
    return make(base_den, std::span<const SeriesTerm>(&t, 1), prec);
}

QSeries QSeries::from_dense(int base_den, std::int64_t first_exponent, std::vector<Rational> coefficients,
                            std::int64_t prec)
{
    if (base_den < 1) {
        throw std::invalid_argument("base_den must be positive");
    }
    QSeries out;
    out.base_den_ = base_den;
    out.prec_ = prec;
    out.first_ = first_exponent;
    out.coeffs_ = std::move(coefficients);
    // Anything at or beyond the window is unknown, not zero.
    if (prec != kExactPrec) {
        const auto keep = std::max<std::int64_t>(prec - first_exponent, 0);
        if (static_cast<std::int64_t>(out.coeffs_.size()) > keep) {
            out.coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    out.trim();
    return out;
}

void QSeries::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        first_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        first_ += static_cast<std::int64_t>(lead);
    }
}

std::int64_t QSeries::order() const
{
    if (coeffs_.empty()) {
        throw PrecisionError("order undetermined: series is zero on its window");
    }
    return first_;
}

const Rational &QSeries::leading_coefficient() const
{
    if (coeffs_.empty()) {
        throw PrecisionError("order undetermined: series is zero on its window");
    }
    return coeffs_.front();
}

std::int64_t QSeries::last_exponent() const
{
    if (coeffs_.empty()) {
        throw PrecisionError("order undetermined: series is zero on its window");
    }
    return first_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational QSeries::coefficient(std::int64_t e) const
{
    if (e >= prec_) {
        throw PrecisionError("coefficient of exponent " + std::to_string(e) + " lies outside the window "
                             + std::to_string(prec_));
    }
    if (coeffs_.empty() || e < first_ || e >= first_ + static_cast<std::int64_t>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(e - first_)];
}

std::vector<SeriesTerm> QSeries::terms() const
{
    std::vector<SeriesTerm> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            out.push_back({first_ + static_cast<std::int64_t>(i), coeffs_[i]});
        }
    }
    return out;
}

std::size_t QSeries::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c != 0; }));
}

QSeries QSeries::truncated(std::int64_t new_prec) const
{
    if (new_prec >= prec_) {
        return *this;
    }
    return from_dense(base_den_, first_, coeffs_, new_prec);
}

QSeries QSeries::rescaled(int new_base_den) const
{
    if (new_base_den < 1 || new_base_den % base_den_ != 0) {
        throw std::invalid_argument("rescaled: new base must be a multiple of the current base");
    }
    const std::int64_t factor = new_base_den / base_den_;
    if (factor == 1) {
        return *this;
    }
    std::vector<Rational> dense;
    if (!coeffs_.empty()) {
        dense.resize((coeffs_.size() - 1) * static_cast<std::size_t>(factor) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            dense[i * static_cast<std::size_t>(factor)] = coeffs_[i];
        }
    }
    const auto prec = prec_ == kExactPrec ? kExactPrec : prec_ * factor;
    return from_dense(new_base_den, first_ * factor, std::move(dense), prec);
}

std::string QSeries::to_string(std::size_t max_terms) const
{
    std::ostringstream os;
    std::size_t shown = 0;
    bool first = true;
    for (const auto &t : terms()) {
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) {
                c = -c;
            }
        }
        first = false;
        if (t.exponent == 0) {
            os << automorph::to_string(c);
        } else if (c == 1) {
            os << exponent_text(t.exponent, base_den_);
        } else {
            os << automorph::to_string(c) << "*" << exponent_text(t.exponent, base_den_);
        }
        ++shown;
    }
    if (prec_ != kExactPrec) {
        os << (first ? "O(" : " + O(") << (prec_ == 0 ? std::string("1") : exponent_text(prec_, base_den_))
           << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

std::int64_t order(const QSeries &f)
{
    return f.order();
}

std::int64_t relative_prec(const QSeries &f)
{
    return prec_sub(f.prec(), effective_order(f));
}

QSeries add(const QSeries &f0, const QSeries &g0)
{
    const auto [f, g] = common_base(f0, g0);
    const auto prec = std::min(f.prec(), g.prec());
    if (f.is_zero() && g.is_zero()) {
        return QSeries::zero(f.base_den(), prec);
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const QSeries *s : {&f, &g}) {
        if (!s->is_zero()) {
            lo = std::min(lo, s->order());
            hi = std::max(hi, s->last_exponent() + 1);
        }
    }
    hi = std::min(hi, prec);
    if (hi <= lo) {
        return QSeries::zero(f.base_den(), prec);
    }
    auto dense = dense_coefficients(f, lo, hi);
    const auto other = dense_coefficients(g, lo, hi);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        dense[i] += other[i];
    }
    return QSeries::from_dense(f.base_den(), lo, std::move(dense), prec);
}

QSeries negate(const QSeries &f)
{
    return scale(f, Rational(-1));
}

QSeries sub(const QSeries &f, const QSeries &g)
{
    return add(f, negate(g));
}

QSeries scale(const QSeries &f, const Rational &c)
{
    if (f.is_zero() || c == 0) {
        return QSeries::zero(f.base_den(), f.prec());
    }
    auto dense = dense_coefficients(f, f.order(), f.last_exponent() + 1);
    for (auto &x : dense) {
        x *= c;
    }
    return QSeries::from_dense(f.base_den(), f.order(), std::move(dense), f.prec());
}

QSeries mul(const QSeries &f0, const QSeries &g0)
{
    const auto [f, g] = common_base(f0, g0);
    const auto prec = std::min(prec_add(f.prec(), effective_order(g)), prec_add(g.prec(), effective_order(f)));
    if (f.is_zero() || g.is_zero()) {
        return QSeries::zero(f.base_den(), prec);
    }
    const auto first = f.order() + g.order();
    const auto hi = std::min(prec, f.last_exponent() + g.last_exponent() + 1);
    if (hi <= first) {
        return QSeries::zero(f.base_den(), prec);
    }
    const auto len = static_cast<std::size_t>(hi - first);
    const auto a = dense_coefficients(f, f.order(), f.last_exponent() + 1);
    const auto b = dense_coefficients(g, g.order(), g.last_exponent() + 1);

    std::vector<Rational> out(len);
    if (all_integral(a) && all_integral(b)) {
        // Integer fast path: mpz multiply-accumulate avoids per-step gcds.
        std::vector<Integer> acc(len);
        for (std::size_t i = 0; i < a.size() && i < len; ++i) {
            const mpz_srcptr ai = a[i].get_num_mpz_t();
            if (mpz_sgn(ai) == 0) {
                continue;
            }
            const std::size_t jmax = std::min(b.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num_mpz_t());
            }
        }
        for (std::size_t k = 0; k < len; ++k) {
            out[k] = Rational(acc[k]);
        }
    } else {
        Rational tmp;
        for (std::size_t i = 0; i < a.size() && i < len; ++i) {
            if (a[i] == 0) {
                continue;
            }
            const std::size_t jmax = std::min(b.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
                mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), tmp.get_mpq_t());
            }
        }
    }
    return QSeries::from_dense(f.base_den(), first, std::move(out), prec);
}

namespace
{

// Coefficients c_0..c_{n-1} of num / den where den[0] != 0 and both are
// dense from exponent 0 (num may be shorter than n).
std::vector<Rational> long_divide(const std::vector<Rational> &num, const std::vector<Rational> &den, std::size_t n)
{
    std::vector<Rational> c(n);
    const Rational &u = den.front();
    const bool integral = (u == 1 || u == -1) && all_integral(num) && all_integral(den);
    if (integral) {
        std::vector<Integer> ci(n);
        const bool negate_lead = u == -1;
        for (std::size_t t = 0; t < n; ++t) {
            Integer acc = t < num.size() ? Integer(num[t].get_num()) : Integer(0);
            const std::size_t imax = std::min(t, den.size() - 1);
            for (std::size_t i = 1; i <= imax; ++i) {
                mpz_submul(acc.get_mpz_t(), den[i].get_num_mpz_t(), ci[t - i].get_mpz_t());
            }
            if (negate_lead) {
                acc = -acc;
            }
            ci[t] = std::move(acc);
        }
        for (std::size_t t = 0; t < n; ++t) {
            c[t] = Rational(ci[t]);
        }
        return c;
    }
    Rational tmp;
    for (std::size_t t = 0; t < n; ++t) {
        Rational acc = t < num.size() ? num[t] : Rational(0);
        const std::size_t imax = std::min(t, den.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) {
            mpq_mul(tmp.get_mpq_t(), den[i].get_mpq_t(), c[t - i].get_mpq_t());
            mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        c[t] = acc / u;
    }
    return c;
}

} // namespace

QSeries div(const QSeries &f0, const QSeries &g0)
{
    const auto [f, g] = common_base(f0, g0);
    if (g.is_zero()) {
        throw PrecisionError("insufficient precision: divisor has no leading term within its window");
    }
    const auto v = g.order();
    const auto prec = prec_sub(std::min(f.prec(), prec_add(relative_prec(g), effective_order(f))), v);

    if (f.is_zero()) {
        return QSeries::zero(f.base_den(), prec);
    }
    const auto den = dense_coefficients(g, v, g.last_exponent() + 1);
    const auto ef = f.order();
    const auto num = dense_coefficients(f, ef, f.last_exponent() + 1);

    if (prec == kExactPrec) {
        // Both operands exact: only an exact polynomial quotient is representable.
        const auto deg_f = f.last_exponent() - ef;
        const auto deg_g = static_cast<std::int64_t>(den.size()) - 1;
        if (deg_f < deg_g) {
            throw PrecisionError("quotient of exact series is not a polynomial; truncate an operand");
        }
        auto c = long_divide(num, den, static_cast<std::size_t>(deg_f - deg_g + 1));
        auto q = QSeries::from_dense(f.base_den(), ef - v, std::move(c), kExactPrec);
        if (!(mul(q, g) == f)) {
            throw PrecisionError("quotient of exact series is not a polynomial; truncate an operand");
        }
        return q;
    }

    const auto first = ef - v;
    if (prec <= first) {
        return QSeries::zero(f.base_den(), prec);
    }
    auto c = long_divide(num, den, static_cast<std::size_t>(prec - first));
    return QSeries::from_dense(f.base_den(), first, std::move(c), prec);
}

QSeries pow(const QSeries &f, std::int64_t m)
{
    if (m < 0) {
        return pow(div(QSeries::constant(Rational(1), kExactPrec, f.base_den()), f), -m);
    }
    QSeries result = QSeries::constant(Rational(1), kExactPrec, f.base_den());
    QSeries base = f;
    while (m > 0) {
        if (m & 1) {
            result = mul(result, base);
        }
        m >>= 1;
        if (m > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

QSeries theta(const QSeries &f)
{
    if (f.is_zero()) {
        return f;
    }
    const auto first = f.order();
    auto dense = dense_coefficients(f, first, f.last_exponent() + 1);
    const Rational inv_h = make_rational(1, f.base_den());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        dense[i] *= Rational(static_cast<long>(first + static_cast<std::int64_t>(i))) * inv_h;
    }
    return QSeries::from_dense(f.base_den(), first, std::move(dense), f.prec());
}

QSeries normalize_monic(const QSeries &f)
{
    const Rational lead = f.leading_coefficient();
    return scale(f, Rational(1 / lead));
}

QSeries substitute_root(const QSeries &f, int m)
{
    if (m < 1) {
        throw std::invalid_argument("substitute_root requires a positive root index");
    }
    if (f.is_zero()) {
        return QSeries::zero(f.base_den() * m, f.prec());
    }
    return QSeries::from_dense(f.base_den() * m, f.order(), dense_coefficients(f, f.order(), f.last_exponent() + 1),
                               f.prec());
}

bool equal_to_prec(const QSeries &f0, const QSeries &g0, std::int64_t bound)
{
    const auto [f, g] = common_base(f0, g0);
    if (f.prec() < bound || g.prec() < bound) {
        throw PrecisionError("equal_to_prec: window " + std::to_string(std::min(f.prec(), g.prec()))
                             + " does not reach " + std::to_string(bound));
    }
    const auto diff = sub(f, g);
    return diff.is_zero() || diff.order() >= bound;
}

} // namespace automorph
