#include <automorph/json_io.hpp>

#include <stdexcept>

namespace automorph::json_io
{

Json series_to_json(const QSeries &f)
{
    Json out;
    out["base_den"] = f.base_den();
    if (f.is_exact()) {
        out["prec"] = nullptr;
    } else {
        out["prec"] = f.prec();
    }
    Json terms = Json::array();
    for (const auto &t : f.terms()) {
        terms.push_back(Json::array({to_string(t.coefficient.get_num()), to_string(t.coefficient.get_den()), t.exponent}));
    }
    out["terms"] = std::move(terms);
    return out;
}

QSeries series_from_json(const Json &j)
{
    try {
        const int base_den = j.at("base_den").get<int>();
        const auto &p = j.at("prec");
        const std::int64_t prec = p.is_null() ? kExactPrec : p.get<std::int64_t>();
        std::vector<SeriesTerm> terms;
        for (const auto &t : j.at("terms")) {
            if (!t.is_array() || t.size() != 3) {
                throw std::invalid_argument("series term must be [num, den, exp]");
            }
            const auto num = parse_rational(t.at(0).get<std::string>());
            const auto den = parse_rational(t.at(1).get<std::string>());
            if (!is_integer(num) || !is_integer(den) || den <= 0) {
                throw std::invalid_argument("series term needs an integer numerator and positive denominator");
            }
            terms.push_back({t.at(2).get<std::int64_t>(), make_rational(num.get_num(), den.get_num())});
        }
        return QSeries::make(base_den, terms, prec);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

Json ledger_to_json(const OrderLedger &ledger)
{
    Json entries = Json::array();
    for (const auto &e : ledger.entries) {
        Json row;
        row["vertex"] = e.vertex;
        row["case"] = to_string(e.kind);
        row["bound"] = e.bound;
        row["order"] = e.order;
        entries.push_back(std::move(row));
    }
    Json out;
    out["j"] = ledger.j;
    out["entries"] = std::move(entries);
    return out;
}

Json basis_to_json(const Basis &b)
{
    Json out;
    out["group"] = b.group.name;
    out["k"] = b.weight.k;
    out["d"] = b.weight.d;
    out["window"] = b.window;
    out["exponents"] = b.weight.exponents;
    out["derivative"] = "theta = q d/dq; forms are monic, so each h_j is fixed only up to the factor (2 pi i/h)^(k/2)";
    Json forms = Json::array();
    for (const auto &f : b.forms) {
        forms.push_back(series_to_json(f));
    }
    out["forms"] = std::move(forms);
    Json ledger = Json::array();
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(b.forms.size()); ++j) {
        ledger.push_back(ledger_to_json(order_ledger(b.group, b.weight.k, j)));
    }
    out["ledger"] = std::move(ledger);
    if (!b.diagnostic.empty()) {
        out["diagnostic"] = b.diagnostic;
    }
    return out;
}

Json element_to_json(const GroupElement &g)
{
    return Json::array({to_string(g.a()), to_string(g.b()), to_string(g.c()), to_string(g.d())});
}

namespace
{

Json signature_json(const GroupData &gd)
{
    Json orders = Json::array();
    for (const auto &v : gd.vertices) {
        if (v.order.is_cusp()) {
            orders.push_back("inf");
        } else {
            orders.push_back(v.order.value());
        }
    }
    return orders;
}

} // namespace

Json group_summary_to_json(const GroupData &gd)
{
    Json out;
    out["name"] = gd.name;
    out["genus"] = gd.genus;
    out["signature"] = signature_json(gd);
    out["elliptic_count"] = gd.elliptic_count();
    out["cusp_count"] = gd.cusp_count();
    out["cusp_width"] = gd.cusp_width;
    return out;
}

Json group_to_json(const GroupData &gd, std::optional<std::int64_t> terms)
{
    Json out = group_summary_to_json(gd);
    Json vertices = Json::array();
    for (const auto &v : gd.vertices) {
        Json row;
        row["label"] = v.label;
        row["order"] = v.order.to_string();
        row["kind"] = v.kind() == VertexKind::cusp ? "cusp" : "elliptic";
        row["value"] = to_string(v.value);
        if (v.location) {
            row["location"] = Json::array({v.location->real(), v.location->imag()});
        } else {
            row["location"] = nullptr;
        }
        if (v.cusp_point) {
            row["cusp_point"] = to_string(*v.cusp_point);
        }
        vertices.push_back(std::move(row));
    }
    out["vertices"] = std::move(vertices);
    Json elements = Json::array();
    for (const auto &e : gd.elements) {
        Json row;
        row["label"] = e.label;
        row["matrix"] = element_to_json(e.element);
        row["class"] = to_string(classify_element(e.element));
        Json points = Json::array();
        for (const auto &p : e.test_points) {
            points.push_back(Json::array({p.real(), p.imag()}));
        }
        row["test_points"] = std::move(points);
        row["min_imag"] = e.min_imag;
        elements.push_back(std::move(row));
    }
    out["elements"] = std::move(elements);
    out["hauptmodul"] = series_to_json(terms ? gd.hauptmodul.truncated(*terms) : gd.hauptmodul);
    return out;
}

} // namespace automorph::json_io
