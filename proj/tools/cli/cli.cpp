#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <automorph/basis.hpp>
#include <automorph/groups.hpp>
#include <automorph/json_io.hpp>
#include <automorph/numeric.hpp>
#include <automorph/verify.hpp>

namespace automorph::cli
{

std::complex<double> parse_tau(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*([+-])?\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*i\s*$)");
    std::cmatch m;
    const std::string s(text);
    if (!std::regex_match(s.c_str(), m, pattern)) {
        throw std::invalid_argument("malformed tau '" + s + "' (expected a+bi)");
    }
    double re = 0.0;
    double im = 1.0;
    const bool has_re = m[1].matched;
    const bool has_sign = m[2].matched;
    if (has_re && !has_sign) {
        // "2i" parses as real part "2" with no imaginary digits.
        if (m[3].matched) {
            throw std::invalid_argument("malformed tau '" + s + "' (expected a+bi)");
        }
        im = std::stod(m[1].str());
    } else {
        if (has_re) {
            re = std::stod(m[1].str());
        }
        if (m[3].matched) {
            im = std::stod(m[3].str());
        }
        if (has_sign && m[2].str() == "-") {
            im = -im;
        }
    }
    if (!(im > 0)) {
        throw std::invalid_argument("tau must lie in the upper half-plane (Im tau > 0), got '" + s + "'");
    }
    return {re, im};
}

namespace
{

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void check_format(const std::string &format)
{
    if (format != "text" && format != "json") {
        throw UsageError("--format must be 'text' or 'json'");
    }
}

void require_even(int k)
{
    if (k % 2 != 0) {
        throw UsageError("unsupported weight parity: k = " + std::to_string(k) + " is odd");
    }
}

void require_construction_weight(int k)
{
    require_even(k);
    if (k < 4) {
        throw UsageError("basis construction needs k >= 4 (got " + std::to_string(k) + ")");
    }
}

std::string fixed(double x, int digits = 17)
{
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string sci(double x)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << x;
    return os.str();
}

int cmd_dim(const std::string &group, int k, const std::string &format, std::ostream &out)
{
    require_even(k);
    const auto &gd = registry_get(group);
    const auto d = dim_Ak(gd.genus, gd.orders(), k);
    if (format == "json") {
        json_io::Json j;
        j["group"] = gd.name;
        j["k"] = k;
        j["dim"] = d;
        out << j.dump() << '\n';
    } else {
        out << d << '\n';
    }
    return kExitOk;
}

int cmd_basis(const std::string &group, int k, std::int64_t terms, const std::string &format, std::ostream &out)
{
    require_construction_weight(k);
    if (terms < 1) {
        throw UsageError("--terms must be positive");
    }
    const auto b = build_basis(registry_get(group), k, terms);
    if (format == "json") {
        out << json_io::basis_to_json(b).dump() << '\n';
        return kExitOk;
    }
    out << "group " << b.group.name << "  k=" << k << "  d=" << b.weight.d << "  window=" << b.window << '\n';
    out << "exponents a_i:";
    for (const auto a : b.weight.exponents) {
        out << ' ' << a;
    }
    out << '\n';
    if (!b.diagnostic.empty()) {
        out << b.diagnostic << '\n';
    }
    for (std::size_t j = 0; j < b.forms.size(); ++j) {
        out << "h_" << j << " = " << b.forms[j].to_string(10) << '\n';
    }
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(b.forms.size()); ++j) {
        const auto ledger = order_ledger(b.group, k, j);
        out << "ledger h_" << j << ":";
        for (const auto &e : ledger.entries) {
            out << "  [" << e.vertex << " case " << to_string(e.kind) << " bound " << e.bound << " order " << e.order
                << "]";
        }
        out << '\n';
    }
    out << "note: w' is taken as q d/dq; forms are monic, fixed up to (2 pi i/h)^(k/2)\n";
    return kExitOk;
}

int cmd_verify(const verify::Options &opts, const std::string &suite, const std::string &format, std::ostream &out)
{
    const auto report = verify::run(verify::parse_suite(suite), opts);
    if (format == "json") {
        json_io::Json rows = json_io::Json::array();
        for (const auto &r : report.rows) {
            json_io::Json row;
            row["suite"] = r.suite;
            row["check"] = r.check;
            if (std::isfinite(r.measured)) {
                row["measured"] = r.measured;
            } else {
                row["measured"] = nullptr;
            }
            row["relation"] = r.relation;
            row["threshold"] = r.threshold;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
        }
        json_io::Json j;
        j["suite"] = suite;
        j["rows"] = std::move(rows);
        j["notes"] = report.notes;
        j["failures"] = report.failures();
        j["passed"] = report.all_passed();
        out << j.dump() << '\n';
    } else {
        std::size_t width = 5;
        for (const auto &r : report.rows) {
            width = std::max(width, r.check.size());
        }
        out << std::left << std::setw(12) << "suite" << std::setw(static_cast<int>(width) + 2) << "check"
            << std::setw(12) << "measured" << std::setw(14) << "threshold" << std::setw(6) << "result" << "detail\n";
        for (const auto &r : report.rows) {
            const bool integral = std::isfinite(r.measured) && r.measured == std::floor(r.measured)
                                  && std::abs(r.measured) < 1e15;
            std::ostringstream measured;
            if (!std::isfinite(r.measured)) {
                measured << "-";
            } else if (integral) {
                measured << static_cast<long long>(r.measured);
            } else {
                measured << sci(r.measured);
            }
            std::ostringstream threshold;
            threshold << r.relation << ' ';
            if (r.threshold == std::floor(r.threshold) && std::abs(r.threshold) < 1e15) {
                threshold << static_cast<long long>(r.threshold);
            } else {
                threshold << sci(r.threshold);
            }
            out << std::left << std::setw(12) << r.suite << std::setw(static_cast<int>(width) + 2) << r.check
                << std::setw(12) << measured.str() << std::setw(14) << threshold.str() << std::setw(6)
                << (r.pass ? "PASS" : "FAIL") << r.detail << '\n';
        }
        for (const auto &n : report.notes) {
            out << "note: " << n << '\n';
        }
        out << report.rows.size() - report.failures() << "/" << report.rows.size() << " checks passed\n";
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const std::string &group, int k, std::int64_t j, const std::string &tau_text, std::int64_t terms,
             double min_imag, const std::string &format, std::ostream &out)
{
    require_construction_weight(k);
    const auto tau = parse_tau(tau_text);
    numeric::EvalConfig cfg;
    cfg.terms_used = terms;
    cfg.min_imag = min_imag;
    cfg.validate();
    const auto b = build_basis(registry_get(group), k, terms);
    if (j < 0 || j >= static_cast<std::int64_t>(b.forms.size())) {
        throw UsageError("--index must lie in [0, " + std::to_string(b.forms.size()) + ")");
    }
    const auto value = numeric::eval_qseries(b.forms[static_cast<std::size_t>(j)], tau, cfg);
    if (format == "json") {
        json_io::Json o;
        o["group"] = b.group.name;
        o["k"] = k;
        o["j"] = j;
        o["tau"] = json_io::Json::array({tau.real(), tau.imag()});
        o["terms"] = terms;
        o["value"] = json_io::Json::array({value.real(), value.imag()});
        out << o.dump() << '\n';
    } else {
        out << "h_" << j << "(" << fixed(tau.real()) << (tau.imag() < 0 ? "" : "+") << fixed(tau.imag())
            << "i) = " << fixed(value.real()) << (value.imag() < 0 ? " - " : " + ") << fixed(std::abs(value.imag()))
            << "i\n";
    }
    return kExitOk;
}

int cmd_groups_list(const std::string &format, std::ostream &out)
{
    if (format == "json") {
        json_io::Json arr = json_io::Json::array();
        for (const auto &n : registry_names()) {
            arr.push_back(json_io::group_summary_to_json(registry_get(n)));
        }
        out << arr.dump() << '\n';
        return kExitOk;
    }
    for (const auto &n : registry_names()) {
        const auto &gd = registry_get(n);
        out << std::left << std::setw(10) << gd.name << " (" << gd.genus << ";";
        for (std::size_t i = 0; i < gd.vertices.size(); ++i) {
            out << (i == 0 ? " " : ", ") << gd.vertices[i].order.to_string();
        }
        out << ")  cusp width " << gd.cusp_width << "  w = " << gd.hauptmodul.to_string(4) << '\n';
    }
    return kExitOk;
}

int cmd_groups_show(const std::string &name, std::int64_t terms, const std::string &format, std::ostream &out)
{
    const auto &gd = registry_get(name);
    if (format == "json") {
        out << json_io::group_to_json(gd, terms).dump() << '\n';
        return kExitOk;
    }
    out << "name        " << gd.name << '\n';
    out << "genus       " << gd.genus << '\n';
    out << "cusp width  " << gd.cusp_width << '\n';
    out << "m, l, r     " << gd.elliptic_count() << ", " << gd.cusp_count() << ", " << gd.vertices.size() << '\n';
    out << "hauptmodul  " << gd.hauptmodul.truncated(terms).to_string(static_cast<std::size_t>(terms)) << '\n';
    for (const auto &v : gd.vertices) {
        out << "vertex " << std::left << std::setw(9) << v.label << " order " << std::setw(4) << v.order.to_string()
            << " value " << to_string(v.value) << '\n';
    }
    for (const auto &e : gd.elements) {
        out << "element " << std::left << std::setw(5) << e.label << ' ' << e.element.to_string() << "  "
            << to_string(classify_element(e.element)) << '\n';
    }
    return kExitOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Bases of automorphic forms for genus-0 Fuchsian groups from a Hauptmodul", "automorph"};
    app.require_subcommand(1);

    std::string group;
    int k = 0;
    std::string format = "text";

    auto *dim = app.add_subcommand("dim", "dimension of the space of weight-k forms");
    dim->add_option("--group", group, "registered group")->required();
    dim->add_option("--weight", k, "even weight k")->required();
    dim->add_option("--format", format, "text or json");

    std::int64_t basis_terms = 50;
    auto *basis = app.add_subcommand("basis", "construct the basis h_0..h_{d-1}");
    basis->add_option("--group", group, "registered group")->required();
    basis->add_option("--weight", k, "even weight k >= 4")->required();
    basis->add_option("--terms", basis_terms, "exact window (units of 1/h)");
    basis->add_option("--format", format, "text or json");

    verify::Options vopts;
    std::string suite = "all";
    std::optional<int> k_min;
    std::optional<int> k_max;
    auto *ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite, "all|holomorphy|automorphy|ledger|oracle|span");
    ver->add_option("--group", vopts.groups, "restrict to these groups");
    ver->add_option("--k-min", k_min, "smallest weight");
    ver->add_option("--k-max", k_max, "largest weight");
    ver->add_option("--terms", vopts.terms, "terms used in numeric evaluation");
    ver->add_option("--format", format, "text or json");

    std::int64_t index = 0;
    std::string tau;
    std::int64_t eval_terms = 80;
    double min_imag = 0.8;
    auto *eval = app.add_subcommand("eval", "evaluate h_j at a point of the upper half-plane");
    eval->add_option("--group", group, "registered group")->required();
    eval->add_option("--weight", k, "even weight k >= 4")->required();
    eval->add_option("--index", index, "form index j");
    eval->add_option("--tau", tau, "point a+bi with b > 0")->required();
    eval->add_option("--terms", eval_terms, "terms summed");
    eval->add_option("--min-imag", min_imag, "smallest admissible Im(tau)");
    eval->add_option("--format", format, "text or json");

    std::string show_name;
    std::int64_t show_terms = 20;
    auto *groups = app.add_subcommand("groups", "registered groups");
    groups->require_subcommand(1);
    auto *list = groups->add_subcommand("list", "list registered groups");
    list->add_option("--format", format, "text or json");
    auto *show = groups->add_subcommand("show", "show one group");
    show->add_option("name", show_name, "group name")->required();
    show->add_option("--terms", show_terms, "Hauptmodul terms shown");
    show->add_option("--format", format, "text or json");

    std::vector<std::string> argv_storage{"automorph"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "automorph: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        check_format(format);
        if (dim->parsed()) {
            return cmd_dim(group, k, format, out);
        }
        if (basis->parsed()) {
            return cmd_basis(group, k, basis_terms, format, out);
        }
        if (ver->parsed()) {
            if (k_min) {
                vopts.k_min = *k_min;
            }
            if (k_max) {
                vopts.k_max = *k_max;
            }
            for (const auto &g : vopts.groups) {
                (void)registry_get(g);
            }
            return cmd_verify(vopts, suite, format, out);
        }
        if (eval->parsed()) {
            return cmd_eval(group, k, index, tau, eval_terms, min_imag, format, out);
        }
        if (list->parsed()) {
            return cmd_groups_list(format, out);
        }
        if (show->parsed()) {
            return cmd_groups_show(show_name, show_terms, format, out);
        }
    } catch (const std::out_of_range &e) {
        err << "automorph: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "automorph: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "automorph: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PrecisionError &e) {
        err << "automorph: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "automorph: no command\n";
    return kExitUsage;
}

} // namespace automorph::cli
