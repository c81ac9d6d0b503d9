#ifndef AUTOMORPH_JSON_IO_HPP
#define AUTOMORPH_JSON_IO_HPP

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include <automorph/basis.hpp>
#include <automorph/groups.hpp>
#include <automorph/qseries.hpp>

// Canonical JSON encodings. Integers that may grow without bound (series
// coefficients, exact rationals) are decimal strings; key order is fixed.
namespace automorph::json_io
{

using Json = nlohmann::ordered_json;

// {"base_den": h, "prec": B, "terms": [["num", "den", e], ...]} with terms in
// ascending exponent order. Exact series carry "prec": null.
Json series_to_json(const QSeries &f);

// Inverse of series_to_json; throws std::invalid_argument on malformed input.
QSeries series_from_json(const Json &j);

Json ledger_to_json(const OrderLedger &ledger);

// {"group", "k", "d", "window", "derivative", "forms": [...], "ledger": [...]}
Json basis_to_json(const Basis &b);

Json element_to_json(const GroupElement &g);

// Metadata only ("groups list").
Json group_summary_to_json(const GroupData &gd);

// Full record ("groups show"); the Hauptmodul is truncated to `terms`.
Json group_to_json(const GroupData &gd, std::optional<std::int64_t> terms);

} // namespace automorph::json_io

#endif
