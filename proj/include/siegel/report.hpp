#pragma once

#include "siegel/engine.hpp"
#include "siegel/hecke.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace siegel {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

/// Integers are serialized as decimal strings, rationals as "p/q".
Json num(Int x);
Json num(const BigInt& x);
Json num(const ExactRational& x);
Json num_list(const std::vector<Int>& xs);

Json to_json(const Weight& w);
Json to_json(const WeylElt& w);
Json to_json(const GradedVirtualRep& module);
Json to_json(const SymbolicClass& cls);
Json to_json(const HeckeMatrix& matrix);

/// Tab separated graded report with header
/// S, degree, weight, mult, central_weight, sheaf_weight, pairings.
/// A non-empty `label` adds a leading "profile" column.
std::string graded_report_tsv(const SymbolicClass& cls, const std::string& label = "", bool header = true);

/// "key<TAB>value" lines for every leaf of a JSON document, keys joined by '.'.
std::string flatten_tsv(const Json& doc);

/// Stable textual form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace siegel
