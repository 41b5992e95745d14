#pragma once

#include "tsurf/numeric.hpp"

#include "json.hpp"

#include <string>

namespace tsurf {

using OrderedJson = nlohmann::ordered_json;

/// Parses a JSON document, mapping syntax errors to
/// "malformed document: ...".
nlohmann::json parse_json_document(const std::string& text);

/// Two-space indented dump with a trailing newline; all CLI output and
/// emitters go through this so byte-identical reruns are guaranteed.
std::string dump_json(const OrderedJson& j);

/// Rationals serialize as plain integers when the denominator is one and the
/// value fits in 64 bits, as "p/q" (or big "n") strings otherwise.
OrderedJson json_from_rat(const Rat& r);
OrderedJson json_from_int(const Int& n);
Rat rat_from_json(const nlohmann::json& j);

}  // namespace tsurf
