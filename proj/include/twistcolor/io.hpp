#pragma once

// JSON structure files.
//
//   {"kind":"quandle","n":N,"op":[[...],...]}          op[a][b] = a*b
//   {"kind":"biquandle","n":N,"R":[[[k,l],...],...]}   R[i][j] = [k,l] means R(i,j) = (k,l)
//   {"kind":"vt","n":N,"R":...,"V":...,"T":[...],"n0":N0}
//
// In a vt file over a pair carrier Q x Q, "n0" = |Q| and (a,b) is element
// a*n0 + b; "n0" is omitted for other carriers.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "twistcolor/biquandle.hpp"
#include "twistcolor/coloring.hpp"
#include "twistcolor/quandle.hpp"
#include "twistcolor/structures.hpp"

namespace twistcolor {

using Json = nlohmann::ordered_json;
using Structure = std::variant<FiniteQuandle, Biquandle, VTStructure>;

std::string_view structure_kind(const Structure& s);
std::size_t structure_size(const Structure& s);

/// Throws parse on malformed JSON or shape errors. With `verify`, also throws
/// axiom_violation naming the first failing axiom.
Structure structure_from_json(const Json& j, bool verify = true);
Structure parse_structure(std::string_view text, bool verify = true);

Json to_json(const FiniteQuandle& q);
Json to_json(const Biquandle& x);
Json to_json(const VTStructure& s);
Json to_json(const Structure& s);
Json to_json(const AxiomReport& r);

/// Compact JSON followed by a newline; byte-stable.
std::string serialize_structure(const Structure& s);

/// Named axiom reports: "quandle" for quandles; "biquandle", "v", "t" for
/// vt-structures.
std::vector<std::pair<std::string, AxiomReport>> structure_reports(const Structure& s);
bool structure_verified(const Structure& s);

/// Quandles color through their standard twisted product; a plain biquandle
/// gets V = tau and no bar rule.
ColoringRules coloring_rules(const Structure& s);
/// Quandles become their standard twisted product; throws unsupported for a
/// plain biquandle.
VTStructure as_vt(const Structure& s);

}  // namespace twistcolor
