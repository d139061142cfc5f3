#include "twistcolor/io.hpp"

namespace twistcolor {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::parse, msg); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t read_size(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) bad(std::string("\"") + key + "\" must be a positive integer");
  const auto n = v.get<std::uint64_t>();
  if (n > (1u << 16)) bad(std::string("\"") + key + "\" is too large");
  return static_cast<std::size_t>(n);
}

Elem read_elem(const Json& v, std::size_t n, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
    bad(std::string(what) + " entry must be an integer in [0, " + std::to_string(n) + ")");
  return static_cast<Elem>(v.get<std::uint64_t>());
}

ElemMap read_map(const Json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) bad(std::string(what) + " must be an array of length " + std::to_string(n));
  ElemMap out;
  for (const Json& e : v) out.push_back(read_elem(e, n, what));
  return out;
}

PairMap read_pair_map(const Json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) bad(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<Pair> values;
  values.reserve(n * n);
  for (const Json& row : v) {
    if (!row.is_array() || row.size() != n) bad(std::string(what) + " rows must have " + std::to_string(n) + " entries");
    for (const Json& p : row) {
      if (!p.is_array() || p.size() != 2) bad(std::string(what) + " entries must be pairs [k,l]");
      values.push_back({read_elem(p[0], n, what), read_elem(p[1], n, what)});
    }
  }
  return PairMap(n, std::move(values));
}

Json pair_map_json(const PairMap& m) {
  const std::size_t n = m.carrier_size();
  Json rows = Json::array();
  for (Elem x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < n; ++y) {
      Pair p = m(x, y);
      row.push_back(Json::array({p.first, p.second}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void refuse(const std::string& suite, const AxiomReport& r) {
  const AxiomResult* f = r.first_failure();
  std::string msg = suite + " axiom " + (f ? f->name : std::string("?")) + " fails";
  if (f && !f->detail.empty()) msg += ": " + f->detail;
  throw Error(ErrorKind::axiom_violation, msg);
}

}  // namespace

std::string_view structure_kind(const Structure& s) {
  static constexpr std::string_view names[] = {"quandle", "biquandle", "vt"};
  return names[s.index()];
}

std::size_t structure_size(const Structure& s) {
  return std::visit([](const auto& x) { return x.size(); }, s);
}

Structure structure_from_json(const Json& j, bool verify) {
  if (!j.is_object()) bad("structure file must be a JSON object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  const std::size_t n = read_size(j, "n");

  if (k == "quandle") {
    const Json& op = field(j, "op");
    if (!op.is_array() || op.size() != n) bad("op must have " + std::to_string(n) + " rows");
    std::vector<Elem> table;
    for (const Json& row : op) {
      if (!row.is_array() || row.size() != n) bad("op rows must have " + std::to_string(n) + " entries");
      for (const Json& e : row) table.push_back(read_elem(e, n, "op"));
    }
    FiniteQuandle q(n, std::move(table));
    if (verify) {
      AxiomReport r = check_quandle(q);
      if (!r.all_pass()) refuse("quandle", r);
    }
    return q;
  }
  if (k == "biquandle") {
    Biquandle x(read_pair_map(field(j, "R"), n, "R"));
    if (verify && !x.is_biquandle()) refuse("biquandle", x.report());
    return x;
  }
  if (k == "vt") {
    VTStructure s(Biquandle(read_pair_map(field(j, "R"), n, "R")), read_pair_map(field(j, "V"), n, "V"),
                  read_map(field(j, "T"), n, "T"));
    if (auto it = j.find("n0"); it != j.end()) {
      const std::size_t n0 = read_size(j, "n0");
      if (n0 * n0 != n) bad("\"n0\" squared must equal \"n\"");
      s.set_pair_base(n0);
    }
    if (verify) {
      if (!s.base().is_biquandle()) refuse("biquandle", s.biquandle_report());
      if (!s.v_report().all_pass()) refuse("v-structure", s.v_report());
      if (!s.t_report().all_pass()) refuse("t-structure", s.t_report());
    }
    return s;
  }
  bad("unknown structure kind \"" + k + "\"");
}

Structure parse_structure(std::string_view text, bool verify) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return structure_from_json(j, verify);
}

Json to_json(const FiniteQuandle& q) {
  Json j;
  j["kind"] = "quandle";
  j["n"] = q.size();
  j["op"] = q.rows();
  return j;
}

Json to_json(const Biquandle& x) {
  Json j;
  j["kind"] = "biquandle";
  j["n"] = x.size();
  j["R"] = pair_map_json(x.R());
  return j;
}

Json to_json(const VTStructure& s) {
  Json j;
  j["kind"] = "vt";
  j["n"] = s.size();
  if (s.pair_base() != 0) j["n0"] = s.pair_base();
  j["R"] = pair_map_json(s.R());
  j["V"] = pair_map_json(s.V());
  j["T"] = s.T();
  return j;
}

Json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

Json to_json(const AxiomReport& r) {
  Json out = Json::array();
  for (const AxiomResult& a : r.results()) {
    Json e;
    e["name"] = a.name;
    e["pass"] = a.pass;
    e["witness"] = a.witness;
    if (!a.detail.empty()) e["detail"] = a.detail;
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_structure(const Structure& s) { return to_json(s).dump() + "\n"; }

std::vector<std::pair<std::string, AxiomReport>> structure_reports(const Structure& s) {
  if (auto q = std::get_if<FiniteQuandle>(&s)) return {{"quandle", check_quandle(*q)}};
  if (auto x = std::get_if<Biquandle>(&s)) return {{"biquandle", x->report()}};
  const auto& vt = std::get<VTStructure>(s);
  return {{"biquandle", vt.biquandle_report()}, {"v", vt.v_report()}, {"t", vt.t_report()}};
}

bool structure_verified(const Structure& s) {
  for (const auto& [name, r] : structure_reports(s))
    if (!r.all_pass()) return false;
  return true;
}

ColoringRules coloring_rules(const Structure& s) {
  if (auto q = std::get_if<FiniteQuandle>(&s)) return ColoringRules::from(standard_twisted_product(*q));
  if (auto x = std::get_if<Biquandle>(&s))
    return ColoringRules{x->size(), x->R(), PairMap::transposition(x->size()), std::nullopt};
  return ColoringRules::from(std::get<VTStructure>(s));
}

VTStructure as_vt(const Structure& s) {
  if (auto q = std::get_if<FiniteQuandle>(&s)) return standard_twisted_product(*q);
  if (auto vt = std::get_if<VTStructure>(&s)) return *vt;
  throw Error(ErrorKind::unsupported, "a plain biquandle has no v- or t-structure");
}

}  // namespace twistcolor
