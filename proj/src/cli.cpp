#include "twistcolor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistcolor/diagram.hpp"
#include "twistcolor/laurent.hpp"
#include "twistcolor/moves.hpp"

namespace twistcolor {
namespace {

std::uint64_t positive_u64(const Json& v, const std::string& key) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw Error(ErrorKind::parse, "config \"" + key + "\" must be a positive integer");
  return v.get<std::uint64_t>();
}

std::uint64_t positive_u64(const std::string& text, const std::string& key) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-' || v == 0)
    throw Error(ErrorKind::parse, key + " must be a positive integer, got \"" + text + "\"");
  return v;
}

bool parse_bool(const std::string& text, const std::string& key) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw Error(ErrorKind::parse, key + " must be a boolean, got \"" + text + "\"");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "text") return OutputFormat::text;
  throw Error(ErrorKind::parse, "format must be json or text, got \"" + text + "\"");
}

}  // namespace

void apply_config_json(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "node_budget") {
      cfg.node_budget = positive_u64(v, key);
    } else if (key == "brute_force_cap") {
      cfg.brute_force_cap = positive_u64(v, key);
    } else if (key == "automorphism_cap") {
      cfg.automorphism_cap = positive_u64(v, key);
    } else if (key == "verify") {
      if (!v.is_boolean()) throw Error(ErrorKind::parse, "config \"verify\" must be a boolean");
      cfg.verify = v.get<bool>();
    } else if (key == "format") {
      if (!v.is_string()) throw Error(ErrorKind::parse, "config \"format\" must be a string");
      cfg.format = parse_format(v.get<std::string>());
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw Error(ErrorKind::parse, "config \"seed\" must be a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else {
      throw Error(ErrorKind::parse, "unknown config key \"" + key + "\"");
    }
  }
}

void apply_env(RunConfig& cfg, const EnvLookup& env) {
  if (auto v = env("TWISTCOLOR_NODE_BUDGET")) cfg.node_budget = positive_u64(*v, "TWISTCOLOR_NODE_BUDGET");
  if (auto v = env("TWISTCOLOR_BRUTE_FORCE_CAP")) cfg.brute_force_cap = positive_u64(*v, "TWISTCOLOR_BRUTE_FORCE_CAP");
  if (auto v = env("TWISTCOLOR_AUTOMORPHISM_CAP"))
    cfg.automorphism_cap = positive_u64(*v, "TWISTCOLOR_AUTOMORPHISM_CAP");
  if (auto v = env("TWISTCOLOR_VERIFY")) cfg.verify = parse_bool(*v, "TWISTCOLOR_VERIFY");
  if (auto v = env("TWISTCOLOR_FORMAT")) cfg.format = parse_format(*v);
  if (auto v = env("TWISTCOLOR_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(*v, &used);
      if (used != v->size() || (*v)[0] == '-') throw std::invalid_argument("seed");
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "TWISTCOLOR_SEED must be a non-negative integer");
    }
  }
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::axiom_violation: return exit_code::check_failed;
    case ErrorKind::resource: return exit_code::resource;
    default: return exit_code::usage;
  }
}

namespace {

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  RunConfig cfg;

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error(ErrorKind::invalid_argument, "standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  Structure structure(const std::string& path, bool verify) { return parse_structure(read(path), verify); }
  TwistedDiagram diagram(const std::string& path) { return parse_diagram(read(path)); }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }
  bool text() const { return cfg.format == OutputFormat::text; }
  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

struct QuandleSource {
  std::size_t dihedral = 0;
  std::size_t alexander = 0;
  std::int64_t t = -1;
  std::string file;

  void add_to(CLI::App* app) {
    app->add_option("--dihedral", dihedral, "dihedral quandle of order N");
    app->add_option("--alexander", alexander, "Alexander quandle Z/N with --t");
    app->add_option("--t", t, "Alexander parameter (a unit mod N)");
    app->add_option("--quandle", file, "quandle JSON file");
  }

  bool given() const { return dihedral != 0 || alexander != 0 || !file.empty(); }

  FiniteQuandle get(Session& s) const {
    const int sources = (dihedral != 0) + (alexander != 0) + (!file.empty());
    if (sources != 1) throw Error(ErrorKind::invalid_argument, "give exactly one of --dihedral, --alexander, --quandle");
    if (dihedral != 0) return make_dihedral_quandle(dihedral);
    if (alexander != 0) {
      if (t < 0) throw Error(ErrorKind::invalid_argument, "--alexander needs --t");
      return make_alexander_quandle(alexander, t);
    }
    Structure st = s.structure(file, s.cfg.verify);
    if (auto q = std::get_if<FiniteQuandle>(&st)) return *q;
    throw Error(ErrorKind::invalid_argument, file + " is not a quandle file");
  }
};

// "id", "+k" (x -> x+k mod n) or a comma separated table.
ElemMap parse_permutation(const std::string& text, std::size_t n, const std::string& what) {
  ElemMap f;
  if (text.empty() || text == "id") return identity_map(n);
  try {
    if (text[0] == '+') {
      const std::size_t k = std::stoul(text.substr(1));
      for (std::size_t x = 0; x < n; ++x) f.push_back(static_cast<Elem>((x + k) % n));
      return f;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(static_cast<Elem>(std::stoul(item)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument, what + " must be id, +k or a comma separated table");
  }
  if (f.size() != n || !is_permutation(f))
    throw Error(ErrorKind::invalid_argument, what + " must be a permutation of 0.." + std::to_string(n - 1));
  return f;
}

Biquandle as_biquandle(const Structure& s) {
  if (auto q = std::get_if<FiniteQuandle>(&s)) return derived_biquandle(*q);
  if (auto x = std::get_if<Biquandle>(&s)) return *x;
  return std::get<VTStructure>(s).base();
}

Json coloring_json(const DiagramGraph& d, const Coloring& c) {
  Json edges = Json::object();
  for (EdgeId e = 0; e < d.edge_count(); ++e) edges[d.edge_name(e)] = c.edge_colors[e];
  Json j;
  j["edges"] = std::move(edges);
  if (!c.loop_colors.empty()) j["loops"] = c.loop_colors;
  return j;
}

std::string witness_text(const std::vector<Elem>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

int cmd_check(Session& s, const std::string& path) {
  Structure st = s.structure(path, false);
  const auto reports = structure_reports(st);
  const bool pass = structure_verified(st);
  if (s.text()) {
    for (const auto& [suite, r] : reports)
      for (const AxiomResult& a : r.results()) {
        s.out() << (a.pass ? "PASS " : "FAIL ") << suite << " " << a.name;
        if (!a.pass) s.out() << " witness=" << witness_text(a.witness);
        s.out() << "\n";
      }
    s.out() << (pass ? "pass" : "fail") << "\n";
  } else {
    Json j;
    j["structure"] = path;
    j["kind"] = structure_kind(st);
    j["n"] = structure_size(st);
    j["pass"] = pass;
    Json reps = Json::object();
    for (const auto& [suite, r] : reports) reps[suite] = to_json(r);
    j["reports"] = std::move(reps);
    if (auto vt = std::get_if<VTStructure>(&st)) j["certificate"] = vt->certificate();
    s.emit(j);
  }
  return pass ? exit_code::ok : exit_code::check_failed;
}

struct MakeArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::size_t n = 0;
  std::int64_t t = -1;
  QuandleSource source;
  std::string biquandle_file;
  std::string f = "id";
  std::string g = "id";
  std::string output;
};

int cmd_make(Session& s, MakeArgs& a) {
  Structure result = make_dihedral_quandle(1);
  const std::string& k = a.kind;
  if (k == "dihedral" || k == "alexander") {
    std::size_t n = a.n ? a.n : (k == "dihedral" ? a.source.dihedral : a.source.alexander);
    if (n == 0) throw Error(ErrorKind::invalid_argument, "make " + k + " needs an order");
    if (k == "dihedral") {
      result = make_dihedral_quandle(n);
    } else {
      if (a.source.t < 0) throw Error(ErrorKind::invalid_argument, "make alexander needs --t");
      result = make_alexander_quandle(n, a.source.t);
    }
  } else if (k == "derived") {
    result = derived_biquandle(a.source.get(s));
  } else if (k == "standard-twisted-product") {
    result = standard_twisted_product(a.source.get(s));
  } else if (k == "remark") {
    result = remark_structure(a.source.get(s));
  } else if (k == "twisted-product") {
    Biquandle x0 = !a.biquandle_file.empty() ? as_biquandle(s.structure(a.biquandle_file, s.cfg.verify))
                                             : derived_biquandle(a.source.get(s));
    ElemMap f = parse_permutation(a.f, x0.size(), "--f");
    ElemMap g = parse_permutation(a.g, x0.size(), "--g");
    result = twisted_product(x0, f, g);
  } else if (k == "direct-product") {
    if (a.inputs.size() != 2) throw Error(ErrorKind::invalid_argument, "make direct-product needs two structure files");
    result = direct_product(as_biquandle(s.structure(a.inputs[0], s.cfg.verify)),
                            as_biquandle(s.structure(a.inputs[1], s.cfg.verify)));
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown structure kind \"" + k + "\"");
  }
  const std::string text = serialize_structure(result);
  if (a.output.empty() || a.output == "-") {
    s.out() << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot write " + a.output);
    f << text;
  }
  return exit_code::ok;
}

struct ColorArgs {
  std::string diagram, structure;
  bool emit = false;
  bool force = false;
  bool brute = false;
};

int cmd_color(Session& s, const ColorArgs& a) {
  Structure st = s.structure(a.structure, s.cfg.verify && !a.force);
  TwistedDiagram d = s.diagram(a.diagram);
  if (!a.force && !structure_verified(st))
    throw Error(ErrorKind::axiom_violation, "structure fails its axioms; use --force to count anyway");
  const ColoringRules rules = coloring_rules(st);

  ColoringResult r;
  if (a.brute) {
    r.count = brute_force_colorings(d, rules, s.cfg.brute_force_cap);
  } else {
    ColoringOptions opts;
    opts.emit = a.emit;
    opts.force = true;
    opts.node_budget = s.cfg.node_budget;
    r = count_colorings(d, rules, opts);
  }
  if (s.text()) {
    s.out() << r.count.str() << "\n";
    for (const Coloring& c : r.colorings) s.out() << coloring_json(d, c).dump() << "\n";
    return exit_code::ok;
  }
  Json j;
  j["diagram"] = a.diagram;
  j["structure"] = a.structure;
  j["count"] = r.count.str();
  if (a.emit && !a.brute) {
    Json w = Json::array();
    for (const Coloring& c : r.colorings) w.push_back(coloring_json(d, c));
    j["witnesses"] = std::move(w);
  }
  s.emit(j);
  return exit_code::ok;
}

int cmd_delta(Session& s, const std::string& path, std::size_t m) {
  Structure st = s.structure(path, s.cfg.verify);
  auto q = std::get_if<FiniteQuandle>(&st);
  if (!q) throw Error(ErrorKind::invalid_argument, path + " is not a quandle file");
  DeltaSet ds = delta_set(*q, m);
  if (s.text()) {
    s.out() << ds.size() << "\n";
    for (Pair p : ds.members) s.out() << p.first << " " << p.second << "\n";
    return exit_code::ok;
  }
  Json j;
  j["structure"] = path;
  j["m"] = m;
  j["size"] = ds.size();
  Json members = Json::array();
  for (Pair p : ds.members) members.push_back(Json::array({p.first, p.second}));
  j["members"] = std::move(members);
  s.emit(j);
  return exit_code::ok;
}

int cmd_detect(Session& s, const std::string& diagram, const std::string& path) {
  Structure st = s.structure(path, s.cfg.verify);
  TwistedDiagram d = s.diagram(diagram);
  auto q = std::get_if<FiniteQuandle>(&st);
  if (!q) throw Error(ErrorKind::invalid_argument, path + " is not a quandle file");
  NonvirtualVerdict v = detect_nonvirtual(d, *q);
  if (s.text()) {
    s.out() << (v.nonvirtual ? "nonvirtual" : "inconclusive") << " " << v.count.str() << " "
            << v.threshold.str() << "\n";
    return exit_code::ok;
  }
  Json j;
  j["diagram"] = diagram;
  j["structure"] = path;
  j["count"] = v.count.str();
  j["threshold"] = v.threshold.str();
  j["nonvirtual"] = v.nonvirtual;
  s.emit(j);
  return exit_code::ok;
}

int cmd_moves(Session& s, const std::string& path, const std::vector<std::string>& names) {
  Structure st = s.structure(path, s.cfg.verify);
  std::vector<MoveFamily> families;
  for (const std::string& n : names) {
    auto f = parse_family(n);
    if (!f) throw Error(ErrorKind::invalid_argument, "unknown move family \"" + n + "\"");
    families.push_back(*f);
  }
  const bool has_t = !std::holds_alternative<Biquandle>(st);
  if (families.empty())
    for (MoveFamily f : kAllMoveFamilies)
      if (has_t || family_name(f)[0] != 'T') families.push_back(f);
  for (MoveFamily f : families)
    if (!has_t && family_name(f)[0] == 'T')
      throw Error(ErrorKind::invalid_argument, "a plain biquandle has no bar rule for " + std::string(family_name(f)));

  MoveReport report = check_move_invariance(coloring_rules(st), families);
  if (s.text()) {
    for (const FamilyReport& f : report.families) {
      std::size_t passed = 0;
      for (const VariantResult& v : f.variants) passed += v.pass;
      s.out() << (f.pass() ? "PASS " : "FAIL ") << family_name(f.family) << " " << passed << "/"
              << f.variants.size() << "\n";
    }
  } else {
    Json j;
    j["structure"] = path;
    j["pass"] = report.all_pass();
    Json fams = Json::array();
    for (const FamilyReport& f : report.families) {
      Json fj;
      fj["family"] = family_name(f.family);
      fj["pass"] = f.pass();
      Json vars = Json::array();
      for (const VariantResult& v : f.variants) {
        Json vj;
        vj["id"] = v.id;
        vj["pass"] = v.pass;
        if (v.witness) {
          Json w;
          w["in"] = v.witness->in;
          w["out"] = v.witness->out;
          w["left"] = v.witness->left_count;
          w["right"] = v.witness->right_count;
          vj["witness"] = std::move(w);
        } else {
          vj["witness"] = nullptr;
        }
        vars.push_back(std::move(vj));
      }
      fj["variants"] = std::move(vars);
      fams.push_back(std::move(fj));
    }
    j["families"] = std::move(fams);
    s.emit(j);
  }
  return report.all_pass() ? exit_code::ok : exit_code::check_failed;
}

int cmd_automorphisms(Session& s, const std::string& path) {
  Biquandle x = as_biquandle(s.structure(path, s.cfg.verify));
  auto autos = automorphisms(x, s.cfg.automorphism_cap);
  if (s.text()) {
    for (const auto& h : autos) s.out() << witness_text(h.map) << "\n";
    return exit_code::ok;
  }
  Json j;
  j["structure"] = path;
  j["n"] = x.size();
  j["count"] = autos.size();
  Json list = Json::array();
  for (const auto& h : autos) list.push_back(h.map);
  j["automorphisms"] = std::move(list);
  s.emit(j);
  return exit_code::ok;
}

int cmd_jones(Session& s, std::size_t m) {
  LaurentPolynomial p = fm_twisted_jones_closed_form(m);
  if (s.text()) {
    s.out() << p.to_string() << "\n";
    return exit_code::ok;
  }
  Json j;
  j["m"] = m;
  j["polynomial"] = p.to_string();
  Json coeffs = Json::array();
  for (const auto& [e, c] : p.coefficients()) coeffs.push_back(Json::array({e, c.str()}));
  j["terms"] = std::move(coeffs);
  s.emit(j);
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            const EnvLookup& env) {
  CLI::App app{"Colorings of twisted link diagrams by finite vt-structured biquandles", "twistcolor"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format;
  bool no_verify = false;
  std::uint64_t node_budget = 0, brute_cap = 0, seed = 0;
  std::size_t auto_cap = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  auto* format_opt = app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  auto* verify_opt = app.add_flag("--no-verify", no_verify, "load structures without checking axioms");
  auto* budget_opt = app.add_option("--node-budget", node_budget, "search assignment budget")->check(CLI::PositiveNumber);
  auto* brute_opt = app.add_option("--brute-force-cap", brute_cap, "brute force assignment cap")->check(CLI::PositiveNumber);
  auto* auto_opt = app.add_option("--automorphism-cap", auto_cap, "largest order for automorphism search")
                       ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "seed for random diagrams");

  std::string p1, p2;
  std::size_t m = 0;

  auto* check = app.add_subcommand("check", "check the axioms of a structure file");
  check->add_option("structure", p1, "structure file")->required();

  MakeArgs make_args;
  auto* make = app.add_subcommand("make", "write a structure file");
  make->add_option("kind", make_args.kind,
                   "dihedral | alexander | derived | twisted-product | standard-twisted-product | remark | "
                   "direct-product")
      ->required();
  make->add_option("n", make_args.n, "order for dihedral/alexander");
  make->add_option("--input", make_args.inputs, "structure files for direct-product");
  make_args.source.add_to(make);
  make->add_option("--biquandle", make_args.biquandle_file, "base biquandle file for twisted-product");
  make->add_option("--f", make_args.f, "automorphism f: id, +k or a table");
  make->add_option("--g", make_args.g, "automorphism g: id, +k or a table");
  make->add_option("-o,--output", make_args.output, "output file");

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "count colorings of a diagram");
  color->add_option("diagram", color_args.diagram, "diagram file or -")->required();
  color->add_option("structure", color_args.structure, "structure file")->required();
  color->add_flag("--emit", color_args.emit, "list every coloring");
  color->add_flag("--force", color_args.force, "count with a structure that fails its axioms");
  color->add_flag("--brute-force", color_args.brute, "use exhaustive enumeration");

  auto* fm = app.add_subcommand("fm", "print the m-foil diagram");
  fm->add_option("m", m, "number of classical crossings")->required()->check(CLI::PositiveNumber);

  auto* delta = app.add_subcommand("delta", "list the delta set of a quandle");
  delta->add_option("quandle", p1, "quandle file")->required();
  delta->add_option("m", m, "m")->required()->check(CLI::PositiveNumber);

  auto* detect = app.add_subcommand("detect", "test whether a diagram is not a virtual link");
  detect->add_option("diagram", p1, "diagram file or -")->required();
  detect->add_option("quandle", p2, "quandle file")->required();

  std::vector<std::string> families;
  auto* moves = app.add_subcommand("moves", "check invariance under the extended Reidemeister moves");
  moves->add_option("structure", p1, "structure file")->required();
  moves->add_option("--family", families, "restrict to these families");

  auto* autos = app.add_subcommand("automorphisms", "list biquandle automorphisms");
  autos->add_option("structure", p1, "structure file")->required();

  auto* jones = app.add_subcommand("jones-fm", "twisted Jones polynomial of the m-foil");
  jones->add_option("m", m, "m")->required()->check(CLI::PositiveNumber);

  RandomDiagramOptions ropts;
  bool no_classical = false, no_virtual = false, no_bars = false;
  auto* random = app.add_subcommand("random", "print a random closed diagram");
  random->add_option("--nodes", ropts.nodes, "number of nodes");
  random->add_option("--loops", ropts.max_free_loops, "maximum number of free loops");
  random->add_flag("--no-classical", no_classical, "no classical crossings");
  random->add_flag("--no-virtual", no_virtual, "no virtual crossings");
  random->add_flag("--no-bars", no_bars, "no bars");

  std::vector<std::string> argv_store{"twistcolor"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  Session s(in, out);
  try {
    if (!config_path.empty()) {
      Json j;
      try {
        j = Json::parse(s.read(config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("invalid config JSON: ") + e.what());
      }
      apply_config_json(s.cfg, j);
    }
    apply_env(s.cfg, env);
    if (format_opt->count()) s.cfg.format = parse_format(format);
    if (verify_opt->count()) s.cfg.verify = !no_verify;
    if (budget_opt->count()) s.cfg.node_budget = node_budget;
    if (brute_opt->count()) s.cfg.brute_force_cap = brute_cap;
    if (auto_opt->count()) s.cfg.automorphism_cap = auto_cap;
    if (seed_opt->count()) s.cfg.seed = seed;

    if (check->parsed()) return cmd_check(s, p1);
    if (make->parsed()) return cmd_make(s, make_args);
    if (color->parsed()) return cmd_color(s, color_args);
    if (fm->parsed()) {
      out << serialize_diagram(make_fm(m));
      return exit_code::ok;
    }
    if (delta->parsed()) return cmd_delta(s, p1, m);
    if (detect->parsed()) return cmd_detect(s, p1, p2);
    if (moves->parsed()) return cmd_moves(s, p1, families);
    if (autos->parsed()) return cmd_automorphisms(s, p1);
    if (jones->parsed()) return cmd_jones(s, m);
    if (random->parsed()) {
      ropts.classical = !no_classical;
      ropts.virtual_crossings = !no_virtual;
      ropts.bars = !no_bars;
      out << "# seed " << s.cfg.seed << "\n" << serialize_diagram(random_diagram(s.cfg.seed, ropts));
      return exit_code::ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return exit_code::resource;
  }
  return exit_code::usage;
}

}  // namespace twistcolor
