#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xmodrep/xmodrep.hpp"

using namespace xmodrep;
using json_io::json;

namespace {

struct RunConfig {
  std::string input;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t max_group = 512;
  std::size_t max_dim = 2500;
  int ribbon = 0;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

XModPtr load_xmod(const RunConfig& cfg) {
  auto x = json_io::parse_xmod(read_json(cfg.input));
  if (x->g_order() > cfg.max_group || x->h_order() > cfg.max_group)
    fail("OrderBoundExceeded", "group order exceeds the cap", {static_cast<long>(x->g_order()), static_cast<long>(x->h_order())});
  return x;
}

StabilizerDataPtr load_data(const RunConfig& cfg) { return std::make_shared<StabilizerData>(load_xmod(cfg), cfg.seed, cfg.max_group); }

AxiomResult run_check(const std::string& name, const std::function<void()>& f) {
  AxiomResult r{name, true, {}, {}};
  try {
    f();
  } catch (const Error& e) {
    r.pass = false;
    r.witness = e.witness();
    r.detail = e.what();
  }
  return r;
}

int cmd_validate(const RunConfig& cfg) {
  auto spec = json_io::parse_xmod_spec(read_json(cfg.input));
  AxiomReport rep;
  const auto& mu = spec.mu;
  const auto& gamma = spec.gamma;
  rep.results.push_back(run_check("action", [&] { validate_action(mu); }));
  rep.results.push_back(run_check("homomorphism", [&] { validate_homomorphism(gamma); }));
  const bool maps_ok = rep.results[0].pass && rep.results[1].pass;
  const auto& G = *mu.group;
  const auto& H = *mu.set_group;
  auto skipped = [&](const std::string& name) { return AxiomResult{name, false, {}, "skipped: action or homomorphism invalid"}; };
  if (maps_ok) {
    rep.results.push_back(run_check("equivariance", [&] {
      for (int a = 0; a < static_cast<int>(G.order()); ++a)
        for (int x = 0; x < static_cast<int>(H.order()); ++x)
          if (gamma(mu(a, x)) != G.conj(a, gamma(x))) fail("EquivarianceViolation", "gamma(g.h) != g gamma(h) g^-1", {a, x});
    }));
    rep.results.push_back(run_check("peiffer", [&] {
      for (int x = 0; x < static_cast<int>(H.order()); ++x)
        for (int n = 0; n < static_cast<int>(H.order()); ++n)
          if (mu(gamma(x), n) != H.conj(x, n)) fail("PeifferViolation", "gamma(h).n != h n h^-1", {x, n});
    }));
  } else {
    rep.results.push_back(skipped("equivariance"));
    rep.results.push_back(skipped("peiffer"));
  }
  json out{{"valid", rep.all_pass()}, {"axioms", json_io::report_to_json(rep)}, {"order_G", G.order()}, {"order_H", H.order()}};
  if (rep.all_pass()) {
    auto x = CrossedModule::make_unchecked(mu, gamma, spec.name);
    out["orbits"] = x->orbit_count();
  }
  emit(out);
  return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& axioms) {
  auto x = load_xmod(cfg);
  std::vector<std::string> which;
  std::stringstream ss(axioms);
  for (std::string w; std::getline(ss, w, ',');) {
    if (w == "rmatrix") w = "quasitriangular";
    if (w != "hopf" && w != "quasitriangular" && w != "ribbon") fail("UnknownAxiom", "unknown axiom family " + w);
    which.push_back(w);
  }
  DHopf d(x);
  const auto rep = d.verify_axioms(which, cfg.max_dim);
  emit({{"all_pass", rep.all_pass()}, {"axioms", json_io::report_to_json(rep)}});
  return rep.all_pass() ? 0 : 1;
}

int cmd_chartable(const RunConfig& cfg) {
  auto sd = load_data(cfg);
  const auto t = xmod_character_table(*sd);
  if (cfg.format == "json") emit(json_io::chartable_to_json(*sd, t));
  else std::cout << json_io::chartable_to_text(*sd, t);
  return 0;
}

int cmd_center(const RunConfig& cfg) {
  auto sd = load_data(cfg);
  DHopf d(sd->xmod());
  if (static_cast<std::size_t>(d.dim()) > cfg.max_dim) fail("CapExceeded", "|G||H| exceeds the cap", {d.dim(), static_cast<long>(cfg.max_dim)});
  json basis = json::array(), idems = json::array();
  for (const auto& c : d.center_basis()) basis.push_back({{"orbit", c.orbit}, {"stab_class", c.stab_class}, {"element", json_io::tensor_to_json(d, c.element)}});
  for (const auto& li : d.central_idempotents(*sd)) idems.push_back({{"label", json_io::label_to_json(*sd, li.label)}, {"element", json_io::tensor_to_json(d, li.element)}});
  emit({{"center_dimension", basis.size()}, {"basis", basis}, {"idempotents", idems}});
  return 0;
}

int cmd_simples(const RunConfig& cfg) {
  auto sd = load_data(cfg);
  DHopf d(sd->xmod());
  json labels = json::array(), profile = json::array(), ribbon = json::array();
  for (const auto& l : sd->labels()) {
    auto j = json_io::label_to_json(*sd, l);
    j["degree"] = sd->degree(l);
    j["orbit_size"] = sd->orbit_size(l.orbit);
    j["dimension"] = sd->dimension(l);
    j["twist"] = json_io::scalar_to_json(twist_scalar(*sd, l));
    labels.push_back(j);
  }
  for (const auto& [l, s] : d.wedderburn_profile(*sd)) profile.push_back({{"name", sd->name(l)}, {"block", s}});
  for (int c : d.ribbon_group()) ribbon.push_back(sd->xmod()->G->name(c));
  if (cfg.format == "text") {
    for (const auto& j : labels)
      std::cout << j["name"].get<std::string>() << "  dim " << j["dimension"] << "  twist " << twist_scalar(*sd, {j["orbit"], j["irrep"]}).to_string() << "\n";
    std::cout << "ribbon choices: " << ribbon.dump() << "\n";
  } else {
    emit({{"labels", labels}, {"wedderburn", profile}, {"ribbon_group", ribbon}});
  }
  return 0;
}

int cmd_fusion(const RunConfig& cfg, const std::string& method) {
  auto sd = load_data(cfg);
  FusionEngine f(sd);
  const auto& ls = f.labels();
  const std::size_t L = ls.size();
  std::vector<long> N(L * L * L, 0);
  if (method == "char" || method == "all") {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b)
        for (std::size_t c = 0; c < L; ++c) N[(a * L + b) * L + c] = f.coefficient_char(ls[a], ls[b], ls[c]);
  }
  if (method == "reduced" || method == "all") {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b)
        for (std::size_t c = 0; c < L; ++c) N[(a * L + b) * L + c] = f.coefficient_reduced(ls[a], ls[b], ls[c]);
  }
  if (method == "explicit" || method == "all") {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) {
        for (std::size_t c = 0; c < L; ++c) N[(a * L + b) * L + c] = 0;
        for (const auto& [c, n] : f.by_decomposition(ls[a], ls[b])) N[(a * L + b) * L + sd->label_index(c)] = n;
      }
  }
  if (method != "char" && method != "reduced" && method != "explicit" && method != "all") fail("UnknownMethod", "unknown fusion method " + method);
  if (cfg.format == "text") {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) {
        std::cout << sd->name(ls[a]) << " x " << sd->name(ls[b]) << " =";
        bool first = true;
        for (std::size_t c = 0; c < L; ++c) {
          const long n = N[(a * L + b) * L + c];
          if (!n) continue;
          std::cout << (first ? " " : " + ") << (n > 1 ? std::to_string(n) + " " : "") << sd->name(ls[c]);
          first = false;
        }
        std::cout << "\n";
      }
    return 0;
  }
  json labels = json::array(), table = json::array();
  for (const auto& l : ls) labels.push_back(json_io::label_to_json(*sd, l));
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        if (const long n = N[(a * L + b) * L + c]) table.push_back({{"a", a}, {"b", b}, {"c", c}, {"N", n}});
  emit({{"labels", labels}, {"method", method}, {"table", table}});
  return 0;
}

bool close(const InvariantValue& a, const InvariantValue& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return std::abs(a.value - b.value) < 1e-9;
}

int cmd_invariant(const RunConfig& cfg, const std::string& tangle, const std::string& braid) {
  if (tangle.empty() == braid.empty()) throw CLI::ValidationError("exactly one of --tangle and --braid is required");
  auto sd = load_data(cfg);
  if (!tangle.empty()) {
    const auto t = json_io::tangle_from_json(*sd, read_json(tangle));
    emit(json_io::invariant_to_json(evaluate_closed(sd, t, ribbon_choice_element(*sd, cfg.ribbon))));
    return 0;
  }
  auto l = json_io::braid_from_json(*sd, read_json(braid));
  if (!l.colors.empty()) {
    emit(json_io::invariant_to_json(link_invariant(sd, l, cfg.ribbon)));
    return 0;
  }
  // no colors: sweep every simple over every component
  l.colors.assign(static_cast<std::size_t>(std::max(l.strands, 0)), Color{sd->unit_label(), nullptr});
  const auto comps = braid_components(l);
  const auto& ls = sd->labels();
  json labels = json::array();
  for (const auto& a : ls) labels.push_back(sd->name(a));
  std::vector<std::size_t> pick(static_cast<std::size_t>(comps.count), 0);
  std::map<std::vector<std::size_t>, InvariantValue> values;
  while (true) {
    for (int p = 0; p < l.strands; ++p) l.colors[static_cast<std::size_t>(p)].label = ls[pick[static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(p)])]];
    values.emplace(pick, link_invariant(sd, l, cfg.ribbon));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == ls.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  json out{{"labels", labels}, {"components", comps.count}};
  if (comps.count == 2) {
    json matrix = json::array();
    bool symmetric = true;
    for (std::size_t a = 0; a < ls.size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < ls.size(); ++b) {
        row.push_back(json_io::invariant_to_json(values.at({a, b}))["scalar"]);
        if (!close(values.at({a, b}), values.at({b, a}))) symmetric = false;
      }
      matrix.push_back(row);
    }
    out["matrix"] = matrix;
    out["symmetric"] = symmetric;
  } else {
    json list = json::array();
    for (const auto& [k, v] : values) {
      json names = json::array();
      for (auto i : k) names.push_back(sd->name(ls[i]));
      auto e = json_io::invariant_to_json(v);
      e["colors"] = names;
      list.push_back(e);
    }
    out["values"] = list;
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of finite crossed modules through D(G,H)"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  bool schema = false;
  app.add_flag("--schema", schema, "print the JSON schemas and exit");
  app.add_option("--seed", cfg.seed, "seed for irrep splitting")->capture_default_str();
  app.add_option("--max-group", cfg.max_group, "cap on group orders")->capture_default_str();
  app.add_option("--max-dim", cfg.max_dim, "cap on |G||H| for exhaustive checks")->capture_default_str();

  auto input = [&](CLI::App* s) {
    s->add_option("xmod", cfg.input, "crossed module JSON")->required();
    s->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--seed", cfg.seed, "seed for irrep splitting");
    s->add_option("--max-group", cfg.max_group, "cap on group orders");
    s->add_option("--max-dim", cfg.max_dim, "cap on |G||H| for exhaustive checks");
  };
  auto* validate = app.add_subcommand("validate", "check the crossed-module axioms");
  input(validate);
  auto* verify = app.add_subcommand("verify", "verify the Hopf, R-matrix and ribbon axioms of D(G,H)");
  input(verify);
  std::string axioms = "hopf,rmatrix,ribbon";
  verify->add_option("--axioms", axioms, "comma list of hopf, rmatrix, ribbon")->capture_default_str();
  auto* chartable = app.add_subcommand("chartable", "block character table");
  input(chartable);
  auto* center = app.add_subcommand("center", "center basis and central idempotents");
  input(center);
  auto* fusion = app.add_subcommand("fusion", "fusion coefficients");
  input(fusion);
  std::string method = "char";
  fusion->add_option("--method", method, "char, reduced, explicit or all")->check(CLI::IsMember({"char", "reduced", "explicit", "all"}))->capture_default_str();
  auto* invariant = app.add_subcommand("invariant", "invariant of a closed colored tangle or braid closure");
  input(invariant);
  std::string tangle, braid;
  invariant->add_option("--tangle", tangle, "tangle JSON");
  invariant->add_option("--braid", braid, "braid JSON");
  invariant->add_option("--ribbon", cfg.ribbon, "index into the ribbon group");
  auto* simples = app.add_subcommand("simples", "simple modules, twists and Wedderburn profile");
  input(simples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (schema) {
    std::cout << json_io::schemas() << "\n";
    return 0;
  }
  try {
    if (*validate) return cmd_validate(cfg);
    if (*verify) return cmd_verify(cfg, axioms);
    if (*chartable) {
      if (cfg.format.empty()) cfg.format = "text";
      return cmd_chartable(cfg);
    }
    if (*center) return cmd_center(cfg);
    if (*fusion) {
      if (cfg.format.empty()) cfg.format = "text";
      return cmd_fusion(cfg, method);
    }
    if (*invariant) return cmd_invariant(cfg, tangle, braid);
    if (*simples) return cmd_simples(cfg);
    std::cout << app.help();
    return 0;
  } catch (const Error& e) {
    std::cerr << json_io::error_to_json(e).dump() << "\n";
    return e.code() == "ParseError" ? 2 : 1;
  } catch (const IoError& e) {
    std::cerr << json{{"code", "IOError"}, {"message", e.what()}, {"witness", json::array()}}.dump() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"code", "UsageError"}, {"message", e.what()}, {"witness", json::array()}}.dump() << "\n";
    return 2;
  }
}
