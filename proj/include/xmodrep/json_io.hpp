#pragma once

#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgh.hpp"
#include "fusion.hpp"
#include "rep.hpp"
#include "rt.hpp"
#include "xmod.hpp"

namespace xmodrep::json_io {

using nlohmann::json;

/// Structural problems in an input document; the CLI maps this code to
/// exit status 2.
[[noreturn]] inline void parse_fail(const std::string& what) { fail("ParseError", what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    parse_fail(std::string("bad value for ") + what);
  }
}

// ---- scalars ----

/// Twelve significant digits; round-off below 1e-12 is flushed to zero.
inline double round12(double v) {
  if (std::abs(v) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

inline json complex_to_json(Complex z) { return {{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

inline json scalar_to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}, {"float", complex_to_json(c.to_complex())}};
}

inline Cyclotomic scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  const int n = get_as<int>(field(j, "conductor"), "conductor");
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) {
    if (!c.is_array() || c.size() != 2) parse_fail("coefficient must be [num, den]");
    try {
      Rational q(mpz_class(get_as<std::string>(c[0], "numerator")), mpz_class(get_as<std::string>(c[1], "denominator")));
      if (q.get_den() == 0) parse_fail("zero denominator");
      q.canonicalize();
      coeffs.push_back(q);
    } catch (const std::invalid_argument&) {
      parse_fail("coefficient is not an integer string");
    }
  }
  return Cyclotomic::from_coeffs(n, std::move(coeffs));
}

// ---- groups ----

struct ParsedGroup {
  GroupPtr group;
  std::optional<Subgroup> subgroup_of;  // set for {"type":"subgroup"}
  GroupPtr parent;
  json descriptor;
};

inline ParsedGroup parse_group(const json& j) {
  const auto type = get_as<std::string>(field(j, "type"), "group type");
  if (type == "cayley") return {group_from_cayley(get_as<std::vector<std::vector<int>>>(field(j, "table"), "table")), std::nullopt, nullptr, j};
  if (type == "perm") {
    const int degree = get_as<int>(field(j, "degree"), "degree");
    auto gens = get_as<std::vector<std::vector<int>>>(field(j, "generators"), "generators");
    return {group_from_permutations(degree, gens), std::nullopt, nullptr, j};
  }
  if (type == "named") {
    const auto name = get_as<std::string>(field(j, "name"), "group name");
    const int n = get_as<int>(field(j, "n"), "n");
    GroupPtr g;
    if (name == "cyclic") g = cyclic_group(n);
    else if (name == "dihedral") g = dihedral_group(n);
    else if (name == "symmetric") g = symmetric_group(n);
    else parse_fail("unknown named group " + name);
    return {g, std::nullopt, nullptr, j};
  }
  if (type == "subgroup") {
    auto parent = parse_group(field(j, "group"));
    auto sub = make_subgroup(*parent.group, get_as<std::vector<int>>(field(j, "elements"), "elements"));
    return {sub.group, sub, parent.group, j};
  }
  parse_fail("unknown group type " + type);
}

// ---- crossed modules ----

/// Unvalidated action and homomorphism, so callers can report on each
/// axiom separately.
struct XModSpec {
  GroupAction mu;
  GroupHomomorphism gamma;
  std::string name;
  XModPtr prebuilt;  // set for the standard constructions
};

inline XModSpec parse_xmod_spec(const json& j) {
  if (j.contains("type")) {
    const auto type = get_as<std::string>(j.at("type"), "crossed module type");
    const auto g = parse_group(field(j, "group")).group;
    XModPtr x;
    if (type == "conjugation") x = conjugation_xmod(g);
    else if (type == "trivial_h") x = trivial_h_xmod(g);
    else if (type == "automorphism") x = automorphism_xmod(g);
    else if (type == "normal_subgroup") x = normal_subgroup_xmod(g, get_as<std::vector<int>>(field(j, "elements"), "elements"));
    else parse_fail("unknown crossed module type " + type);
    return {x->mu, x->gamma, x->name, x};
  }
  const auto pg = parse_group(field(j, "G"));
  const auto ph = parse_group(field(j, "H"));
  const auto& G = pg.group;
  const auto& H = ph.group;
  const bool same = pg.descriptor == ph.descriptor;
  const std::size_t ng = G->order(), nh = H->order();
  GroupAction mu{G, H, std::vector<int>(ng * nh)};
  const auto& jm = field(j, "mu");
  if (jm.is_string()) {
    const auto s = jm.get<std::string>();
    if (s == "trivial") {
      for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t h = 0; h < nh; ++h) mu.act[g * nh + h] = static_cast<int>(h);
    } else if (s == "conjugation") {
      if (ph.subgroup_of && ph.parent && ph.parent->order() == ng) {
        const auto& sub = *ph.subgroup_of;
        for (std::size_t g = 0; g < ng; ++g)
          for (std::size_t h = 0; h < nh; ++h) {
            const int img = sub.index_of[static_cast<std::size_t>(G->conj(static_cast<int>(g), sub.embedding[h]))];
            if (img < 0) fail("NotNormal", "subgroup is not normal", {static_cast<long>(g), static_cast<long>(h)});
            mu.act[g * nh + h] = img;
          }
      } else if (same) {
        for (std::size_t g = 0; g < ng; ++g)
          for (std::size_t h = 0; h < nh; ++h) mu.act[g * nh + h] = G->conj(static_cast<int>(g), static_cast<int>(h));
      } else {
        parse_fail("\"conjugation\" needs H equal to G or a subgroup of it");
      }
    } else {
      parse_fail("unknown mu keyword " + s);
    }
  } else {
    auto table = get_as<std::vector<std::vector<int>>>(jm, "mu table");
    if (table.size() != ng) fail("InvalidAction", "mu table needs one row per element of G", {static_cast<long>(table.size())});
    for (std::size_t g = 0; g < ng; ++g) {
      if (table[g].size() != nh) fail("InvalidAction", "mu row needs one entry per element of H", {static_cast<long>(g)});
      for (std::size_t h = 0; h < nh; ++h) mu.act[g * nh + h] = table[g][h];
    }
  }
  GroupHomomorphism gamma{H, G, std::vector<int>(nh)};
  const auto& jg = field(j, "gamma");
  if (jg.is_string()) {
    const auto s = jg.get<std::string>();
    if (s == "zero") {
    } else if (s == "identity") {
      if (!same) parse_fail("\"identity\" needs H equal to G");
      std::iota(gamma.map.begin(), gamma.map.end(), 0);
    } else if (s == "inclusion") {
      if (!ph.subgroup_of || ph.parent->order() != ng) parse_fail("\"inclusion\" needs H given as a subgroup of G");
      gamma.map = ph.subgroup_of->embedding;
    } else {
      parse_fail("unknown gamma keyword " + s);
    }
  } else {
    gamma.map = get_as<std::vector<int>>(jg, "gamma list");
  }
  return {std::move(mu), std::move(gamma), j.value("name", std::string()), nullptr};
}

inline XModPtr parse_xmod(const json& j) {
  auto spec = parse_xmod_spec(j);
  if (spec.prebuilt) return spec.prebuilt;
  return validate_crossed_module(std::move(spec.mu), std::move(spec.gamma), std::move(spec.name));
}

// ---- algebra elements and reports ----

template <std::size_t L>
json tensor_to_json(const DHopf& d, const TensorElement<L>& t) {
  json out = json::array();
  for (const auto& [k, v] : t.terms) {
    if constexpr (L == 1) {
      out.push_back({{"h", d.h_of(k[0])}, {"g", d.g_of(k[0])}, {"coeff", scalar_to_json(v)}});
    } else {
      json legs = json::array();
      for (int b : k) legs.push_back({{"h", d.h_of(b)}, {"g", d.g_of(b)}});
      out.push_back({{"legs", legs}, {"coeff", scalar_to_json(v)}});
    }
  }
  return out;
}

inline DElement element_from_json(const DHopf& d, const json& j) {
  DElement e = d.element();
  if (!j.is_array()) parse_fail("element must be a list of terms");
  for (const auto& t : j) {
    const int h = get_as<int>(field(t, "h"), "h"), g = get_as<int>(field(t, "g"), "g");
    if (h < 0 || g < 0 || h >= static_cast<int>(d.xmod()->h_order()) || g >= static_cast<int>(d.xmod()->g_order()))
      fail("IndexOutOfRange", "basis index out of range", {h, g});
    e.add({d.basis_index(h, g)}, scalar_from_json(field(t, "coeff")));
  }
  return e;
}

inline json report_to_json(const AxiomReport& r) {
  json out = json::object();
  for (const auto& a : r.results) {
    json e{{"pass", a.pass}};
    if (!a.pass) {
      e["witness"] = a.witness;
      if (!a.detail.empty()) e["detail"] = a.detail;
    }
    out[a.axiom] = e;
  }
  return out;
}

inline json error_to_json(const Error& e) { return {{"code", e.code()}, {"message", e.what()}, {"witness", e.witness()}}; }

// ---- labels and colors ----

inline json label_to_json(const StabilizerData& sd, const SimpleLabel& l) {
  return {{"orbit", l.orbit}, {"irrep", l.irrep}, {"name", sd.name(l)}, {"rep", sd.xmod()->H->name(sd.rep(l))}};
}

/// {"orbit":k,"irrep":i} or a display name such as "psi_2^(12)".
inline SimpleLabel label_from_json(const StabilizerData& sd, const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (const auto& l : sd.labels())
      if (sd.name(l) == s) return l;
    fail("UnresolvedColor", "no simple object named " + s);
  }
  return {get_as<int>(field(j, "orbit"), "orbit"), get_as<int>(field(j, "irrep"), "irrep")};
}

inline StrandType strand_from_json(const StabilizerData& sd, const json& j) {
  const auto o = j.value("orientation", std::string("up"));
  if (o != "up" && o != "down") parse_fail("orientation must be up or down");
  return {{label_from_json(sd, field(j, "color")), nullptr}, o == "down"};
}

inline ColoredTangle tangle_from_json(const StabilizerData& sd, const json& j) {
  ColoredTangle t;
  for (const auto& s : j.value("boundary_in", json::array())) t.boundary_in.push_back(strand_from_json(sd, s));
  for (const auto& slice : field(j, "slices")) {
    std::vector<Atom> atoms;
    for (const auto& a : slice) {
      const auto kind = get_as<std::string>(field(a, "atom"), "atom");
      if (kind == "pos_cross") atoms.push_back(pos_cross());
      else if (kind == "neg_cross") atoms.push_back(neg_cross());
      else if (kind == "id") atoms.push_back(id_atom(strand_from_json(sd, a)));
      else if (kind == "cap") atoms.push_back(cap_atom(strand_from_json(sd, a)));
      else if (kind == "cup") atoms.push_back(cup_atom(strand_from_json(sd, a)));
      else if (kind == "twist") atoms.push_back(twist_atom(strand_from_json(sd, a)));
      else if (kind == "twist_inv") atoms.push_back(twist_atom(strand_from_json(sd, a), true));
      else parse_fail("unknown atom " + kind);
    }
    t.slices.push_back(std::move(atoms));
  }
  return t;
}

/// Colors may be omitted, in which case the caller sweeps over them.
inline ColoredBraidLink braid_from_json(const StabilizerData& sd, const json& j) {
  ColoredBraidLink l;
  l.strands = get_as<int>(field(j, "strands"), "strands");
  if (j.contains("colors"))
    for (const auto& c : j.at("colors")) l.colors.push_back({label_from_json(sd, c), nullptr});
  l.word = get_as<std::vector<int>>(j.value("word", json::array()), "word");
  l.framings = get_as<std::vector<int>>(j.value("framings", json::array()), "framings");
  return l;
}

inline json invariant_to_json(const InvariantValue& v) {
  return {{"scalar", {{"exact", v.exact ? scalar_to_json(*v.exact) : json(nullptr)}, {"float", complex_to_json(v.value)}}}};
}

// ---- tables ----

inline json chartable_to_json(const StabilizerData& sd, const XModCharTable& t) {
  const auto& x = *sd.xmod();
  json labels = json::array(), cols = json::array(), rows = json::array();
  for (const auto& l : t.labels) {
    auto jl = label_to_json(sd, l);
    jl["dimension"] = sd.dimension(l);
    labels.push_back(jl);
  }
  for (const auto& c : t.columns)
    cols.push_back({{"orbit", c.orbit}, {"orbit_rep", x.H->name(c.h)}, {"stab_class", c.stab_class}, {"class_rep", x.G->name(c.g)}});
  for (const auto& r : t.entries) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalar_to_json(v));
    rows.push_back(row);
  }
  return {{"labels", labels}, {"columns", cols}, {"rows", rows}};
}

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

/// Aligned text with a separator between orbit blocks, zero blocks shown.
inline std::string chartable_to_text(const StabilizerData& sd, const XModCharTable& t) {
  const auto& x = *sd.xmod();
  std::vector<std::string> head{""};
  for (const auto& c : t.columns) head.push_back("(" + x.H->name(c.h) + "," + x.G->name(c.g) + ")");
  std::vector<std::vector<std::string>> cells{head};
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    std::vector<std::string> row{sd.name(t.labels[r])};
    for (const auto& v : t.entries[r]) row.push_back(v.to_string());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    std::string out = pad(row[0], width[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (t.columns[c - 1].stab_class == 0) out += " |";
      out += " " + pad(row[c], width[c]);
    }
    return out + "\n";
  };
  std::string rule;
  {
    auto h = line(head);
    rule = std::string(h.size() - 1, '-') + "\n";
  }
  std::string out = line(head);
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    if (r == 0 || t.labels[r].orbit != t.labels[r - 1].orbit) out += rule;
    out += line(cells[r + 1]);
  }
  return out;
}

inline const char* schemas() {
  return R"({
  "scalar": {"conductor": "n", "coeffs": [["num", "den"], "... coefficients of zeta_n^k reduced mod Phi_n"], "float": {"re": "x", "im": "y"}},
  "group": [
    {"type": "cayley", "table": [["row of element indices"]]},
    {"type": "perm", "degree": "n", "generators": [["images of 0..n-1"]]},
    {"type": "named", "name": "cyclic|dihedral|symmetric", "n": "k"},
    {"type": "subgroup", "group": "<group>", "elements": ["indices in the parent"]}
  ],
  "xmod": [
    {"G": "<group>", "H": "<group>", "mu": "[[mu(g,h) per g, per h]] | trivial | conjugation", "gamma": "[gamma(h) per h] | identity | zero | inclusion"},
    {"type": "conjugation|trivial_h|automorphism|normal_subgroup", "group": "<group>", "elements": "[normal_subgroup only]"}
  ],
  "delement": [{"h": "index", "g": "index", "coeff": "<scalar>"}],
  "axiom_report": {"<axiom>": {"pass": "bool", "witness": ["indices, on failure"]}},
  "label": {"orbit": "k", "irrep": "i", "name": "psi_i^s", "rep": "s"},
  "color": "<label object> | label name",
  "tangle": {"boundary_in": [{"color": "<color>", "orientation": "up|down"}],
             "slices": [[{"atom": "id|pos_cross|neg_cross|cap|cup|twist|twist_inv", "color": "<color>", "orientation": "up|down"}]]},
  "braid": {"strands": "n", "colors": ["<color> per strand; omit to sweep all colors per component"], "word": ["+-i"], "framings": ["per component"]},
  "invariant": {"scalar": {"exact": "<scalar> | null", "float": {"re": "x", "im": "y"}}},
  "chartable": {"labels": ["<label> + dimension"], "columns": [{"orbit": "k", "orbit_rep": "s", "stab_class": "c", "class_rep": "g"}], "rows": [["<scalar>"]]},
  "fusion": {"labels": ["<label>"], "method": "char|reduced|explicit|all", "table": [{"a": "i", "b": "j", "c": "k", "N": "n"}]},
  "error": {"code": "string", "message": "string", "witness": ["indices"]}
})";
}

}  // namespace xmodrep::json_io
