// Acceptance report: one PASS/FAIL line per criterion. Oracles here are
// independent of the library paths they check (brute-force sums, explicit
// isomorphism search, direct matrix compositions).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "tangle_corpus.hpp"
#include "xmodrep/xmodrep.hpp"

using namespace xmodrep;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Collects the first few failure messages of a criterion.
struct Checker {
  Outcome out;
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (failures++ < 3) out.note += (out.note.empty() ? "" : "; ") + what;
  }
  Outcome done() {
    if (failures > 3) out.note += "; " + std::to_string(failures - 3) + " more";
    return out;
  }
};

struct CorpusEntry {
  std::string name;
  XModPtr x;
};

XModPtr z2_trivial() {
  auto g = cyclic_group(2), h = cyclic_group(2);
  return validate_crossed_module(trivial_action(g, h), {h, g, {0, 0}}, "(Z2,Z2,triv,0)");
}

std::vector<CorpusEntry> corpus() {
  auto s3 = symmetric_group(3);
  return {{"(Z2,Z2,triv,0)", z2_trivial()},
          {"conj(S3)", conjugation_xmod(s3)},
          {"aut(D4)", automorphism_xmod(dihedral_group(4))},
          {"(Z4,1)", trivial_h_xmod(cyclic_group(4))},
          {"(S3,1)", trivial_h_xmod(s3)},
          {"(D4,1)", trivial_h_xmod(dihedral_group(4))},
          {"normal(S3,A3)", normal_subgroup_xmod(s3, {0, s3->find("(123)"), s3->find("(132)")})}};
}

// ---- paper tables ----

Cyclotomic paper_value(const std::string& s) {
  if (s == "w") return Cyclotomic::root_of_unity(3, 1);
  if (s == "w2") return Cyclotomic::root_of_unity(3, 2);
  if (s == "i") return Cyclotomic::root_of_unity(4, 1);
  if (s == "-i") return -Cyclotomic::root_of_unity(4, 1);
  return Cyclotomic(std::stol(s));
}

std::vector<Cyclotomic> paper_row(const std::string& line) {
  std::istringstream in(line);
  std::vector<Cyclotomic> out;
  for (std::string tok; in >> tok;) out.push_back(paper_value(tok));
  return out;
}

// One orbit block of a printed table: the orbit representative, the
// stabilizer as a named model group, the column class representatives in
// that model, and the rows restricted to the block.
struct PaperBlock {
  std::string orbit;
  GroupPtr model;
  std::vector<std::string> columns;
  std::vector<std::vector<Cyclotomic>> rows;
};

// All isomorphisms a -> b by generator images, brute force.
std::vector<std::vector<int>> isomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::vector<int>> out;
  if (a.order() != b.order()) return out;
  const int n = static_cast<int>(a.order());
  std::vector<int> gens;
  {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    in[0] = true;
    for (int x = 1; x < n; ++x) {
      if (in[static_cast<std::size_t>(x)]) continue;
      gens.push_back(x);
      std::vector<int> span{0};
      std::fill(in.begin(), in.end(), false);
      in[0] = true;
      for (std::size_t i = 0; i < span.size(); ++i)
        for (int g : gens) {
          const int y = a.mul(span[i], g);
          if (!in[static_cast<std::size_t>(y)]) {
            in[static_cast<std::size_t>(y)] = true;
            span.push_back(y);
          }
        }
    }
  }
  std::vector<int> img(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      std::vector<int> f(static_cast<std::size_t>(n), -1);
      f[0] = 0;
      std::vector<int> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const int y = a.mul(queue[i], gens[j]);
          const int fy = b.mul(f[static_cast<std::size_t>(queue[i])], img[j]);
          if (f[static_cast<std::size_t>(y)] < 0) {
            f[static_cast<std::size_t>(y)] = fy;
            queue.push_back(y);
          } else if (f[static_cast<std::size_t>(y)] != fy) {
            return;
          }
        }
      std::vector<bool> hit(static_cast<std::size_t>(n), false);
      for (int v : f) hit[static_cast<std::size_t>(v)] = true;
      for (bool h : hit)
        if (!h) return;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (f[static_cast<std::size_t>(a.mul(x, y))] != b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) return;
      out.push_back(f);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (b.element_order(t) != a.element_order(gens[k])) continue;
      img[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

bool same_class(const FiniteGroup& g, int x, int y) { return g.classes().class_of[static_cast<std::size_t>(x)] == g.classes().class_of[static_cast<std::size_t>(y)]; }

// Matches a computed table against printed blocks: every row vanishes off
// its own block, and within each block some isomorphism from the stabilizer
// onto the model group carries the computed columns onto the printed ones
// with equal row multisets.
Outcome match_blocks(const StabilizerData& sd, const XModCharTable& t, const std::vector<PaperBlock>& blocks, bool require_order) {
  Checker c;
  const auto& x = *sd.xmod();
  c.expect(t.labels.size() == t.columns.size(), "table is not square");
  std::size_t total_rows = 0, total_cols = 0;
  for (const auto& b : blocks) {
    total_rows += b.rows.size();
    total_cols += b.columns.size();
  }
  c.expect(t.labels.size() == total_rows && t.columns.size() == total_cols,
           "shape " + std::to_string(t.labels.size()) + "x" + std::to_string(t.columns.size()));
  for (const auto& b : blocks) {
    int orbit = -1;
    for (int k = 0; k < static_cast<int>(x.orbit_count()); ++k)
      if (x.orbit_data.orbit_of[static_cast<std::size_t>(x.H->find(b.orbit))] == x.orbit_data.orbit_reps[static_cast<std::size_t>(k)]) orbit = k;
    if (orbit < 0) {
      c.expect(false, "no orbit for " + b.orbit);
      continue;
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < t.labels.size(); ++r)
      if (t.labels[r].orbit == orbit) rows.push_back(r);
    for (std::size_t j = 0; j < t.columns.size(); ++j)
      if (t.columns[j].orbit == orbit) cols.push_back(j);
    for (auto r : rows)
      for (std::size_t j = 0; j < t.columns.size(); ++j)
        if (t.columns[j].orbit != orbit) c.expect(t.entries[r][j].is_zero(), "nonzero entry off block in row " + sd.name(t.labels[r]));
    if (rows.size() != b.rows.size() || cols.size() != b.columns.size()) {
      c.expect(false, "block " + b.orbit + " has the wrong size");
      continue;
    }
    const auto& stab = sd.stabilizer(orbit);
    bool found = false;
    for (const auto& f : isomorphisms(*stab.group, *b.model)) {
      // computed column j -> printed column p
      std::vector<std::size_t> to_paper(cols.size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const int img = f[static_cast<std::size_t>(stab.index_of[static_cast<std::size_t>(t.columns[cols[j]].g)])];
        for (std::size_t p = 0; p < b.columns.size(); ++p)
          if (same_class(*b.model, img, b.model->find(b.columns[p]))) to_paper[j] = p;
      }
      bool bijective = true;
      std::vector<bool> used(cols.size(), false);
      for (auto p : to_paper) {
        if (p >= cols.size() || used[p]) bijective = false;
        else used[p] = true;
      }
      if (!bijective) continue;
      std::vector<std::vector<Cyclotomic>> ours;
      for (auto r : rows) {
        std::vector<Cyclotomic> v(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) v[to_paper[j]] = t.entries[r][cols[j]];
        ours.push_back(v);
      }
      bool equal;
      if (require_order) {
        equal = ours == b.rows;
      } else {
        std::vector<bool> taken(b.rows.size(), false);
        equal = true;
        for (const auto& v : ours) {
          bool hit = false;
          for (std::size_t q = 0; q < b.rows.size() && !hit; ++q)
            if (!taken[q] && b.rows[q] == v) taken[q] = hit = true;
          equal = equal && hit;
        }
      }
      if (equal) {
        found = true;
        break;
      }
    }
    c.expect(found, "block " + b.orbit + " does not match");
  }
  return c.done();
}

// ---- criteria ----

Outcome criterion1() {
  auto s3 = symmetric_group(3);
  auto sd = make_stabilizer_data(conjugation_xmod(s3));
  const auto t = xmod_character_table(*sd);
  auto sub = [&](std::vector<int> e) { return make_subgroup(*s3, std::move(e)).group; };
  const int t12 = s3->find("(12)"), c123 = s3->find("(123)"), c132 = s3->find("(132)");
  const std::vector<PaperBlock> paper{
      {"e", s3, {"e", "(12)", "(123)"}, {paper_row("1 1 1"), paper_row("1 -1 1"), paper_row("2 0 -1")}},
      {"(12)", sub({0, t12}), {"e", "(12)"}, {paper_row("1 1"), paper_row("1 -1")}},
      {"(123)", sub({0, c123, c132}), {"e", "(123)", "(132)"}, {paper_row("1 1 1"), paper_row("1 w w2"), paper_row("1 w2 w")}}};
  // printed row order is required here; the omega placement check below
  // pins the columns literally
  auto out = match_blocks(*sd, t, paper, true);
  Checker c;
  c.out = out;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& stab = sd->stabilizer(static_cast<int>(k));
    for (std::size_t j = 0; j < t.columns.size(); ++j)
      if (t.columns[j].orbit == static_cast<int>(k))
        c.expect(stab.index_of[static_cast<std::size_t>(t.columns[j].g)] >= 0, "column outside its stabilizer");
  }
  // printed omega placement, literally: psi_2^(123) has w at (123), w^2 at (132)
  for (std::size_t r = 0; r < t.labels.size(); ++r)
    if (sd->name(t.labels[r]) == "psi_2^(123)")
      for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (t.columns[j].g == c123 && t.columns[j].orbit == t.labels[r].orbit) c.expect(t.entries[r][j] == paper_value("w"), "omega placement");
        if (t.columns[j].g == c132 && t.columns[j].orbit == t.labels[r].orbit) c.expect(t.entries[r][j] == paper_value("w2"), "omega^2 placement");
      }
  if (c.out.pass) c.out.note = "8x8 exact in Q(zeta_3), printed row order";
  return c.done();
}

Outcome criterion2() {
  auto d4 = dihedral_group(4);
  auto sd = make_stabilizer_data(automorphism_xmod(d4));
  const auto t = xmod_character_table(*sd);
  auto sub = [&](std::vector<std::string> names) {
    std::vector<int> e;
    for (const auto& n : names) e.push_back(d4->find(n));
    return make_subgroup(*d4, e).group;
  };
  const std::vector<std::string> d4cols{"e", "r", "s", "r^2", "sr"};
  const std::vector<std::vector<Cyclotomic>> d4rows{paper_row("1 1 1 1 1"), paper_row("1 -1 1 1 -1"), paper_row("1 -1 -1 1 1"),
                                                    paper_row("1 1 -1 1 -1"), paper_row("2 0 0 -2 0")};
  const std::vector<PaperBlock> paper{
      {"e", d4, d4cols, d4rows},
      {"r^2", d4, d4cols, d4rows},
      {"r", sub({"e", "r", "r^2", "r^3"}), {"e", "r", "r^2", "r^3"}, {paper_row("1 1 1 1"), paper_row("1 i -1 -i"), paper_row("1 -1 1 -1"), paper_row("1 -i -1 i")}},
      {"s", sub({"e", "s"}), {"e", "s"}, {paper_row("1 1"), paper_row("1 -1")}}};
  auto out = match_blocks(*sd, t, paper, false);
  if (out.pass) out.note = "16x16 exact in Q(zeta_4), up to stabilizer isomorphism and row order within blocks";
  return out;
}

Outcome criterion3() {
  Checker c;
  for (const auto& e : corpus()) {
    DHopf d(e.x);
    const auto rep = d.verify_axioms({"hopf", "quasitriangular", "ribbon"});
    for (const auto& r : rep.results) c.expect(r.pass, e.name + " " + r.axiom);
    for (int b = 0; b < d.dim(); ++b) {
      const auto v = d.basis(d.h_of(b), d.g_of(b));
      c.expect(d.antipode(d.antipode(v)) == v, e.name + " S^2 != id");
    }
  }
  if (c.out.pass) c.out.note = "7 crossed modules, Hopf + quasitriangular (with Yang-Baxter) + ribbon + S^2 = id";
  return c.done();
}

Outcome criterion4() {
  Checker c;
  for (const auto& e : corpus()) {
    auto sd = make_stabilizer_data(e.x);
    DHopf d(e.x);
    std::size_t pairs = 0;
    for (const auto& s : e.x->stabilizers) pairs += s.group->classes().size();
    const auto zdim = d.centralizer_dimension();
    c.expect(zdim == pairs, e.name + " dim Z = " + std::to_string(zdim) + " vs " + std::to_string(pairs));
    c.expect(d.center_basis().size() == pairs, e.name + " center basis size");
    const auto idems = d.central_idempotents(*sd);
    c.expect(idems.size() == zdim, e.name + " idempotent count");
    DElement total = d.element();
    for (std::size_t i = 0; i < idems.size(); ++i) {
      total += idems[i].element;
      c.expect(!d.noncommuting_basis(idems[i].element).has_value(), e.name + " idempotent not central");
      for (std::size_t j = 0; j < idems.size(); ++j) {
        const auto p = d.multiply(idems[i].element, idems[j].element);
        c.expect(i == j ? p == idems[i].element : p.is_zero(), e.name + " idempotents not orthogonal");
      }
    }
    c.expect(total == d.unit(), e.name + " idempotents do not sum to 1");
    long sq = 0;
    for (const auto& l : sd->labels()) {
      const long block = static_cast<long>(sd->orbit_size(l.orbit)) * sd->table(l.orbit).degrees[static_cast<std::size_t>(l.irrep)];
      sq += block * block;
    }
    c.expect(sq == static_cast<long>(e.x->g_order() * e.x->h_order()), e.name + " Wedderburn sum");
  }
  if (c.out.pass) c.out.note = "dim Z by exact elimination, idempotents, Wedderburn sums on 7 crossed modules";
  return c.done();
}

Outcome criterion5() {
  Checker c;
  for (const auto& e : corpus()) {
    auto sd = make_stabilizer_data(e.x);
    std::vector<ClassFunction> chars;
    for (const auto& l : sd->labels()) chars.push_back(simple_character(*sd, l));
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b)
        c.expect(inner_product(chars[a], chars[b]) == Cyclotomic(a == b ? 1 : 0), e.name + " Gram entry");
    for (std::size_t a = 0; a < chars.size(); ++a) {
      const auto& l = sd->labels()[a];
      // d = sum_m chi(m, 1)
      Cyclotomic d;
      for (int m = 0; m < static_cast<int>(e.x->h_order()); ++m) d += chars[a](m, 0);
      const auto mod = simple_module(*sd, l);
      c.expect(d == Cyclotomic(sd->dimension(l)) && static_cast<int>(mod.dim) == sd->dimension(l), e.name + " dimension formula");
      c.expect(character_of(mod) == chars[a], e.name + " module trace vs induced character");
    }
  }
  auto sd = make_stabilizer_data(conjugation_xmod(symmetric_group(3)));
  for (const auto& a : sd->labels())
    for (const auto& b : sd->labels()) {
      const auto t = tensor_product(simple_module(*sd, a), simple_module(*sd, b));
      c.expect(character_of(t) == convolution_product(simple_character(*sd, a), simple_character(*sd, b)),
               "char(" + sd->name(a) + " x " + sd->name(b) + ")");
    }
  if (c.out.pass) c.out.note = "orthonormal on 7 crossed modules; 64 tensor characters of D(S3) equal convolutions";
  return c.done();
}

Outcome criterion6() {
  Checker c;
  for (const auto& x : {z2_trivial(), conjugation_xmod(symmetric_group(3))}) {
    FusionEngine f(make_stabilizer_data(x));
    const auto& ls = f.labels();
    const std::string nm = x->name;
    std::size_t triples = 0;
    for (const auto& a : ls)
      for (const auto& b : ls) {
        std::map<SimpleLabel, long> explicit_n;
        for (const auto& [l, n] : f.by_decomposition(a, b)) explicit_n[l] = n;
        for (const auto& cl : ls) {
          ++triples;
          const long n1 = f.coefficient_char(a, b, cl);
          const long n2 = f.coefficient_reduced(a, b, cl);
          const long n3 = explicit_n.count(cl) ? explicit_n[cl] : 0;
          c.expect(n1 >= 0 && n1 == n2 && n2 == n3, nm + " methods disagree");
          c.expect(f.cleb_gor(a, b, cl) == (n1 > 0), nm + " Cleb-Gor predicate");
          c.expect(f.coefficient_char(a, b, cl) == f.coefficient_char(f.dual_label(cl), a, f.dual_label(b)), nm + " Frobenius symmetry");
        }
      }
    c.expect(triples == ls.size() * ls.size() * ls.size(), nm + " triple count");
    const auto chk = check_fusion_ring(fusion_ring(f));
    c.expect(chk.all(), nm + " fusion ring invariants");
  }
  if (c.out.pass) c.out.note = "512 + 64 triples, three methods and Cleb-Gor agree; ring invariants exact";
  return c.done();
}

Outcome criterion7() {
  Checker c;
  for (const auto& g : {cyclic_group(4), symmetric_group(3), dihedral_group(4)}) {
    auto sd = make_stabilizer_data(trivial_h_xmod(g));
    const auto t = xmod_character_table(*sd);
    const auto ct = character_table(g);
    c.expect(t.labels.size() == ct.size() && t.columns.size() == ct.size(), "table shape");
    for (std::size_t r = 0; r < t.labels.size(); ++r)
      for (std::size_t j = 0; j < t.columns.size(); ++j) c.expect(t.entries[r][j] == ct.value(r, t.columns[j].g), "table entry");
    // representation ring by brute-force character sums over G
    FusionEngine f(sd);
    const auto n = static_cast<int>(g->order());
    for (std::size_t a = 0; a < ct.size(); ++a)
      for (std::size_t b = 0; b < ct.size(); ++b)
        for (std::size_t k = 0; k < ct.size(); ++k) {
          Cyclotomic s;
          for (int x = 0; x < n; ++x) s += ct.value(a, x) * ct.value(b, x) * ct.value(k, x).conj();
          s = s.scaled(Rational(1, n));
          c.expect(Cyclotomic(f.coefficient_char({0, static_cast<int>(a)}, {0, static_cast<int>(b)}, {0, static_cast<int>(k)})) == s, "fusion vs representation ring");
        }
    if (g->order() == 6) {
      const SimpleLabel triv{0, 0}, sign{0, 1}, std2{0, 2};
      const auto dec = f.by_decomposition(std2, std2);
      const std::vector<std::pair<SimpleLabel, long>> want{{triv, 1}, {sign, 1}, {std2, 1}};
      c.expect(dec == want, "std x std != triv + sign + std");
    }
  }
  if (c.out.pass) c.out.note = "Z4, S3, D4: tables and fusion rings equal the group data; std x std = triv + sign + std";
  return c.done();
}

Outcome criterion8() {
  Checker c;
  const double tol = 1e-9;
  auto sd = make_stabilizer_data(conjugation_xmod(symmetric_group(3)));
  const auto& ls = sd->labels();
  TangleEvaluator<Complex> ev(sd);
  auto up = [](const SimpleLabel& l) { return StrandType{{l, nullptr}, false}; };
  auto down = [](const SimpleLabel& l) { return StrandType{{l, nullptr}, true}; };
  // identity tangle
  for (const auto& a : ls)
    for (const auto& b : ls) {
      ColoredTangle t{{up(a), down(b)}, {{id_atom(up(a)), id_atom(down(b))}}};
      c.expect(ev.evaluate(t).near(Matrix<Complex>::identity(static_cast<std::size_t>(sd->dimension(a) * sd->dimension(b))), tol), "identity tangle");
    }
  // snakes, both dualities, both orientations
  for (const auto& l : ls) {
    const auto V = up(l), Vd = down(l);
    const auto I = Matrix<Complex>::identity(static_cast<std::size_t>(sd->dimension(l)));
    c.expect(ev.evaluate({{V}, {{cup_atom(V), id_atom(V)}, {id_atom(V), cap_atom(Vd)}}}).near(I, tol), "left snake on V " + sd->name(l));
    c.expect(ev.evaluate({{Vd}, {{id_atom(Vd), cup_atom(V)}, {cap_atom(Vd), id_atom(Vd)}}}).near(I, tol), "left snake on V* " + sd->name(l));
    c.expect(ev.evaluate({{V}, {{id_atom(V), cup_atom(Vd)}, {cap_atom(V), id_atom(V)}}}).near(I, tol), "right snake on V " + sd->name(l));
    c.expect(ev.evaluate({{Vd}, {{cup_atom(Vd), id_atom(Vd)}, {id_atom(Vd), cap_atom(V)}}}).near(I, tol), "right snake on V* " + sd->name(l));
  }
  // Yang-Baxter slicings on every color triple
  for (const auto& a : ls)
    for (const auto& b : ls)
      for (const auto& cc : ls) {
        std::vector<StrandType> in{up(a), up(b), up(cc)};
        ColoredTangle t1{in, {{pos_cross(), id_atom(up(cc))}, {id_atom(up(b)), pos_cross()}, {pos_cross(), id_atom(up(a))}}};
        ColoredTangle t2{in, {{id_atom(up(a)), pos_cross()}, {pos_cross(), id_atom(up(b))}, {id_atom(up(cc)), pos_cross()}}};
        c.expect(ev.evaluate(t1).near(ev.evaluate(t2), tol), "Yang-Baxter slicing");
      }
  // twist compatibility, with braidings composed directly from the formula
  for (const auto& a : ls)
    for (const auto& b : ls) {
      const auto va = simple_module(*sd, a), vb = simple_module(*sd, b);
      const auto vw = tensor_product(va, vb);
      const auto cc = braiding(vb, va) * braiding(va, vb);
      c.expect(twist_matrix(vw).near(kron(twist_matrix(va), twist_matrix(vb)) * cc, tol), "twist compatibility " + sd->name(a) + "," + sd->name(b));
    }
  // unknots
  std::vector<std::string> literal_mismatch;
  int compatible_match = 0;
  for (const auto& l : ls) {
    const double d = sd->dimension(l);
    const auto u0 = link_invariant(sd, {1, {{l, nullptr}}, {}, {0}}).value;
    c.expect(std::abs(u0 - Complex(d, 0)) < tol, "0-framed unknot " + sd->name(l));
    const auto u1 = link_invariant(sd, {1, {{l, nullptr}}, {}, {1}}).value;
    const auto& stab = sd->stabilizer(l.orbit);
    const int gs = sd->xmod()->gam(sd->rep(l));
    const auto& tab = sd->table(l.orbit);
    const auto deg = static_cast<double>(sd->degree(l));
    const Complex literal = d * tab.value(static_cast<std::size_t>(l.irrep), stab.index_of[static_cast<std::size_t>(sd->xmod()->G->inv(gs))]).to_complex() / deg;
    const Complex forward = d * tab.value(static_cast<std::size_t>(l.irrep), stab.index_of[static_cast<std::size_t>(gs)]).to_complex() / deg;
    if (std::abs(u1 - literal) >= 1e-8) literal_mismatch.push_back(sd->name(l));
    if (std::abs(u1 - forward) < 1e-8) ++compatible_match;
  }
  c.expect(literal_mismatch.empty(), "(+1)-framed unknot != dim*chi(gamma(s)^-1)/chi(1) on " + [&] {
    std::string s;
    for (const auto& n : literal_mismatch) s += (s.empty() ? "" : ",") + n;
    return s;
  }() + " (equals dim*chi(gamma(s))/chi(1) on " + std::to_string(compatible_match) + "/8 colors; see decisions)");
  // Hopf link matrix symmetry
  for (const auto& a : ls)
    for (const auto& b : ls) {
      const auto hab = link_invariant(sd, {2, {{a, nullptr}, {b, nullptr}}, {1, 1}, {0, 0}}).value;
      const auto hba = link_invariant(sd, {2, {{b, nullptr}, {a, nullptr}}, {1, 1}, {0, 0}}).value;
      c.expect(std::abs(hab - hba) < tol, "Hopf link asymmetric");
    }
  // slide invariance on a 10-tangle corpus
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 10; ++k) {
    const auto r = tangle_corpus::random_tangle(rng, *sd);
    c.expect(ev.evaluate(tangle_corpus::sparse_slicing(r)).near(ev.evaluate(tangle_corpus::packed_slicing(r)), tol), "slide corpus tangle " + std::to_string(k));
  }
  if (c.out.pass) c.out.note = "all RT properties on D(S3) within 1e-9";
  return c.done();
}

Outcome criterion9() {
  Checker c;
  auto check = [&](const XModPtr& x, std::size_t expected) {
    DHopf d(x);
    const auto cs = d.ribbon_group();
    c.expect(cs.size() == expected, x->name + ": " + std::to_string(cs.size()) + " ribbon elements, expected " + std::to_string(expected));
    for (int cg : cs) c.expect(d.check_ribbon(d.ribbon_element(cg)).all_pass(), x->name + " ribbon element fails verification");
    int negatives = 0;
    for (int g = 0; g < static_cast<int>(x->g_order()); ++g) {
      if (std::find(cs.begin(), cs.end(), g) != cs.end()) continue;
      const auto rep = d.check_ribbon(d.ribbon_element(g));
      const bool central = rep.get("ribbon_central").pass;
      // order-2 condition: (1 (x) g) theta fixed by S and grouplike against R21 R needs g^2 = 1
      const bool order2 = rep.get("ribbon_antipode_fixed").pass && rep.get("ribbon_coproduct").pass;
      c.expect(!(central && order2), x->name + " negative control passed for " + x->G->name(g));
      ++negatives;
    }
    return negatives;
  };
  int neg = check(z2_trivial(), 2);
  neg += check(conjugation_xmod(symmetric_group(3)), 1);
  neg += check(automorphism_xmod(dihedral_group(4)), 1);
  if (c.out.pass) c.out.note = "|C| = 2 for (Z2,Z2,triv,0), 1 for conj(S3) and aut(D4); " + std::to_string(neg) + " negative controls rejected";
  return c.done();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "D(S3) character table", 5, criterion1},
      {2, "aut(D4) character table", 30, criterion2},
      {3, "Hopf / quasitriangular / ribbon axioms", 120, criterion3},
      {4, "structure counts", 30, criterion4},
      {5, "character axioms", 120, criterion5},
      {6, "fusion triple agreement", 120, criterion6},
      {7, "group degeneration", 120, criterion7},
      {8, "RT property suite", 120, criterion8},
      {9, "ribbon enumeration", 120, criterion9},
  };
  int failed = 0;
  for (const auto& cr : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= cr.limit_s) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (!o.pass) ++failed;
    std::printf("%s  criterion %d: %s  [%.2fs < %.0fs]  %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, s, cr.limit_s, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria pass\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
