#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "stabilizers.hpp"
#include "xmod.hpp"

namespace xmodrep {

/// Sparse element of D(G,H)^{(x)Legs}. Each leg is a basis index
/// b = h * |G| + g standing for delta_h (x) g.
template <std::size_t Legs>
struct TensorElement {
  using Key = std::array<int, Legs>;

  const CrossedModule* xmod = nullptr;
  std::map<Key, Cyclotomic> terms;

  void add(const Key& k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  bool is_zero() const noexcept { return terms.empty(); }
  std::size_t size() const noexcept { return terms.size(); }

  TensorElement scaled(const Cyclotomic& c) const {
    TensorElement out{xmod, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
    return out;
  }
  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, v] : o.terms) add(k, v);
    if (!xmod) xmod = o.xmod;
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [k, v] : o.terms) add(k, -v);
    if (!xmod) xmod = o.xmod;
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms == b.terms; }
};

using DElement = TensorElement<1>;
using DTensorElement = TensorElement<2>;
using DTensor3 = TensorElement<3>;

/// Outcome of one axiom family: pass flag plus the first failing instance.
struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::vector<long> witness;
  std::string detail;

  AxiomResult(std::string name, bool ok = true, std::vector<long> w = {}, std::string d = {})
      : axiom(std::move(name)), pass(ok), witness(std::move(w)), detail(std::move(d)) {}
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  const AxiomResult& get(const std::string& name) const {
    for (const auto& r : results)
      if (r.axiom == name) return r;
    fail("UnknownAxiom", "axiom not in report: " + name);
  }
};

struct CenterElement {
  int orbit;        // orbit index of z
  int stab_class;   // class index in Stab(z)
  DElement element;
};

struct LabeledIdempotent {
  SimpleLabel label;
  DElement element;
};

/// The Hopf algebra D(G,H) = K[H] (x) KG of a crossed module.
class DHopf {
public:
  explicit DHopf(XModPtr x) : x_(std::move(x)), ng_(static_cast<int>(x_->g_order())), nh_(static_cast<int>(x_->h_order())) {}

  const XModPtr& xmod() const noexcept { return x_; }
  int dim() const noexcept { return ng_ * nh_; }
  int basis_index(int h, int g) const { return h * ng_ + g; }
  int h_of(int b) const { return b / ng_; }
  int g_of(int b) const { return b % ng_; }

  /// Product of two basis elements, or -1 when it vanishes:
  /// (delta_x (x) a)(delta_y (x) b) = [x = a.y] delta_x (x) ab.
  int basis_product(int b1, int b2) const {
    const int x = h_of(b1), a = g_of(b1), y = h_of(b2), b = g_of(b2);
    if (x != x_->act(a, y)) return -1;
    return basis_index(x, x_->G->mul(a, b));
  }

  DElement element() const { return {x_.get(), {}}; }
  template <std::size_t L>
  TensorElement<L> zero() const { return {x_.get(), {}}; }

  DElement basis(int h, int g, const Cyclotomic& c = Cyclotomic(1)) const {
    DElement e = element();
    e.add({basis_index(h, g)}, c);
    return e;
  }
  DElement unit() const {
    DElement e = element();
    for (int y = 0; y < nh_; ++y) e.add({basis_index(y, 0)}, 1);
    return e;
  }
  /// 1 (x) g
  DElement group_element(int g) const {
    DElement e = element();
    for (int y = 0; y < nh_; ++y) e.add({basis_index(y, g)}, 1);
    return e;
  }

  template <std::size_t L>
  TensorElement<L> multiply(const TensorElement<L>& a, const TensorElement<L>& b) const {
    check_owner(a.xmod);
    check_owner(b.xmod);
    TensorElement<L> out = zero<L>();
    for (const auto& [ka, va] : a.terms)
      for (const auto& [kb, vb] : b.terms) {
        typename TensorElement<L>::Key k{};
        bool ok = true;
        for (std::size_t i = 0; i < L && ok; ++i) {
          k[i] = basis_product(ka[i], kb[i]);
          ok = k[i] >= 0;
        }
        if (ok) out.add(k, va * vb);
      }
    return out;
  }

  Cyclotomic counit(const DElement& a) const {
    Cyclotomic s;
    for (const auto& [k, v] : a.terms)
      if (h_of(k[0]) == 0) s += v;
    return s;
  }

  /// Delta(delta_x (x) a) = sum_h (delta_h (x) a) (x) (delta_{h^-1 x} (x) a)
  DTensorElement comultiply(const DElement& a) const {
    DTensorElement out = zero<2>();
    for (const auto& [k, v] : a.terms) {
      const int x = h_of(k[0]), g = g_of(k[0]);
      for (int h = 0; h < nh_; ++h) out.add({basis_index(h, g), basis_index(x_->H->mul(x_->H->inv(h), x), g)}, v);
    }
    return out;
  }

  /// S(delta_x (x) a) = delta_{a^-1 . x^-1} (x) a^-1
  DElement antipode(const DElement& a) const {
    DElement out = element();
    for (const auto& [k, v] : a.terms) {
      const int x = h_of(k[0]), g = g_of(k[0]);
      const int gi = x_->G->inv(g);
      out.add({basis_index(x_->act(gi, x_->H->inv(x)), gi)}, v);
    }
    return out;
  }

  template <std::size_t L>
  TensorElement<L + 1> tensor(const TensorElement<L>& a, const DElement& b) const {
    TensorElement<L + 1> out = zero<L + 1>();
    for (const auto& [ka, va] : a.terms)
      for (const auto& [kb, vb] : b.terms) {
        typename TensorElement<L + 1>::Key k{};
        for (std::size_t i = 0; i < L; ++i) k[i] = ka[i];
        k[L] = kb[0];
        out.add(k, va * vb);
      }
    return out;
  }

  DTensorElement flip(const DTensorElement& t) const {
    DTensorElement out = zero<2>();
    for (const auto& [k, v] : t.terms) out.add({k[1], k[0]}, v);
    return out;
  }

  /// Apply Delta to leg `leg` of a two-leg tensor.
  DTensor3 comultiply_leg(const DTensorElement& t, int leg) const {
    DTensor3 out = zero<3>();
    for (const auto& [k, v] : t.terms) {
      auto d = comultiply(basis_of(k[static_cast<std::size_t>(leg)]));
      for (const auto& [kd, vd] : d.terms) {
        if (leg == 0) out.add({kd[0], kd[1], k[1]}, v * vd);
        else out.add({k[0], kd[0], kd[1]}, v * vd);
      }
    }
    return out;
  }

  /// Place a two-leg tensor on legs (i, j) of D^{(x)3}, unit on the third.
  DTensor3 embed(const DTensorElement& t, int i, int j) const {
    DTensor3 out = zero<3>();
    const int other = 3 - i - j;
    for (const auto& [k, v] : t.terms)
      for (int y = 0; y < nh_; ++y) {
        DTensor3::Key key{};
        key[static_cast<std::size_t>(i)] = k[0];
        key[static_cast<std::size_t>(j)] = k[1];
        key[static_cast<std::size_t>(other)] = basis_index(y, 0);
        out.add(key, v);
      }
    return out;
  }

  DTensorElement unit2() const { return tensor(unit(), unit()); }

  /// R = sum_h (delta_h (x) 1) (x) (1 (x) gamma(h))
  DTensorElement r_matrix() const { return r_with(false); }
  /// R^-1 = sum_h (delta_h (x) 1) (x) (1 (x) gamma(h)^-1)
  DTensorElement r_inverse() const { return r_with(true); }

  /// theta = sum_n delta_n (x) gamma(n^-1), optionally times 1 (x) c.
  DElement ribbon_element(int c = 0) const {
    DElement out = element();
    for (int n = 0; n < nh_; ++n) {
      const int g = x_->G->mul(c, x_->gam(x_->H->inv(n)));
      out.add({basis_index(x_->act(c, n), g)}, 1);
    }
    return out;
  }

  /// C = {c in Z(G) : c^2 = 1, c acts trivially on H}, identity first.
  std::vector<int> ribbon_group() const {
    std::vector<int> out;
    for (int c : x_->G->center()) {
      if (x_->G->mul(c, c) != 0) continue;
      bool trivial = true;
      for (int h = 0; h < nh_ && trivial; ++h) trivial = x_->act(c, h) == h;
      if (trivial) out.push_back(c);
    }
    return out;
  }

  /// [(1 (x) c) theta for c in C], each passing the ribbon checks.
  std::vector<DElement> ribbon_elements() const {
    std::vector<DElement> out;
    for (int c : ribbon_group()) {
      auto v = ribbon_element(c);
      auto rep = check_ribbon(v);
      if (!rep.all_pass()) fail("RibbonCheck", "candidate ribbon element failed verification", {c});
      out.push_back(std::move(v));
    }
    return out;
  }

  /// First basis element not commuting with a, if any.
  std::optional<int> noncommuting_basis(const DElement& a) const {
    for (int b = 0; b < dim(); ++b) {
      auto e = basis_of(b);
      if (multiply(a, e) != multiply(e, a)) return b;
    }
    return std::nullopt;
  }

  /// central, S-fixed, counit 1 and Delta(v) = (R21 R)^-1 (v (x) v)
  AxiomReport check_ribbon(const DElement& v) const {
    AxiomReport rep;
    AxiomResult central{"ribbon_central"};
    if (auto b = noncommuting_basis(v)) set_fail(central, {h_of(*b), g_of(*b)}, "does not commute with basis element");
    rep.results.push_back(central);
    AxiomResult sfix{"ribbon_antipode_fixed"};
    if (antipode(v) != v) set_fail(sfix, {}, "S(v) != v");
    rep.results.push_back(sfix);
    AxiomResult eps{"ribbon_counit"};
    if (counit(v) != Cyclotomic(1)) set_fail(eps, {}, "counit(v) != 1");
    rep.results.push_back(eps);
    AxiomResult cop{"ribbon_coproduct"};
    auto rhs = multiply(r21r_inverse(), tensor(v, v));
    if (comultiply(v) != rhs) set_fail(cop, {}, "Delta(v) != (R21 R)^-1 (v (x) v)");
    rep.results.push_back(cop);
    return rep;
  }

  /// (R21 R)^-1 = R^-1 R21^-1
  DTensorElement r21r_inverse() const { return multiply(r_inverse(), flip(r_inverse())); }

  /// Exhaustive axiom checks over all basis elements. `which` holds any of
  /// "hopf", "quasitriangular", "ribbon".
  AxiomReport verify_axioms(const std::vector<std::string>& which, std::size_t cap = 2500) const {
    if (static_cast<std::size_t>(dim()) > cap) fail("CapExceeded", "|G||H| exceeds the verification cap", {dim(), static_cast<long>(cap)});
    AxiomReport rep;
    auto wants = [&](const std::string& w) { return std::find(which.begin(), which.end(), w) != which.end(); };
    if (wants("hopf")) verify_hopf(rep);
    if (wants("quasitriangular")) verify_quasitriangular(rep);
    if (wants("ribbon")) {
      for (auto& r : check_ribbon(ribbon_element()).results) rep.results.push_back(r);
    }
    return rep;
  }

  /// { sum_g delta_{g.z} (x) g c g^-1 } over orbit reps z and classes [c] of Stab(z).
  std::vector<CenterElement> center_basis() const {
    std::vector<CenterElement> out;
    const auto& od = x_->orbit_data;
    for (int k = 0; k < static_cast<int>(od.orbit_reps.size()); ++k) {
      const int z = od.orbit_reps[static_cast<std::size_t>(k)];
      const auto& stab = x_->stabilizers[static_cast<std::size_t>(k)];
      const auto& cls = stab.group->classes();
      for (int c = 0; c < static_cast<int>(cls.size()); ++c) {
        const int cg = stab.embedding[static_cast<std::size_t>(cls.reps[static_cast<std::size_t>(c)])];
        DElement e = element();
        for (int g = 0; g < ng_; ++g) e.add({basis_index(x_->act(g, z), x_->G->conj(g, cg))}, 1);
        if (auto b = noncommuting_basis(e)) fail("CenterCheck", "center basis element is not central", {k, c, *b});
        out.push_back({k, c, std::move(e)});
      }
    }
    return out;
  }

  /// Dimension of the centralizer of D(G,H), by exact elimination on the
  /// commutation conditions with the generators delta_h (x) 1 and 1 (x) g.
  std::size_t centralizer_dimension() const {
    const int n = dim();
    std::vector<DElement> gens;
    for (int h = 0; h < nh_; ++h) gens.push_back(basis(h, 0));
    for (int g = 1; g < ng_; ++g) gens.push_back(group_element(g));
    std::map<std::pair<int, int>, std::map<int, long>> rows;  // (generator, target basis) -> column -> coeff
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
      for (int b = 0; b < n; ++b) {
        auto e = basis_of(b);
        for (const auto& [k, v] : multiply(e, gens[static_cast<std::size_t>(gi)]).terms)
          rows[{gi, k[0]}][b] += v.rational_value().get_num().get_si();
        for (const auto& [k, v] : multiply(gens[static_cast<std::size_t>(gi)], e).terms)
          rows[{gi, k[0]}][b] -= v.rational_value().get_num().get_si();
      }
    Matrix<Cyclotomic> m(rows.size(), static_cast<std::size_t>(n));
    std::size_t r = 0;
    for (const auto& [key, cols] : rows) {
      for (const auto& [c, v] : cols)
        if (v) m(r, static_cast<std::size_t>(c)) = Cyclotomic(v);
      ++r;
    }
    return static_cast<std::size_t>(n) - rank(m);
  }

  /// f_i^z = (1/|Stab z|) sum_g delta_{g.z} (x) g e_i^z g^-1, checked to be
  /// orthogonal central idempotents summing to 1.
  std::vector<LabeledIdempotent> central_idempotents(const StabilizerData& sd) const {
    check_owner(sd.xmod().get());
    std::vector<LabeledIdempotent> out;
    const auto& od = x_->orbit_data;
    for (const auto& lab : sd.labels()) {
      const int z = od.orbit_reps[static_cast<std::size_t>(lab.orbit)];
      const auto& stab = sd.stabilizer(lab.orbit);
      const auto& e = sd.idempotents(lab.orbit)[static_cast<std::size_t>(lab.irrep)];
      const Rational scale(1, static_cast<unsigned long>(stab.group->order()));
      DElement f = element();
      for (int g = 0; g < ng_; ++g)
        for (std::size_t c = 0; c < e.size(); ++c) {
          if (e[c].is_zero()) continue;
          f.add({basis_index(x_->act(g, z), x_->G->conj(g, stab.embedding[c]))}, e[c].scaled(scale));
        }
      out.push_back({lab, std::move(f)});
    }
    DElement total = element();
    for (std::size_t i = 0; i < out.size(); ++i) {
      total += out[i].element;
      for (std::size_t j = 0; j < out.size(); ++j) {
        auto p = multiply(out[i].element, out[j].element);
        if (p != (i == j ? out[i].element : element()))
          fail("IdempotentCheck", "idempotents are not orthogonal idempotents", {static_cast<long>(i), static_cast<long>(j)});
      }
      if (auto b = noncommuting_basis(out[i].element)) fail("IdempotentCheck", "idempotent is not central", {static_cast<long>(i), *b});
    }
    if (total != unit()) fail("IdempotentCheck", "idempotents do not sum to 1");
    return out;
  }

  /// Matrix block sizes |G.z| d_i; the sum of squares is checked against |G||H|.
  std::vector<std::pair<SimpleLabel, int>> wedderburn_profile(const StabilizerData& sd) const {
    check_owner(sd.xmod().get());
    std::vector<std::pair<SimpleLabel, int>> out;
    long sq = 0;
    for (const auto& lab : sd.labels()) {
      const int s = sd.dimension(lab);
      sq += static_cast<long>(s) * s;
      out.emplace_back(lab, s);
    }
    if (sq != dim()) fail("WedderburnCheck", "block sizes do not match dim D(G,H)", {sq, dim()});
    return out;
  }

  DElement basis_of(int b) const {
    DElement e = element();
    e.add({b}, 1);
    return e;
  }

private:
  void check_owner(const CrossedModule* p) const {
    if (p && p != x_.get()) fail("XmodMismatch", "element belongs to a different crossed module");
  }

  static void set_fail(AxiomResult& r, std::vector<long> w, std::string detail) {
    if (!r.pass) return;
    r.pass = false;
    r.witness = std::move(w);
    r.detail = std::move(detail);
  }

  DTensorElement r_with(bool inverse) const {
    DTensorElement out = zero<2>();
    for (int h = 0; h < nh_; ++h) {
      int g = x_->gam(h);
      if (inverse) g = x_->G->inv(g);
      for (int y = 0; y < nh_; ++y) out.add({basis_index(h, 0), basis_index(y, g)}, 1);
    }
    return out;
  }

  void verify_hopf(AxiomReport& rep) const {
    const int n = dim();
    AxiomResult assoc{"associativity"}, unit_ax{"unit"}, coassoc{"coassociativity"}, counit_ax{"counit"},
        bialg{"bialgebra"}, counit_mult{"counit_multiplicative"}, anti{"antipode"}, anti_hom{"antipode_antihomomorphism"},
        s2{"antipode_involution"};
    for (int a = 0; a < n && assoc.pass; ++a)
      for (int b = 0; b < n && assoc.pass; ++b) {
        const int ab = basis_product(a, b);
        for (int c = 0; c < n; ++c) {
          const int bc = basis_product(b, c);
          const int l = ab < 0 ? -1 : basis_product(ab, c);
          const int r = bc < 0 ? -1 : basis_product(a, bc);
          if (l != r) {
            set_fail(assoc, {a, b, c}, "(ab)c != a(bc)");
            break;
          }
        }
      }
    const auto one = unit();
    for (int b = 0; b < n; ++b) {
      const auto e = basis_of(b);
      if (multiply(one, e) != e || multiply(e, one) != e) set_fail(unit_ax, {b}, "1 b != b or b 1 != b");
      const auto d = comultiply(e);
      if (comultiply_leg(d, 0) != comultiply_leg(d, 1)) set_fail(coassoc, {b}, "(Delta (x) id)Delta != (id (x) Delta)Delta");
      DElement left = element(), right = element();
      for (const auto& [k, v] : d.terms) {
        left.add({k[1]}, v * counit(basis_of(k[0])));
        right.add({k[0]}, v * counit(basis_of(k[1])));
      }
      if (left != e || right != e) set_fail(counit_ax, {b}, "(eps (x) id)Delta != id");
      DElement ls = element(), rs = element();
      for (const auto& [k, v] : d.terms) {
        ls += multiply(antipode(basis_of(k[0])), basis_of(k[1])).scaled(v);
        rs += multiply(basis_of(k[0]), antipode(basis_of(k[1]))).scaled(v);
      }
      const auto expect = one.scaled(counit(e));
      if (ls != expect || rs != expect) set_fail(anti, {b}, "m(S (x) id)Delta != eta eps");
      if (antipode(antipode(e)) != e) set_fail(s2, {b}, "S^2 != id");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto ea = basis_of(a), eb = basis_of(b);
        const auto ab = multiply(ea, eb);
        if (bialg.pass && comultiply(ab) != multiply(comultiply(ea), comultiply(eb))) set_fail(bialg, {a, b}, "Delta(ab) != Delta(a)Delta(b)");
        if (counit_mult.pass && counit(ab) != counit(ea) * counit(eb)) set_fail(counit_mult, {a, b}, "eps(ab) != eps(a)eps(b)");
        if (anti_hom.pass && antipode(ab) != multiply(antipode(eb), antipode(ea))) set_fail(anti_hom, {a, b}, "S(ab) != S(b)S(a)");
      }
    for (auto* r : {&assoc, &unit_ax, &coassoc, &counit_ax, &bialg, &counit_mult, &anti, &anti_hom, &s2}) rep.results.push_back(*r);
  }

  void verify_quasitriangular(AxiomReport& rep) const {
    const int n = dim();
    const auto r = r_matrix(), ri = r_inverse();
    AxiomResult inv{"r_invertible"}, qt{"r_intertwines_coproduct"}, d1{"r_delta_left"}, d2{"r_delta_right"}, ybe{"yang_baxter"};
    if (multiply(r, ri) != unit2() || multiply(ri, r) != unit2()) set_fail(inv, {}, "R R^-1 != 1 (x) 1");
    for (int b = 0; b < n && qt.pass; ++b) {
      const auto d = comultiply(basis_of(b));
      if (multiply(r, d) != multiply(flip(d), r)) set_fail(qt, {h_of(b), g_of(b)}, "R Delta(x) != Delta^op(x) R");
    }
    const auto r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
    if (comultiply_leg(r, 0) != multiply(r13, r23)) set_fail(d1, {}, "(Delta (x) id)R != R13 R23");
    if (comultiply_leg(r, 1) != multiply(r13, r12)) set_fail(d2, {}, "(id (x) Delta)R != R13 R12");
    if (multiply(multiply(r12, r13), r23) != multiply(multiply(r23, r13), r12)) set_fail(ybe, {}, "R12 R13 R23 != R23 R13 R12");
    for (auto* x : {&inv, &qt, &d1, &d2, &ybe}) rep.results.push_back(*x);
  }

  XModPtr x_;
  int ng_, nh_;
};

}  // namespace xmodrep
