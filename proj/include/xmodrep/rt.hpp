#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dgh.hpp"
#include "rep.hpp"

namespace xmodrep {

/// A simple label, or an explicit module when `module` is set.
struct Color {
  SimpleLabel label;
  std::shared_ptr<const FloatRep> module;

  friend bool operator==(const Color& a, const Color& b) {
    if (a.module || b.module) return a.module == b.module;
    return a.label == b.label;
  }
  friend bool operator<(const Color& a, const Color& b) {
    if (a.module != b.module) return a.module < b.module;
    return a.label < b.label;
  }
};

inline Color label_color(int orbit, int irrep) { return {{orbit, irrep}, nullptr}; }

/// down = the dual object.
struct StrandType {
  Color color;
  bool down = false;
  friend bool operator==(const StrandType& a, const StrandType& b) { return a.color == b.color && a.down == b.down; }
};

inline std::string describe(const StrandType& s) {
  std::string c = s.color.module ? "module" : "(" + std::to_string(s.color.label.orbit) + "," + std::to_string(s.color.label.irrep) + ")";
  return c + (s.down ? "-down" : "-up");
}

enum class AtomKind { Id, PosCross, NegCross, Cap, Cup, Twist, TwistInv };

/// Crossings take their types from the boundary. For cap and cup, `strand`
/// is the left leg: cap (V-down, V-up) is ev, cap (V-up, V-down) is ev';
/// cup (V-up, V-down) is coev, cup (V-down, V-up) is coev'.
struct Atom {
  AtomKind kind = AtomKind::Id;
  std::optional<StrandType> strand;
};

inline Atom id_atom(StrandType s) { return {AtomKind::Id, s}; }
inline Atom pos_cross() { return {AtomKind::PosCross, std::nullopt}; }
inline Atom neg_cross() { return {AtomKind::NegCross, std::nullopt}; }
inline Atom cap_atom(StrandType left) { return {AtomKind::Cap, left}; }
inline Atom cup_atom(StrandType left) { return {AtomKind::Cup, left}; }
inline Atom twist_atom(StrandType s, bool inverse = false) { return {inverse ? AtomKind::TwistInv : AtomKind::Twist, s}; }

inline StrandType flipped(StrandType s) {
  s.down = !s.down;
  return s;
}

struct ColoredTangle {
  std::vector<StrandType> boundary_in;
  std::vector<std::vector<Atom>> slices;  // bottom to top
};

struct TangleSignature {
  std::vector<StrandType> in, out;
};

namespace detail {

[[noreturn]] inline void type_mismatch(std::size_t slice, std::size_t pos, const std::string& expected, const std::string& found) {
  fail("TypeMismatch", "slice " + std::to_string(slice) + " position " + std::to_string(pos) + ": expected " + expected + ", found " + found,
       {static_cast<long>(slice), static_cast<long>(pos)});
}

inline std::size_t atom_arity(AtomKind k) {
  switch (k) {
    case AtomKind::Id:
    case AtomKind::Twist:
    case AtomKind::TwistInv: return 1;
    case AtomKind::PosCross:
    case AtomKind::NegCross:
    case AtomKind::Cap: return 2;
    case AtomKind::Cup: return 0;
  }
  return 0;
}

/// Consumes the atom's inputs from `in` at `pos` and appends its outputs.
inline void apply_atom_types(const Atom& a, const std::vector<StrandType>& in, std::size_t& pos, std::vector<StrandType>& out, std::size_t slice) {
  const std::size_t need = atom_arity(a.kind);
  if (pos + need > in.size()) type_mismatch(slice, pos, std::to_string(need) + " strands", std::to_string(in.size() - pos));
  if (a.kind != AtomKind::PosCross && a.kind != AtomKind::NegCross && !a.strand) type_mismatch(slice, pos, "a strand type", "none");
  switch (a.kind) {
    case AtomKind::Id:
    case AtomKind::Twist:
    case AtomKind::TwistInv:
      if (!(in[pos] == *a.strand)) type_mismatch(slice, pos, describe(*a.strand), describe(in[pos]));
      out.push_back(in[pos]);
      break;
    case AtomKind::PosCross:
    case AtomKind::NegCross:
      out.push_back(in[pos + 1]);
      out.push_back(in[pos]);
      break;
    case AtomKind::Cap:
      if (!(in[pos] == *a.strand)) type_mismatch(slice, pos, describe(*a.strand), describe(in[pos]));
      if (!(in[pos + 1] == flipped(*a.strand))) type_mismatch(slice, pos + 1, describe(flipped(*a.strand)), describe(in[pos + 1]));
      break;
    case AtomKind::Cup:
      out.push_back(*a.strand);
      out.push_back(flipped(*a.strand));
      break;
  }
  pos += need;
}

}  // namespace detail

/// Boundary signature, or TypeMismatch with the slice and position.
inline TangleSignature typecheck(const ColoredTangle& t) {
  std::vector<StrandType> cur = t.boundary_in;
  for (std::size_t k = 0; k < t.slices.size(); ++k) {
    std::vector<StrandType> next;
    std::size_t pos = 0;
    for (const auto& a : t.slices[k]) detail::apply_atom_types(a, cur, pos, next, k);
    if (pos != cur.size()) detail::type_mismatch(k, pos, "slice to cover the boundary", std::to_string(cur.size() - pos) + " uncovered strands");
    cur = std::move(next);
  }
  return {t.boundary_in, cur};
}

/// Evaluates tangles with a fixed ribbon choice c (an element of G from
/// the ribbon group). The twist on V is the action of
/// Q(c) sum_n Q(gamma(n)) P(n); right duality is
/// ev' = ev c_{V,V*} (theta (x) id) and coev' = (id (x) theta) c_{V,V*} coev.
template <class T>
class TangleEvaluator {
public:
  TangleEvaluator(StabilizerDataPtr sd, int ribbon_c = 0) : sd_(std::move(sd)), c_(ribbon_c) {}

  const XModRepT<T>& module(const StrandType& s) const {
    auto key = std::make_pair(s.color, s.down);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    XModRepT<T> m = base(s.color);
    if (s.down) m = dual(m);
    return cache_.emplace(key, std::move(m)).first->second;
  }

  Matrix<T> twist(const StrandType& s, bool inverse_twist = false) const {
    const auto& m = module(s);
    return inverse_twist ? twist_matrix(m, m.xmod->G->inv(c_), true) : twist_matrix(m, c_);
  }

  /// ev: V* (x) V -> k, the pairing f (x) v -> f(v)
  Matrix<T> ev(const StrandType& v) const {
    const std::size_t d = module(v).dim;
    Matrix<T> e(1, d * d);
    for (std::size_t i = 0; i < d; ++i) e(0, i * d + i) = ScalarTraits<T>::one();
    return e;
  }

  /// coev: k -> V (x) V*, 1 -> sum_v v (x) delta_v
  Matrix<T> coev(const StrandType& v) const {
    const std::size_t d = module(v).dim;
    Matrix<T> c(d * d, 1);
    for (std::size_t i = 0; i < d; ++i) c(i * d + i, 0) = ScalarTraits<T>::one();
    return c;
  }

  /// ev': V (x) V* -> k
  Matrix<T> ev_right(const StrandType& v) const {
    const auto& mv = module(v);
    const auto& mvd = module(flipped(v));
    return ev(v) * braiding(mv, mvd) * kron(twist(v), Matrix<T>::identity(mvd.dim));
  }

  /// coev': k -> V* (x) V
  Matrix<T> coev_right(const StrandType& v) const {
    const auto& mv = module(v);
    const auto& mvd = module(flipped(v));
    return kron(Matrix<T>::identity(mvd.dim), twist(v)) * braiding(mv, mvd) * coev(v);
  }

  /// Map of a single slice with input boundary `in`.
  Matrix<T> slice_map(const std::vector<Atom>& atoms, const std::vector<StrandType>& in) const {
    Matrix<T> out = Matrix<T>::identity(1);
    std::size_t pos = 0;
    for (const auto& a : atoms) {
      Matrix<T> m;
      switch (a.kind) {
        case AtomKind::Id: m = Matrix<T>::identity(module(in[pos]).dim); break;
        case AtomKind::Twist: m = twist(in[pos]); break;
        case AtomKind::TwistInv: m = twist(in[pos], true); break;
        case AtomKind::PosCross: m = braiding(module(in[pos]), module(in[pos + 1])); break;
        case AtomKind::NegCross: m = braiding_inverse(module(in[pos + 1]), module(in[pos])); break;
        case AtomKind::Cap: {
          // (V-down, V-up) is ev of the up type; (V-up, V-down) is ev'
          m = in[pos].down ? ev(in[pos + 1]) : ev_right(in[pos]);
          break;
        }
        case AtomKind::Cup: {
          const auto& l = *a.strand;
          m = l.down ? coev_right(flipped(l)) : coev(l);
          break;
        }
      }
      out = kron(out, m);
      pos += detail::atom_arity(a.kind);
    }
    return out;
  }

  /// Composes slice maps bottom to top.
  Matrix<T> evaluate(const ColoredTangle& t) const {
    (void)typecheck(t);
    std::vector<StrandType> cur = t.boundary_in;
    std::size_t d = 1;
    for (const auto& s : cur) d *= module(s).dim;
    Matrix<T> total = Matrix<T>::identity(d);
    for (std::size_t k = 0; k < t.slices.size(); ++k) {
      total = slice_map(t.slices[k], cur) * total;
      std::vector<StrandType> next;
      std::size_t pos = 0;
      for (const auto& a : t.slices[k]) detail::apply_atom_types(a, cur, pos, next, k);
      cur = std::move(next);
    }
    return total;
  }

private:
  XModRepT<T> base(const Color& c) const;

  StabilizerDataPtr sd_;
  int c_;
  mutable std::map<std::pair<Color, bool>, XModRepT<T>> cache_;
};

template <>
inline FloatRep TangleEvaluator<Complex>::base(const Color& c) const {
  if (c.module) {
    if (c.module->xmod != sd_->xmod()) fail("UnresolvedColor", "explicit module belongs to another crossed module");
    return *c.module;
  }
  try {
    sd_->check(c.label);
  } catch (const Error&) {
    fail("UnresolvedColor", "color is not a simple label", {c.label.orbit, c.label.irrep});
  }
  return simple_module(*sd_, c.label);
}

template <>
inline ExactRep TangleEvaluator<Cyclotomic>::base(const Color& c) const {
  if (c.module) fail("UnresolvedColor", "explicit modules are float only");
  try {
    sd_->check(c.label);
  } catch (const Error&) {
    fail("UnresolvedColor", "color is not a simple label", {c.label.orbit, c.label.irrep});
  }
  return simple_module_exact(*sd_, c.label);
}

/// Scalar of a closed tangle; `exact` is set when every color is a
/// one-dimensional simple and the exact backend was used.
struct InvariantValue {
  std::optional<Cyclotomic> exact;
  Complex value;
};

namespace detail {

inline bool all_colors_one_dimensional(const StabilizerData& sd, const ColoredTangle& t) {
  auto ok = [&](const StrandType& s) {
    if (s.color.module) return false;
    try {
      return sd.dimension(s.color.label) == 1;
    } catch (const Error&) {
      return false;
    }
  };
  for (const auto& s : t.boundary_in)
    if (!ok(s)) return false;
  for (const auto& sl : t.slices)
    for (const auto& a : sl)
      if (a.strand && !ok(*a.strand)) return false;
  return true;
}

}  // namespace detail

/// Twist on the simple (s, i): chi_i(gamma(s)) / chi_i(1). gamma(s) lies in
/// Stab(s) by the Peiffer identity.
inline Cyclotomic twist_scalar(const StabilizerData& sd, const SimpleLabel& l) {
  sd.check(l);
  const auto& stab = sd.stabilizer(l.orbit);
  const int gs = stab.index_of[static_cast<std::size_t>(sd.xmod()->gam(sd.rep(l)))];
  const auto& t = sd.table(l.orbit);
  return t.value(static_cast<std::size_t>(l.irrep), gs).scaled(Rational(1, sd.degree(l)));
}

/// Index into DHopf::ribbon_group(), validated.
inline int ribbon_choice_element(const StabilizerData& sd, int index) {
  DHopf d(sd.xmod());
  const auto cs = d.ribbon_group();
  if (index < 0 || index >= static_cast<int>(cs.size())) fail("InvalidRibbonChoice", "ribbon choice out of range", {index, static_cast<long>(cs.size())});
  return cs[static_cast<std::size_t>(index)];
}

/// Closed-tangle scalar; picks the exact backend when every color is
/// one-dimensional. `ribbon_c` is an element of G (not an index).
inline InvariantValue evaluate_closed(const StabilizerDataPtr& sd, const ColoredTangle& t, int ribbon_c = 0) {
  const auto sig = typecheck(t);
  if (!sig.in.empty() || !sig.out.empty()) fail("TypeMismatch", "tangle is not closed", {static_cast<long>(sig.in.size()), static_cast<long>(sig.out.size())});
  if (detail::all_colors_one_dimensional(*sd, t)) {
    TangleEvaluator<Cyclotomic> ev(sd, ribbon_c);
    const auto m = ev.evaluate(t);
    return {m(0, 0), m(0, 0).to_complex()};
  }
  TangleEvaluator<Complex> ev(sd, ribbon_c);
  const auto m = ev.evaluate(t);
  return {std::nullopt, m(0, 0)};
}

/// Closure of a braid on `strands` upward strands; word entries are +-i for
/// sigma_i^{+-1} (1-based). Framings are per component, in order of the
/// smallest strand index of each component.
struct ColoredBraidLink {
  int strands = 1;
  std::vector<Color> colors;  // per strand, at the bottom
  std::vector<int> word;
  std::vector<int> framings;
};

struct BraidComponents {
  std::vector<int> component_of;  // bottom position -> component
  std::vector<long> writhe;       // self-crossing signs per component
  int count = 0;
};

inline BraidComponents braid_components(const ColoredBraidLink& l) {
  if (l.strands < 1) fail("InvalidBraid", "need at least one strand", {l.strands});
  if (static_cast<int>(l.colors.size()) != l.strands) fail("InvalidBraid", "one color per strand", {static_cast<long>(l.colors.size())});
  std::vector<int> at(static_cast<std::size_t>(l.strands));  // position -> bottom strand
  std::iota(at.begin(), at.end(), 0);
  std::vector<std::pair<int, int>> crossings;  // pairs of bottom strands with sign
  std::vector<int> signs;
  for (int w : l.word) {
    const int i = std::abs(w);
    if (w == 0 || i >= l.strands) fail("InvalidBraid", "generator index out of range", {w});
    auto& a = at[static_cast<std::size_t>(i - 1)];
    auto& b = at[static_cast<std::size_t>(i)];
    crossings.emplace_back(a, b);
    signs.push_back(w > 0 ? 1 : -1);
    std::swap(a, b);
  }
  // closure joins the top of position p to the bottom of position p
  std::vector<int> parent(static_cast<std::size_t>(l.strands));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int p = 0; p < l.strands; ++p) parent[static_cast<std::size_t>(find(at[static_cast<std::size_t>(p)]))] = find(p);
  BraidComponents out;
  out.component_of.assign(static_cast<std::size_t>(l.strands), -1);
  std::map<int, int> root_to_comp;
  for (int p = 0; p < l.strands; ++p) {
    const int r = find(p);
    auto it = root_to_comp.find(r);
    if (it == root_to_comp.end()) it = root_to_comp.emplace(r, out.count++).first;
    out.component_of[static_cast<std::size_t>(p)] = it->second;
  }
  out.writhe.assign(static_cast<std::size_t>(out.count), 0);
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const int ca = out.component_of[static_cast<std::size_t>(crossings[k].first)];
    const int cb = out.component_of[static_cast<std::size_t>(crossings[k].second)];
    if (ca == cb) out.writhe[static_cast<std::size_t>(ca)] += signs[k];
  }
  for (int p = 0; p < l.strands; ++p)
    if (!(l.colors[static_cast<std::size_t>(p)] == l.colors[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])]))
      fail("InvalidBraid", "colors are not constant along a component", {p});
  if (!l.framings.empty() && static_cast<int>(l.framings.size()) != out.count)
    fail("InvalidBraid", "one framing per component", {static_cast<long>(l.framings.size()), out.count});
  return out;
}

/// Nested cups produce V1..Vn Vn*..V1*, the braid acts on the first n
/// strands, framing corrections are twists on the first strand of each
/// component (framing minus blackboard writhe), and ev' caps close up.
inline ColoredTangle braid_closure(const ColoredBraidLink& l) {
  const auto comps = braid_components(l);
  const std::size_t n = static_cast<std::size_t>(l.strands);
  auto up = [&](std::size_t p) { return StrandType{l.colors[p], false}; };
  ColoredTangle t;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Atom> s;
    for (std::size_t p = 0; p < k; ++p) s.push_back(id_atom(up(p)));
    s.push_back(cup_atom(up(k)));
    for (std::size_t p = k; p-- > 0;) s.push_back(id_atom(flipped(up(p))));
    t.slices.push_back(std::move(s));
  }
  std::vector<StrandType> cur;
  for (std::size_t p = 0; p < n; ++p) cur.push_back(up(p));
  auto rest = [&](std::vector<Atom>& s) {
    for (std::size_t p = n; p-- > 0;) s.push_back(id_atom(flipped(up(p))));
  };
  std::vector<bool> done(static_cast<std::size_t>(comps.count), false);
  for (std::size_t p = 0; p < n; ++p) {
    const int c = comps.component_of[p];
    if (done[static_cast<std::size_t>(c)]) continue;
    done[static_cast<std::size_t>(c)] = true;
    const long want = l.framings.empty() ? 0 : l.framings[static_cast<std::size_t>(c)];
    const long delta = want - comps.writhe[static_cast<std::size_t>(c)];
    for (long k = 0; k < std::abs(delta); ++k) {
      std::vector<Atom> s;
      for (std::size_t q = 0; q < n; ++q) s.push_back(q == p ? twist_atom(cur[q], delta < 0) : id_atom(cur[q]));
      rest(s);
      t.slices.push_back(std::move(s));
    }
  }
  for (int w : l.word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(w));
    std::vector<Atom> s;
    for (std::size_t q = 0; q < n;) {
      if (q == i - 1) {
        s.push_back(w > 0 ? pos_cross() : neg_cross());
        q += 2;
      } else {
        s.push_back(id_atom(cur[q]));
        ++q;
      }
    }
    rest(s);
    t.slices.push_back(std::move(s));
    std::swap(cur[i - 1], cur[i]);
  }
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Atom> s;
    for (std::size_t p = 0; p < k; ++p) s.push_back(id_atom(cur[p]));
    s.push_back(cap_atom(cur[k]));
    for (std::size_t p = k; p-- > 0;) s.push_back(id_atom(flipped(up(p))));
    t.slices.push_back(std::move(s));
  }
  return t;
}

/// Link invariant for a ribbon choice given as an index into the ribbon
/// group.
inline InvariantValue link_invariant(const StabilizerDataPtr& sd, const ColoredBraidLink& l, int ribbon_index = 0) {
  return evaluate_closed(sd, braid_closure(l), ribbon_choice_element(*sd, ribbon_index));
}

}  // namespace xmodrep
