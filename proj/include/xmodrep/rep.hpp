#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "stabilizers.hpp"
#include "xmod.hpp"

namespace xmodrep {

/// Representation of a crossed module: Q(g) a homomorphism from G, P(h)
/// orthogonal projectors summing to 1 with P(g.h) = Q(g) P(h) Q(g)^-1.
template <class T>
struct XModRepT {
  XModPtr xmod;
  std::size_t dim = 0;
  std::vector<Matrix<T>> Q;  // indexed by G
  std::vector<Matrix<T>> P;  // indexed by H
  std::optional<SimpleLabel> label;
};

using ExactRep = XModRepT<Cyclotomic>;
using FloatRep = XModRepT<Complex>;

/// Checks every module axiom; tolerance is ignored by the exact backend.
template <class T>
void verify_rep(const XModRepT<T>& m, double tol = 1e-9) {
  const auto& x = *m.xmod;
  const int ng = static_cast<int>(x.g_order()), nh = static_cast<int>(x.h_order());
  if (m.Q.size() != static_cast<std::size_t>(ng) || m.P.size() != static_cast<std::size_t>(nh))
    fail("InvalidModule", "wrong number of matrices");
  const auto id = Matrix<T>::identity(m.dim);
  if (!m.Q[0].near(id, tol)) fail("InvalidModule", "Q(1) is not the identity");
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      if (!(m.Q[static_cast<std::size_t>(a)] * m.Q[static_cast<std::size_t>(b)]).near(m.Q[static_cast<std::size_t>(x.G->mul(a, b))], tol))
        fail("InvalidModule", "Q is not a homomorphism", {a, b});
  Matrix<T> sum(m.dim, m.dim);
  for (int h = 0; h < nh; ++h) {
    const auto& ph = m.P[static_cast<std::size_t>(h)];
    sum += ph;
    for (int k = 0; k < nh; ++k) {
      auto prod = ph * m.P[static_cast<std::size_t>(k)];
      if (!(h == k ? prod.near(ph, tol) : prod.is_zero_matrix(tol))) fail("InvalidModule", "P is not a family of orthogonal projectors", {h, k});
    }
  }
  if (!sum.near(id, tol)) fail("InvalidModule", "projectors do not sum to the identity");
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      if (!(m.P[static_cast<std::size_t>(x.act(g, h))] * m.Q[static_cast<std::size_t>(g)])
               .near(m.Q[static_cast<std::size_t>(g)] * m.P[static_cast<std::size_t>(h)], tol))
        fail("InvalidModule", "P(g.h) Q(g) != Q(g) P(h)", {g, h});
}

/// Trivial one-dimensional module: P concentrated at 1, Q trivial.
template <class T>
XModRepT<T> unit_module(const XModPtr& x) {
  XModRepT<T> m{x, 1, {}, {}, SimpleLabel{0, 0}};
  for (std::size_t g = 0; g < x->g_order(); ++g) m.Q.push_back(Matrix<T>::identity(1));
  for (std::size_t h = 0; h < x->h_order(); ++h) m.P.push_back(h == 0 ? Matrix<T>::identity(1) : Matrix<T>(1, 1));
  return m;
}

namespace detail {

/// Basis (j, w): j runs over the sorted orbit of s with coset
/// representative g_j = witness(h_j); rho gives the stabilizer action.
template <class T, class Rho>
XModRepT<T> induced_module(const StabilizerData& sd, const SimpleLabel& l, int degree, Rho rho) {
  const auto& x = *sd.xmod();
  const auto& od = x.orbit_data;
  const auto& orbit = od.orbit_members[static_cast<std::size_t>(l.orbit)];
  const auto& stab = sd.stabilizer(l.orbit);
  const std::size_t d = static_cast<std::size_t>(degree), no = orbit.size();
  XModRepT<T> m{sd.xmod(), no * d, {}, {}, l};
  std::vector<int> pos(x.h_order(), -1);
  for (std::size_t j = 0; j < no; ++j) pos[static_cast<std::size_t>(orbit[j])] = static_cast<int>(j);
  for (int g = 0; g < static_cast<int>(x.g_order()); ++g) {
    Matrix<T> q(m.dim, m.dim);
    for (std::size_t j = 0; j < no; ++j) {
      const int hj = orbit[j];
      const int target = x.act(g, hj);
      const auto jp = static_cast<std::size_t>(pos[static_cast<std::size_t>(target)]);
      const int gj = od.witness[static_cast<std::size_t>(hj)], gjp = od.witness[static_cast<std::size_t>(target)];
      const int sigma = x.G->mul(x.G->mul(x.G->inv(gjp), g), gj);
      const int s_idx = stab.index_of[static_cast<std::size_t>(sigma)];
      if (s_idx < 0) fail("InvalidModule", "coset decomposition left the stabilizer", {g, hj});
      const Matrix<T> r = rho(s_idx);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) q(jp * d + a, j * d + b) = r(a, b);
    }
    m.Q.push_back(std::move(q));
  }
  for (int h = 0; h < static_cast<int>(x.h_order()); ++h) {
    Matrix<T> p(m.dim, m.dim);
    const int j = pos[static_cast<std::size_t>(h)];
    if (j >= 0)
      for (std::size_t a = 0; a < d; ++a) p(static_cast<std::size_t>(j) * d + a, static_cast<std::size_t>(j) * d + a) = ScalarTraits<T>::one();
    m.P.push_back(std::move(p));
  }
  return m;
}

}  // namespace detail

/// Simple module (s, i) over floats, induced from the explicit irrep of
/// Stab(s).
inline FloatRep simple_module(const StabilizerData& sd, const SimpleLabel& l) {
  sd.check(l);
  const auto& ir = sd.irrep(l.orbit, l.irrep);
  auto m = detail::induced_module<Complex>(sd, l, ir.degree, [&](int s) { return ir.matrices[static_cast<std::size_t>(s)]; });
  verify_rep(m);
  return m;
}

/// Exact simple module; only available when the stabilizer character has
/// degree 1.
inline ExactRep simple_module_exact(const StabilizerData& sd, const SimpleLabel& l) {
  sd.check(l);
  if (sd.degree(l) != 1) fail("NotExact", "exact simple modules need a degree-1 stabilizer character", {l.orbit, l.irrep});
  const auto& t = sd.table(l.orbit);
  auto m = detail::induced_module<Cyclotomic>(sd, l, 1, [&](int s) {
    Matrix<Cyclotomic> r(1, 1);
    r(0, 0) = t.value(static_cast<std::size_t>(l.irrep), s);
    return r;
  });
  verify_rep(m);
  return m;
}

inline FloatRep to_float(const ExactRep& m) {
  FloatRep f{m.xmod, m.dim, {}, {}, m.label};
  for (const auto& q : m.Q) f.Q.push_back(to_complex(q));
  for (const auto& p : m.P) f.P.push_back(to_complex(p));
  return f;
}

/// A (x) B with P''(n) = sum_h P(h) (x) P'(h^-1 n) and Q'' = Q (x) Q'.
template <class T>
XModRepT<T> tensor_product(const XModRepT<T>& a, const XModRepT<T>& b) {
  if (a.xmod != b.xmod) fail("XmodMismatch", "modules over different crossed modules");
  const auto& x = *a.xmod;
  XModRepT<T> m{a.xmod, a.dim * b.dim, {}, {}, std::nullopt};
  for (std::size_t g = 0; g < x.g_order(); ++g) m.Q.push_back(kron(a.Q[g], b.Q[g]));
  for (int n = 0; n < static_cast<int>(x.h_order()); ++n) {
    Matrix<T> p(m.dim, m.dim);
    for (int h = 0; h < static_cast<int>(x.h_order()); ++h) {
      const auto& ph = a.P[static_cast<std::size_t>(h)];
      if (ph.is_zero_matrix(0.0)) continue;
      const auto& pk = b.P[static_cast<std::size_t>(x.H->mul(x.H->inv(h), n))];
      if (pk.is_zero_matrix(0.0)) continue;
      p += kron(ph, pk);
    }
    m.P.push_back(std::move(p));
  }
  verify_rep(m);
  return m;
}

/// Q*(g) = Q(g^-1)^T, P*(h) = P(h^-1)^T
template <class T>
XModRepT<T> dual(const XModRepT<T>& a) {
  const auto& x = *a.xmod;
  XModRepT<T> m{a.xmod, a.dim, {}, {}, std::nullopt};
  for (int g = 0; g < static_cast<int>(x.g_order()); ++g) m.Q.push_back(a.Q[static_cast<std::size_t>(x.G->inv(g))].transpose());
  for (int h = 0; h < static_cast<int>(x.h_order()); ++h) m.P.push_back(a.P[static_cast<std::size_t>(x.H->inv(h))].transpose());
  verify_rep(m);
  return m;
}

/// Block-diagonal direct sum.
template <class T>
XModRepT<T> direct_sum(const XModRepT<T>& a, const XModRepT<T>& b) {
  if (a.xmod != b.xmod) fail("XmodMismatch", "modules over different crossed modules");
  XModRepT<T> m{a.xmod, a.dim + b.dim, {}, {}, std::nullopt};
  for (std::size_t g = 0; g < a.Q.size(); ++g) m.Q.push_back(direct_sum(a.Q[g], b.Q[g]));
  for (std::size_t h = 0; h < a.P.size(); ++h) m.P.push_back(direct_sum(a.P[h], b.P[h]));
  return m;
}

/// Change of basis v -> S v.
template <class T>
XModRepT<T> conjugate_by(const XModRepT<T>& a, const Matrix<T>& s) {
  const auto si = inverse(s);
  XModRepT<T> m{a.xmod, a.dim, {}, {}, a.label};
  for (const auto& q : a.Q) m.Q.push_back(s * q * si);
  for (const auto& p : a.P) m.P.push_back(s * p * si);
  return m;
}

/// D(G,H) acting on itself by left multiplication, basis b = h |G| + g.
inline ExactRep regular_module(const XModPtr& x) {
  const int ng = static_cast<int>(x->g_order()), nh = static_cast<int>(x->h_order());
  const std::size_t n = static_cast<std::size_t>(ng * nh);
  ExactRep m{x, n, {}, {}, std::nullopt};
  for (int g = 0; g < ng; ++g) {
    Matrix<Cyclotomic> q(n, n);
    for (int y = 0; y < nh; ++y)
      for (int b = 0; b < ng; ++b)
        q(static_cast<std::size_t>(x->act(g, y) * ng + x->G->mul(g, b)), static_cast<std::size_t>(y * ng + b)) = 1;
    m.Q.push_back(std::move(q));
  }
  for (int h = 0; h < nh; ++h) {
    Matrix<Cyclotomic> p(n, n);
    for (int b = 0; b < ng; ++b) p(static_cast<std::size_t>(h * ng + b), static_cast<std::size_t>(h * ng + b)) = 1;
    m.P.push_back(std::move(p));
  }
  verify_rep(m);
  return m;
}

/// Braiding c_{A,B}: A (x) B -> B (x) A, v (x) w -> sum_n Q_B(gamma(n)) w (x) P_A(n) v.
template <class T>
Matrix<T> braiding(const XModRepT<T>& a, const XModRepT<T>& b) {
  const auto& x = *a.xmod;
  Matrix<T> inner(a.dim * b.dim, a.dim * b.dim);
  for (int n = 0; n < static_cast<int>(x.h_order()); ++n) {
    const auto& p = a.P[static_cast<std::size_t>(n)];
    if (p.is_zero_matrix(0.0)) continue;
    inner += kron(p, b.Q[static_cast<std::size_t>(x.gam(n))]);
  }
  return swap_matrix<T>(a.dim, b.dim) * inner;
}

/// c_{A,B}^-1: B (x) A -> A (x) B.
template <class T>
Matrix<T> braiding_inverse(const XModRepT<T>& a, const XModRepT<T>& b) {
  const auto& x = *a.xmod;
  Matrix<T> inner(a.dim * b.dim, a.dim * b.dim);
  for (int n = 0; n < static_cast<int>(x.h_order()); ++n) {
    const auto& p = a.P[static_cast<std::size_t>(n)];
    if (p.is_zero_matrix(0.0)) continue;
    inner += kron(p, b.Q[static_cast<std::size_t>(x.G->inv(x.gam(n)))]);
  }
  return inner * swap_matrix<T>(b.dim, a.dim);
}

/// Action of sum_n delta_n (x) c gamma(n): the twist on V for the ribbon
/// choice c.
template <class T>
Matrix<T> twist_matrix(const XModRepT<T>& a, int c = 0, bool inverse_twist = false) {
  const auto& x = *a.xmod;
  Matrix<T> out(a.dim, a.dim);
  for (int n = 0; n < static_cast<int>(x.h_order()); ++n) {
    const auto& p = a.P[static_cast<std::size_t>(n)];
    if (p.is_zero_matrix(0.0)) continue;
    int g = x.gam(n);
    if (inverse_twist) g = x.G->inv(g);
    out += a.Q[static_cast<std::size_t>(g)] * p;
  }
  return a.Q[static_cast<std::size_t>(c)] * out;
}

/// Function on H x G, values[m |G| + g].
struct ClassFunction {
  XModPtr xmod;
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator()(int m, int g) const { return values[static_cast<std::size_t>(m) * xmod->g_order() + static_cast<std::size_t>(g)]; }
  Cyclotomic& at(int m, int g) { return values[static_cast<std::size_t>(m) * xmod->g_order() + static_cast<std::size_t>(g)]; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.xmod == b.xmod && a.values == b.values; }
};

inline ClassFunction zero_class_function(const XModPtr& x) { return {x, std::vector<Cyclotomic>(x->g_order() * x->h_order())}; }

/// Both class-function conditions; returns the first violating (m, g, h)
/// or empty.
inline std::vector<long> class_function_violation(const ClassFunction& f) {
  const auto& x = *f.xmod;
  const int ng = static_cast<int>(x.g_order()), nh = static_cast<int>(x.h_order());
  for (int m = 0; m < nh; ++m)
    for (int g = 0; g < ng; ++g) {
      if (x.act(g, m) != m) {
        if (!f(m, g).is_zero()) return {m, g};
        continue;
      }
      for (int h = 0; h < ng; ++h)
        if (f(x.act(h, m), x.G->conj(h, g)) != f(m, g)) return {m, g, h};
    }
  return {};
}

inline void verify_class_function(const ClassFunction& f) {
  auto w = class_function_violation(f);
  if (!w.empty()) fail("NotClassFunction", "class function conditions violated", w);
}

/// Exact trace character psi(m, g) = Tr(P(m) Q(g)).
inline ClassFunction character_of(const ExactRep& m) {
  auto f = zero_class_function(m.xmod);
  for (int h = 0; h < static_cast<int>(m.xmod->h_order()); ++h)
    for (int g = 0; g < static_cast<int>(m.xmod->g_order()); ++g) f.at(h, g) = (m.P[static_cast<std::size_t>(h)] * m.Q[static_cast<std::size_t>(g)]).trace();
  verify_class_function(f);
  return f;
}

/// Float trace character snapped to Q(zeta). Where g fixes m, Q(g) acts on
/// the image of P(m) as a representation of <g>; the eigenvalue
/// multiplicities of that action are recovered from the traces of P(m)Q(g^l)
/// and must round to non-negative integers within `tol`.
inline ClassFunction character_of(const FloatRep& m, double tol = 1e-6) {
  const auto& x = *m.xmod;
  auto f = zero_class_function(m.xmod);
  for (int h = 0; h < static_cast<int>(x.h_order()); ++h) {
    const auto& ph = m.P[static_cast<std::size_t>(h)];
    for (int g = 0; g < static_cast<int>(x.g_order()); ++g) {
      if (x.act(g, h) != h) {
        if (std::abs((ph * m.Q[static_cast<std::size_t>(g)]).trace()) > tol) fail("SnapFailure", "nonzero trace off the fixed pairs", {h, g});
        continue;
      }
      const int o = x.G->element_order(g);
      std::vector<Complex> traces;
      int power = 0;
      for (int l = 0; l < o; ++l) {
        traces.push_back((ph * m.Q[static_cast<std::size_t>(power)]).trace());
        power = x.G->mul(power, g);
      }
      Cyclotomic v;
      for (int k = 0; k < o; ++k) {
        Complex mult = 0;
        for (int l = 0; l < o; ++l) mult += traces[static_cast<std::size_t>(l)] * std::polar(1.0, -2.0 * std::numbers::pi * k * l / o);
        mult /= static_cast<double>(o);
        const double r = std::round(mult.real());
        if (std::abs(mult - Complex(r, 0)) > tol || r < 0) fail("SnapFailure", "trace is not a sum of roots of unity", {h, g});
        if (r > 0) v += Cyclotomic::root_of_unity(o, k).scaled(Rational(static_cast<long>(r)));
      }
      if (std::abs(v.to_complex() - traces[1 % traces.size()]) > tol) fail("SnapFailure", "snapped value disagrees with the trace", {h, g});
      f.at(h, g) = v;
    }
  }
  verify_class_function(f);
  return f;
}

/// Irreducible character of (s, i) from the induction formula:
/// psi(m, g) = chi_i(g_m^-1 g g_m) when m is in the orbit of s and g fixes m.
inline ClassFunction simple_character(const StabilizerData& sd, const SimpleLabel& l) {
  sd.check(l);
  const auto& x = *sd.xmod();
  const auto& od = x.orbit_data;
  const auto& stab = sd.stabilizer(l.orbit);
  const auto& t = sd.table(l.orbit);
  auto f = zero_class_function(sd.xmod());
  for (int m : od.orbit_members[static_cast<std::size_t>(l.orbit)]) {
    const int gm = od.witness[static_cast<std::size_t>(m)];
    for (int g = 0; g < static_cast<int>(x.g_order()); ++g) {
      if (x.act(g, m) != m) continue;
      const int sigma = x.G->mul(x.G->mul(x.G->inv(gm), g), gm);
      f.at(m, g) = t.value(static_cast<std::size_t>(l.irrep), stab.index_of[static_cast<std::size_t>(sigma)]);
    }
  }
  return f;
}

/// <a, b> = (1/|G|) sum_{m,g} conj(a(m,g)) b(m,g)
inline Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.xmod != b.xmod) fail("XmodMismatch", "class functions over different crossed modules");
  Cyclotomic s;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    if (!a.values[k].is_zero() && !b.values[k].is_zero()) s += a.values[k].conj() * b.values[k];
  return s.scaled(Rational(1, static_cast<unsigned long>(a.xmod->g_order())));
}

/// (ab)(m, g) = sum_n a(n, g) b(n^-1 m, g)
inline ClassFunction convolution_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.xmod != b.xmod) fail("XmodMismatch", "class functions over different crossed modules");
  const auto& x = *a.xmod;
  auto f = zero_class_function(a.xmod);
  for (int g = 0; g < static_cast<int>(x.g_order()); ++g)
    for (int n = 0; n < static_cast<int>(x.h_order()); ++n) {
      const auto& an = a(n, g);
      if (an.is_zero()) continue;
      for (int m = 0; m < static_cast<int>(x.h_order()); ++m) {
        const auto& bv = b(x.H->mul(x.H->inv(n), m), g);
        if (!bv.is_zero()) f.at(m, g) += an * bv;
      }
    }
  verify_class_function(f);
  return f;
}

/// d = sum_m a(m, 1)
inline Cyclotomic dimension_of(const ClassFunction& a) {
  Cyclotomic s;
  for (int m = 0; m < static_cast<int>(a.xmod->h_order()); ++m) s += a(m, 0);
  return s;
}

/// Multiplicities <psi_l, chi> over all simple labels; each must be a
/// non-negative integer and the dimensions must add up.
inline std::vector<std::pair<SimpleLabel, long>> decompose_character(const StabilizerData& sd, const ClassFunction& chi) {
  std::vector<std::pair<SimpleLabel, long>> out;
  long total = 0;
  for (const auto& l : sd.labels()) {
    auto ip = inner_product(simple_character(sd, l), chi);
    if (!ip.is_integer() || ip.rational_value() < 0)
      fail("NonIntegerMultiplicity", "multiplicity is not a non-negative integer: " + ip.to_string(), {l.orbit, l.irrep});
    const long mult = ip.rational_value().get_num().get_si();
    total += mult * sd.dimension(l);
    if (mult) out.emplace_back(l, mult);
  }
  auto d = dimension_of(chi);
  if (!d.is_integer() || d.rational_value() != total) fail("NonIntegerMultiplicity", "multiplicities do not account for the dimension", {total});
  return out;
}

template <class T>
std::vector<std::pair<SimpleLabel, long>> decompose(const StabilizerData& sd, const XModRepT<T>& m) {
  auto out = decompose_character(sd, character_of(m));
  long total = 0;
  for (const auto& [l, k] : out) total += k * sd.dimension(l);
  if (total != static_cast<long>(m.dim)) fail("NonIntegerMultiplicity", "dimension mismatch in decomposition", {total, static_cast<long>(m.dim)});
  return out;
}

/// Block character table: rows are labels, columns are (orbit, class of
/// Stab(s)) evaluated at (s, class representative).
struct XModCharTable {
  std::vector<SimpleLabel> labels;
  struct Column {
    int orbit;
    int stab_class;
    int h;  // the orbit representative s
    int g;  // class representative in G
  };
  std::vector<Column> columns;
  std::vector<std::vector<Cyclotomic>> entries;
};

inline XModCharTable xmod_character_table(const StabilizerData& sd) {
  const auto& x = *sd.xmod();
  XModCharTable t;
  t.labels = sd.labels();
  for (int k = 0; k < static_cast<int>(x.orbit_count()); ++k) {
    const auto& stab = sd.stabilizer(k);
    const auto& cls = stab.group->classes();
    for (int c = 0; c < static_cast<int>(cls.size()); ++c)
      t.columns.push_back({k, c, x.orbit_data.orbit_reps[static_cast<std::size_t>(k)], stab.embedding[static_cast<std::size_t>(cls.reps[static_cast<std::size_t>(c)])]});
  }
  for (const auto& l : t.labels) {
    auto psi = simple_character(sd, l);
    verify_class_function(psi);
    // away from its own orbit the character vanishes identically
    for (int m = 0; m < static_cast<int>(x.h_order()); ++m) {
      if (x.orbit_data.orbit_of[static_cast<std::size_t>(m)] == sd.rep(l)) continue;
      for (int g = 0; g < static_cast<int>(x.g_order()); ++g)
        if (!psi(m, g).is_zero()) fail("BlockCheck", "character nonzero off its orbit", {l.orbit, l.irrep, m, g});
    }
    std::vector<Cyclotomic> row;
    for (const auto& c : t.columns) row.push_back(psi(c.h, c.g));
    t.entries.push_back(std::move(row));
  }
  return t;
}

/// P_N = (1/|G|) sum_{g,h} P(h) Q(g) p P(g^-1 . h) Q(g^-1): a module
/// projection onto the submodule spanned by the columns of `basis`.
template <class T>
Matrix<T> maschke_project(const XModRepT<T>& m, const Matrix<T>& basis, const Matrix<T>& p, double tol = 1e-9) {
  const auto& x = *m.xmod;
  const std::size_t r = basis.cols() ? rank(basis, tol) : 0;
  auto stays_inside = [&](const Matrix<T>& op) {
    if (r == 0) return true;
    auto img = op * basis;
    Matrix<T> joined(basis.rows(), basis.cols() + img.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      for (std::size_t j = 0; j < basis.cols(); ++j) joined(i, j) = basis(i, j);
      for (std::size_t j = 0; j < img.cols(); ++j) joined(i, basis.cols() + j) = img(i, j);
    }
    return rank(joined, tol) == r;
  };
  for (int g = 0; g < static_cast<int>(x.g_order()); ++g)
    if (!stays_inside(m.Q[static_cast<std::size_t>(g)])) fail("NotSubmodule", "subspace is not Q-invariant", {g});
  for (int h = 0; h < static_cast<int>(x.h_order()); ++h)
    if (!stays_inside(m.P[static_cast<std::size_t>(h)])) fail("NotSubmodule", "subspace is not P-invariant", {h});
  Matrix<T> out(m.dim, m.dim);
  for (int g = 0; g < static_cast<int>(x.g_order()); ++g) {
    const int gi = x.G->inv(g);
    for (int h = 0; h < static_cast<int>(x.h_order()); ++h) {
      const auto& ph = m.P[static_cast<std::size_t>(h)];
      if (ph.is_zero_matrix(0.0)) continue;
      out += ph * m.Q[static_cast<std::size_t>(g)] * p * m.P[static_cast<std::size_t>(x.act(gi, h))] * m.Q[static_cast<std::size_t>(gi)];
    }
  }
  out *= ScalarTraits<T>::from_rational(Rational(1, static_cast<unsigned long>(x.g_order())));
  if (!(out * out).near(out, tol)) fail("MaschkeCheck", "projection is not idempotent");
  for (const auto& q : m.Q)
    if (!(out * q).near(q * out, tol)) fail("MaschkeCheck", "projection does not commute with Q");
  for (const auto& ph : m.P)
    if (!(out * ph).near(ph * out, tol)) fail("MaschkeCheck", "projection does not commute with P");
  if (r > 0 && !(out * basis).near(basis, tol)) fail("MaschkeCheck", "projection does not fix the submodule");
  if (rank(out, tol) != r) fail("MaschkeCheck", "image has the wrong dimension");
  return out;
}

}  // namespace xmodrep
