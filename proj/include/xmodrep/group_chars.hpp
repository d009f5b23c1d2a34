#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "group.hpp"
#include "matrix.hpp"

namespace xmodrep {

/// Exact character table of a finite group. Columns follow
/// group->classes() (representative = minimal index); rows are sorted by
/// degree, then by the values' arguments in [0, 2pi) and moduli.
struct GroupCharTable {
  GroupPtr group;
  std::vector<int> class_reps;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<int> degrees;
  int exponent = 1;
  int prime = 0;  // the prime used for the modular computation

  std::size_t size() const noexcept { return rows.size(); }
  /// chi_i evaluated at an arbitrary element.
  const Cyclotomic& value(std::size_t i, int element) const {
    return rows[i][static_cast<std::size_t>(group->classes().class_of[static_cast<std::size_t>(element)])];
  }
};

namespace detail {

using u64 = std::uint64_t;

inline u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
inline u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModMatrix = std::vector<std::vector<u64>>;

/// Null space basis (as columns stacked in the returned vectors) of m over F_p.
inline std::vector<std::vector<u64>> mod_nullspace(ModMatrix m, u64 p) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = mod_inv(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      u64 f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] = (m[k][j] + p - f * m[r][j] % p) % p;
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = (p - m[k][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve B X = Y for X, B of full column rank (k x d), Y (k x d).
inline ModMatrix mod_solve_columns(const std::vector<std::vector<u64>>& basis_cols, const ModMatrix& y_cols, u64 p) {
  const std::size_t d = basis_cols.size(), k = basis_cols[0].size();
  ModMatrix aug(k, std::vector<u64>(2 * d, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      aug[i][j] = basis_cols[j][i];
      aug[i][d + j] = y_cols[j][i];
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = r;
    while (piv < k && aug[piv][c] == 0) ++piv;
    if (piv == k) fail("LiftFailure", "degenerate eigenspace basis");
    std::swap(aug[piv], aug[r]);
    u64 inv = mod_inv(aug[r][c], p);
    for (auto& x : aug[r]) x = x * inv % p;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      u64 f = aug[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] = (aug[i][j] + p - f * aug[r][j] % p) % p;
    }
    ++r;
  }
  ModMatrix x(d, std::vector<u64>(d, 0));  // x[row][col]
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) x[i][j] = aug[i][d + j];
  return x;
}

struct ValueKey {
  double arg;
  double mod;
};

inline ValueKey value_key(const Cyclotomic& v) {
  if (v.is_zero()) return {-1.0, 0.0};
  auto z = v.to_complex();
  double a = std::atan2(z.imag(), z.real());
  if (a < -1e-9) a += 2.0 * std::numbers::pi;
  if (a < 0) a = 0;
  return {a, std::abs(z)};
}

inline bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == b[j]) continue;
    auto ka = value_key(a[j]), kb = value_key(b[j]);
    if (std::abs(ka.arg - kb.arg) > 1e-9) return ka.arg < kb.arg;
    if (std::abs(ka.mod - kb.mod) > 1e-9) return ka.mod < kb.mod;
  }
  return false;
}

/// One Burnside-Dixon attempt over F_p; returns false if p does not split.
inline bool dixon_attempt(const FiniteGroup& g, u64 p, GroupCharTable& out) {
  const auto& cls = g.classes();
  const std::size_t k = cls.size();
  const int n = static_cast<int>(g.order());
  const int e = g.exponent();

  // structure constants c[j][l][m] = #{x in C_j : x^-1 g_m in C_l}
  std::vector<ModMatrix> a(k, ModMatrix(k, std::vector<u64>(k, 0)));
  for (std::size_t m = 0; m < k; ++m) {
    const int gm = cls.reps[m];
    for (std::size_t j = 0; j < k; ++j)
      for (int x : cls.members[j]) {
        auto l = static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(g.mul(g.inv(x), gm))]);
        a[j][l][m] = (a[j][l][m] + 1) % p;
      }
  }

  // common eigenspaces, stored as lists of column vectors
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> full;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u64> v(k, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      ModMatrix image(d, std::vector<u64>(k, 0));
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < k; ++r) {
          u64 s = 0;
          for (std::size_t t = 0; t < k; ++t) s = (s + a[j][r][t] * space[c][t]) % p;
          image[c][r] = s;
        }
      ModMatrix x = mod_solve_columns(space, image, p);
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        ModMatrix shifted = x;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        auto null = mod_nullspace(shifted, p);
        if (null.empty()) continue;
        std::vector<std::vector<u64>> sub;
        for (auto& nv : null) {
          std::vector<u64> v(k, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < k; ++r) v[r] = (v[r] + nv[c] * space[c][r]) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) return false;
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) return false;

  // primitive e-th root of unity mod p
  u64 z = 0;
  for (u64 cand = 2; cand < p && z == 0; ++cand) {
    u64 r = mod_pow(cand, (p - 1) / static_cast<u64>(e), p);
    bool prim = true;
    for (int q = 1; q < e && prim; ++q)
      if (e % q == 0 && mod_pow(r, static_cast<u64>(q), p) == 1) prim = false;
    if (prim) z = r;
  }
  if (e == 1) z = 1;
  if (z == 0) return false;

  std::vector<u64> inv_class(k);
  for (std::size_t j = 0; j < k; ++j)
    inv_class[j] = static_cast<u64>(cls.class_of[static_cast<std::size_t>(g.inv(cls.reps[j]))]);

  out.rows.clear();
  out.degrees.clear();
  for (auto& space : spaces) {
    std::vector<u64> w = space[0];
    if (w[0] == 0) return false;
    u64 s = mod_inv(w[0], p);
    for (auto& x : w) x = x * s % p;
    u64 sum = 0;
    for (std::size_t j = 0; j < k; ++j)
      sum = (sum + w[j] * w[inv_class[j]] % p * mod_inv(cls.members[j].size() % p, p)) % p;
    if (sum == 0) return false;
    u64 d2 = static_cast<u64>(n) % p * mod_inv(sum, p) % p;
    int deg = 0;
    for (int d = 1; d * d <= n; ++d)
      if (static_cast<u64>(d) * static_cast<u64>(d) % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) return false;
    std::vector<u64> theta(k);
    for (std::size_t j = 0; j < k; ++j)
      theta[j] = w[j] * static_cast<u64>(deg) % p * mod_inv(cls.members[j].size() % p, p) % p;

    std::vector<Cyclotomic> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      const int gj = cls.reps[j];
      const int o = g.element_order(gj);
      const u64 zo = mod_pow(z, static_cast<u64>(e / o), p);
      const u64 inv_o = mod_inv(static_cast<u64>(o) % p, p);
      Cyclotomic value;
      long total = 0;
      for (int kk = 0; kk < o; ++kk) {
        u64 acc = 0;
        int power = 0;  // g_j^l
        for (int l = 0; l < o; ++l) {
          u64 cl = theta[static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(power)])];
          u64 root = mod_pow(zo, static_cast<u64>((static_cast<long>(o) * o - static_cast<long>(kk) * l % o) % o), p);
          acc = (acc + cl * root) % p;
          power = g.mul(power, gj);
        }
        u64 mult = acc * inv_o % p;
        if (mult > static_cast<u64>(deg)) return false;
        total += static_cast<long>(mult);
        if (mult) value += Cyclotomic::root_of_unity(o, kk).scaled(Rational(static_cast<long>(mult)));
      }
      if (total != deg) return false;
      row[j] = value;
    }
    out.rows.push_back(std::move(row));
    out.degrees.push_back(deg);
  }
  return true;
}

}  // namespace detail

/// Character table by the Burnside-Dixon method: class-sum structure
/// constants are diagonalised over F_p with p = 1 mod exponent and
/// p > 2 sqrt|G|, then each character is lifted to Q(zeta_e) from its
/// eigenvalue multiplicities. Verified orthonormal before return.
inline GroupCharTable character_table(const GroupPtr& g, std::size_t cap = 512) {
  if (g->order() > cap) fail("OrderBoundExceeded", "group too large for character table", {static_cast<long>(g->order())});
  const auto& cls = g->classes();
  GroupCharTable t;
  t.group = g;
  t.class_reps = cls.reps;
  t.exponent = g->exponent();
  const auto n = static_cast<detail::u64>(g->order());
  const auto e = static_cast<detail::u64>(t.exponent);
  detail::u64 p = e + 1;
  bool ok = false;
  for (int tries = 0; tries < 20000 && !ok; ++tries, p += e) {
    if (!detail::is_prime(p) || p * p <= 4 * n) continue;
    ok = detail::dixon_attempt(*g, p, t);
    if (ok) t.prime = static_cast<int>(p);
  }
  if (!ok) fail("LiftFailure", "no suitable prime found for the Dixon lift", {static_cast<long>(g->order())});

  // sort rows: degree, then values
  std::vector<std::size_t> perm(t.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return detail::row_less(t.rows[a], t.rows[b]);
  });
  GroupCharTable sorted = t;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted.rows[i] = t.rows[perm[i]];
    sorted.degrees[i] = t.degrees[perm[i]];
  }

  // exact orthonormality and sum of squared degrees
  long sq = 0;
  for (int d : sorted.degrees) sq += static_cast<long>(d) * d;
  if (sq != static_cast<long>(n)) fail("LiftFailure", "sum of squared degrees differs from |G|", {sq});
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a; b < sorted.size(); ++b) {
      Cyclotomic s;
      for (std::size_t j = 0; j < cls.size(); ++j)
        s += (sorted.rows[a][j].conj() * sorted.rows[b][j]).scaled(Rational(static_cast<long>(cls.members[j].size())));
      s = s.scaled(Rational(1, static_cast<unsigned long>(n)));
      if (s != Cyclotomic(a == b ? 1 : 0)) fail("LiftFailure", "rows are not orthonormal", {static_cast<long>(a), static_cast<long>(b)});
    }
  return sorted;
}

/// Element of the group algebra Q(zeta)[G] as a dense coefficient vector.
using GroupAlgebraElement = std::vector<Cyclotomic>;

inline GroupAlgebraElement group_algebra_multiply(const FiniteGroup& g, const GroupAlgebraElement& a,
                                                  const GroupAlgebraElement& b) {
  GroupAlgebraElement out(g.order());
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (a[static_cast<std::size_t>(x)].is_zero()) continue;
    for (int y = 0; y < static_cast<int>(g.order()); ++y)
      if (!b[static_cast<std::size_t>(y)].is_zero())
        out[static_cast<std::size_t>(g.mul(x, y))] += a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(y)];
  }
  return out;
}

/// e_i = (d_i/|G|) sum_g chi_i(g^-1) g, one per row of the table. Checked to
/// be orthogonal idempotents summing to the identity.
inline std::vector<GroupAlgebraElement> central_idempotents_group(const GroupCharTable& t) {
  const FiniteGroup& g = *t.group;
  const auto n = g.order();
  std::vector<GroupAlgebraElement> es;
  for (std::size_t i = 0; i < t.size(); ++i) {
    GroupAlgebraElement e(n);
    Rational scale(t.degrees[i], static_cast<unsigned long>(n));
    scale.canonicalize();
    for (int x = 0; x < static_cast<int>(n); ++x) e[static_cast<std::size_t>(x)] = t.value(i, g.inv(x)).scaled(scale);
    es.push_back(std::move(e));
  }
  GroupAlgebraElement total(n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) total[x] += es[i][x];
    for (std::size_t j = 0; j < es.size(); ++j) {
      auto prod = group_algebra_multiply(g, es[i], es[j]);
      const auto& expect = i == j ? es[i] : GroupAlgebraElement(n);
      if (prod != expect) fail("IdempotentCheck", "group idempotents not orthogonal", {static_cast<long>(i), static_cast<long>(j)});
    }
  }
  GroupAlgebraElement one(n);
  one[0] = Cyclotomic(1);
  if (total != one) fail("IdempotentCheck", "group idempotents do not sum to 1");
  return es;
}

/// Explicit unitary matrix representation affording one irreducible character.
struct MatrixIrrep {
  GroupPtr group;
  int degree = 1;
  std::size_t character_index = 0;
  std::vector<Matrix<Complex>> matrices;  // indexed by group element
};

namespace detail {

inline bool check_irrep(const MatrixIrrep& r, const GroupCharTable& t, double tol) {
  const FiniteGroup& g = *r.group;
  const auto n = static_cast<int>(g.order());
  if (!r.matrices[0].near(Matrix<Complex>::identity(static_cast<std::size_t>(r.degree)), tol)) return false;
  for (int x = 0; x < n; ++x) {
    Complex tr = r.matrices[static_cast<std::size_t>(x)].trace();
    if (std::abs(tr - t.value(r.character_index, x).to_complex()) > tol) return false;
    for (int y = 0; y < n; ++y)
      if (!(r.matrices[static_cast<std::size_t>(x)] * r.matrices[static_cast<std::size_t>(y)])
               .near(r.matrices[static_cast<std::size_t>(g.mul(x, y))], tol))
        return false;
  }
  return true;
}

}  // namespace detail

/// Realise character i as unitary matrices. Degree-1 characters are read off
/// the table; higher degrees are cut out of the regular representation by a
/// random Hermitian operator in the commutant of the isotypic block.
inline MatrixIrrep explicit_irrep(const GroupCharTable& t, std::size_t i, std::uint64_t seed = 0) {
  const FiniteGroup& g = *t.group;
  const auto n = static_cast<int>(g.order());
  MatrixIrrep r;
  r.group = t.group;
  r.degree = t.degrees.at(i);
  r.character_index = i;
  if (r.degree == 1) {
    for (int x = 0; x < n; ++x) {
      Matrix<Complex> m(1, 1);
      m(0, 0) = t.value(i, x).to_complex();
      r.matrices.push_back(m);
    }
    return r;
  }
  using Eigen::MatrixXcd;
  const auto un = static_cast<Eigen::Index>(n);
  std::vector<MatrixXcd> reg(static_cast<std::size_t>(n), MatrixXcd::Zero(un, un));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) reg[static_cast<std::size_t>(x)](g.mul(x, y), y) = 1.0;
  MatrixXcd proj = MatrixXcd::Zero(un, un);
  const double scale = static_cast<double>(r.degree) / n;
  for (int x = 0; x < n; ++x) proj += scale * t.value(i, g.inv(x)).to_complex() * reg[static_cast<std::size_t>(x)];

  Eigen::SelfAdjointEigenSolver<MatrixXcd> pe(proj);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index c = 0; c < un; ++c)
    if (std::abs(pe.eigenvalues()(c) - 1.0) < 1e-6) cols.push_back(c);
  const auto block = static_cast<Eigen::Index>(r.degree) * r.degree;
  if (static_cast<Eigen::Index>(cols.size()) != block)
    fail("SplitFailure", "isotypic block has unexpected dimension", {static_cast<long>(cols.size())});
  MatrixXcd u(un, block);
  for (Eigen::Index c = 0; c < block; ++c) u.col(c) = pe.eigenvectors().col(cols[static_cast<std::size_t>(c)]);

  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 20; ++attempt) {
    MatrixXcd x(un, un);
    for (Eigen::Index a = 0; a < un; ++a)
      for (Eigen::Index b = 0; b < un; ++b) x(a, b) = Complex(normal(rng), normal(rng));
    x = (x + x.adjoint()).eval();
    MatrixXcd avg = MatrixXcd::Zero(un, un);
    for (int y = 0; y < n; ++y) avg += reg[static_cast<std::size_t>(y)] * x * reg[static_cast<std::size_t>(y)].adjoint();
    MatrixXcd tw = u.adjoint() * avg * u;
    tw = (0.5 * (tw + tw.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> te(tw);
    const auto& ev = te.eigenvalues();
    const double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());
    // first cluster of exactly `degree` equal eigenvalues, separated from the rest
    const Eigen::Index d = r.degree;
    bool ok = true;
    for (Eigen::Index c = 0; c + 1 < block; ++c) {
      const bool same_cluster = (c + 1) % d != 0;
      const double gap = ev(c + 1) - ev(c);
      if (same_cluster && gap > 1e-7 * spread) ok = false;
      if (!same_cluster && gap < 1e-4 * spread) ok = false;
    }
    if (!ok) continue;
    MatrixXcd v = u * te.eigenvectors().leftCols(d);
    r.matrices.clear();
    for (int y = 0; y < n; ++y) {
      MatrixXcd m = v.adjoint() * reg[static_cast<std::size_t>(y)] * v;
      Matrix<Complex> mm(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) mm(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = m(a, b);
      r.matrices.push_back(std::move(mm));
    }
    if (detail::check_irrep(r, t, 1e-9)) return r;
  }
  fail("SplitFailure", "random split did not isolate an irreducible subspace", {static_cast<long>(i)});
}

/// Dimension of the space of matrices commuting with every M(g) (Schur: 1
/// for an irreducible representation).
inline std::size_t commutant_dimension(const std::vector<Matrix<Complex>>& mats, double tol = 1e-6) {
  const std::size_t d = mats.at(0).rows();
  Matrix<Complex> sys(mats.size() * d * d, d * d);
  for (std::size_t gi = 0; gi < mats.size(); ++gi) {
    const auto& m = mats[gi];
    // (X M - M X)_{ab} = sum_c X_{ac} M_{cb} - M_{ac} X_{cb}; unknown X_{pq} at p*d+q
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const std::size_t row = gi * d * d + a * d + b;
        for (std::size_t c = 0; c < d; ++c) {
          sys(row, a * d + c) += m(c, b);
          sys(row, c * d + b) -= m(a, c);
        }
      }
  }
  return d * d - rank(sys, tol);
}

}  // namespace xmodrep
