#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace xmodrep {

/// Crossed module (G, H, mu, gamma). Orbits of mu and the stabilizer
/// subgroups of their representatives are computed once at construction.
class CrossedModule {
public:
  GroupPtr G;
  GroupPtr H;
  GroupAction mu;
  GroupHomomorphism gamma;
  OrbitData orbit_data;
  std::vector<Subgroup> stabilizers;  // parallel to orbit_data.orbit_reps
  std::string name;

  int act(int g, int h) const { return mu(g, h); }
  int gam(int h) const { return gamma(h); }
  std::size_t g_order() const noexcept { return G->order(); }
  std::size_t h_order() const noexcept { return H->order(); }
  std::size_t orbit_count() const noexcept { return orbit_data.orbit_reps.size(); }

  /// Skips every axiom check. Only meant for negative controls.
  static std::shared_ptr<const CrossedModule> make_unchecked(GroupAction mu, GroupHomomorphism gamma, std::string name = "") {
    auto x = std::make_shared<CrossedModule>();
    x->G = mu.group;
    x->H = mu.set_group;
    x->mu = std::move(mu);
    x->gamma = std::move(gamma);
    x->name = std::move(name);
    x->orbit_data = orbits(x->mu);
    for (const auto& stab : x->orbit_data.stabilizers) x->stabilizers.push_back(make_subgroup(*x->G, stab));
    return x;
  }
};

using XModPtr = std::shared_ptr<const CrossedModule>;

/// Checks mu and gamma individually, then equivariance and Peiffer over all
/// pairs.
inline XModPtr validate_crossed_module(GroupAction mu, GroupHomomorphism gamma, std::string name = "") {
  if (mu.set_group != gamma.source || mu.group != gamma.target)
    fail("XmodMismatch", "action and homomorphism disagree on G or H");
  validate_action(mu);
  validate_homomorphism(gamma);
  const FiniteGroup& g = *mu.group;
  const FiniteGroup& h = *mu.set_group;
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int x = 0; x < static_cast<int>(h.order()); ++x)
      if (gamma(mu(a, x)) != g.conj(a, gamma(x))) fail("EquivarianceViolation", "gamma(g.h) != g gamma(h) g^-1", {a, x});
  for (int x = 0; x < static_cast<int>(h.order()); ++x)
    for (int n = 0; n < static_cast<int>(h.order()); ++n)
      if (mu(gamma(x), n) != h.conj(x, n)) fail("PeifferViolation", "gamma(h).n != h n h^-1", {x, n});
  return CrossedModule::make_unchecked(std::move(mu), std::move(gamma), std::move(name));
}

/// (G, G, conj, id)
inline XModPtr conjugation_xmod(const GroupPtr& g) {
  std::vector<int> id(g->order());
  std::iota(id.begin(), id.end(), 0);
  return validate_crossed_module(conjugation_action(g), {g, g, id}, "conjugation");
}

/// (G, {1}, trivial, trivial)
inline XModPtr trivial_h_xmod(const GroupPtr& g) {
  auto one = trivial_group();
  return validate_crossed_module(trivial_action(g, one), {one, g, {0}}, "trivial_h");
}

/// (G, N, conj, inclusion) for a normal subgroup given by its G-indices.
inline XModPtr normal_subgroup_xmod(const GroupPtr& g, const std::vector<int>& elems) {
  Subgroup n = make_subgroup(*g, elems);
  for (int a = 0; a < static_cast<int>(g->order()); ++a)
    for (int x : n.embedding)
      if (n.index_of[static_cast<std::size_t>(g->conj(a, x))] < 0) fail("NotNormal", "subgroup is not normal", {a, x});
  const std::size_t nh = n.group->order();
  GroupAction mu{g, n.group, std::vector<int>(g->order() * nh)};
  for (int a = 0; a < static_cast<int>(g->order()); ++a)
    for (std::size_t x = 0; x < nh; ++x)
      mu.act[static_cast<std::size_t>(a) * nh + x] =
          n.index_of[static_cast<std::size_t>(g->conj(a, n.embedding[x]))];
  return validate_crossed_module(std::move(mu), {n.group, g, n.embedding}, "normal_subgroup");
}

namespace detail {

/// Greedy generating set: scan elements in index order and keep those not
/// already generated.
inline std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<int> span{0};
  for (int x = 1; x < static_cast<int>(g.order()); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < span.size(); ++i)
      for (int y : gens) {
        int z = g.mul(span[i], y);
        if (!in[static_cast<std::size_t>(z)]) {
          in[static_cast<std::size_t>(z)] = true;
          span.push_back(z);
        }
      }
  }
  return gens;
}

/// Extend generator images to a map on G, or return empty if inconsistent
/// or not bijective.
inline std::vector<int> extend_to_automorphism(const FiniteGroup& g, const std::vector<int>& gens, const std::vector<int>& images) {
  const auto n = g.order();
  std::vector<int> f(n, -1);
  f[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(x, gens[k]);
      int fy = g.mul(f[static_cast<std::size_t>(x)], images[k]);
      if (f[static_cast<std::size_t>(y)] < 0) {
        f[static_cast<std::size_t>(y)] = fy;
        queue.push_back(y);
      } else if (f[static_cast<std::size_t>(y)] != fy) {
        return {};
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (int v : f) {
    if (v < 0 || hit[static_cast<std::size_t>(v)]) return {};
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b)
      if (f[static_cast<std::size_t>(g.mul(a, b))] != g.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) return {};
  return f;
}

}  // namespace detail

/// Aut(G) as a permutation group on G, sorted lexicographically (identity
/// first). Inner automorphisms are named conj(x) for the smallest x
/// inducing them.
struct AutomorphismGroup {
  GroupPtr group;
  std::vector<std::vector<int>> maps;  // maps[a][h] = a(h)
};

inline AutomorphismGroup automorphism_group(const GroupPtr& g, std::size_t cap = 16) {
  if (g->order() > cap) fail("OrderBoundExceeded", "Aut(G) enumeration is capped", {static_cast<long>(g->order()), static_cast<long>(cap)});
  const auto gens = detail::generating_set(*g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < static_cast<int>(g->order()); ++x)
      if (g->element_order(x) == g->element_order(gens[k])) candidates[k].push_back(x);
  std::vector<std::vector<int>> maps;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<int> images(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pick[k]];
    auto f = detail::extend_to_automorphism(*g, gens, images);
    if (!f.empty()) maps.push_back(std::move(f));
    std::size_t k = 0;
    while (k < gens.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(maps.begin(), maps.end());
  const std::size_t m = maps.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> comp(g->order());
      for (std::size_t h = 0; h < g->order(); ++h) comp[h] = maps[a][static_cast<std::size_t>(maps[b][h])];
      table[a][b] = static_cast<int>(std::lower_bound(maps.begin(), maps.end(), comp) - maps.begin());
    }
  std::vector<std::string> names(m);
  for (int x = static_cast<int>(g->order()) - 1; x >= 0; --x) {
    std::vector<int> c(g->order());
    for (int h = 0; h < static_cast<int>(g->order()); ++h) c[static_cast<std::size_t>(h)] = g->conj(x, h);
    auto idx = static_cast<std::size_t>(std::lower_bound(maps.begin(), maps.end(), c) - maps.begin());
    names[idx] = "conj(" + g->name(x) + ")";
  }
  names[0] = "id";
  for (std::size_t a = 0, outer = 0; a < m; ++a)
    if (names[a].empty()) names[a] = "out" + std::to_string(++outer);
  return {group_from_cayley(table, names), std::move(maps)};
}

/// (Aut(G), G, evaluation, x -> conj_x)
inline XModPtr automorphism_xmod(const GroupPtr& g, std::size_t cap = 16) {
  auto aut = automorphism_group(g, cap);
  const std::size_t n = g->order();
  GroupAction mu{aut.group, g, std::vector<int>(aut.group->order() * n)};
  for (std::size_t a = 0; a < aut.maps.size(); ++a)
    for (std::size_t h = 0; h < n; ++h) mu.act[a * n + h] = aut.maps[a][h];
  std::vector<int> gamma(n);
  for (int x = 0; x < static_cast<int>(n); ++x) {
    std::vector<int> c(n);
    for (int h = 0; h < static_cast<int>(n); ++h) c[static_cast<std::size_t>(h)] = g->conj(x, h);
    gamma[static_cast<std::size_t>(x)] = static_cast<int>(std::lower_bound(aut.maps.begin(), aut.maps.end(), c) - aut.maps.begin());
  }
  return validate_crossed_module(std::move(mu), {g, aut.group, std::move(gamma)}, "automorphism");
}

enum class XModKind { Conjugation, TrivialH, NormalSubgroup, Automorphism };

/// Dispatch over the standard constructions; `normal` is only read for
/// NormalSubgroup.
inline XModPtr standard_xmod(XModKind kind, const GroupPtr& g, const std::vector<int>& normal = {}) {
  switch (kind) {
    case XModKind::Conjugation: return conjugation_xmod(g);
    case XModKind::TrivialH: return trivial_h_xmod(g);
    case XModKind::NormalSubgroup: return normal_subgroup_xmod(g, normal);
    case XModKind::Automorphism: return automorphism_xmod(g);
  }
  fail("InvalidKind", "unknown crossed module kind");
}

}  // namespace xmodrep
