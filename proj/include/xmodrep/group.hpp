#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace xmodrep {

/// Partition of a group into conjugacy classes. Representatives are the
/// smallest index of each class; classes are sorted by representative.
struct ConjugacyClasses {
  std::vector<std::vector<int>> members;
  std::vector<int> reps;
  std::vector<int> class_of;

  std::size_t size() const noexcept { return reps.size(); }
};

/// Finite group given by its Cayley table. The identity is always index 0.
/// Immutable after construction; build through group_from_cayley or
/// group_from_permutations.
class FiniteGroup {
public:
  std::size_t order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int pow(int a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
  int exponent() const {
    int e = 1;
    for (int o : order_) e = std::lcm(e, o);
    return e;
  }
  bool is_abelian() const {
    for (int a = 0; a < static_cast<int>(n_); ++a)
      for (int b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  std::vector<int> center() const {
    std::vector<int> z;
    for (int a = 0; a < static_cast<int>(n_); ++a) {
      bool central = true;
      for (int b = 0; b < static_cast<int>(n_) && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) z.push_back(a);
    }
    return z;
  }

  const std::vector<int>& table() const noexcept { return table_; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const ConjugacyClasses& classes() const noexcept { return classes_; }

  /// Index of the element with the given display name, or -1.
  int find(const std::string& nm) const {
    auto it = std::find(names_.begin(), names_.end(), nm);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
  }

  friend std::shared_ptr<const FiniteGroup> group_from_cayley(const std::vector<std::vector<int>>&,
                                                             std::vector<std::string>);

private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<std::string> names_;
  ConjugacyClasses classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline void FiniteGroup::finish() {
  order_.assign(n_, 1);
  for (std::size_t a = 0; a < n_; ++a) {
    int x = static_cast<int>(a), k = 1;
    while (x != 0) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    order_[a] = k;
  }
  classes_.class_of.assign(n_, -1);
  for (int x = 0; x < static_cast<int>(n_); ++x) {
    if (classes_.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(classes_.reps.size());
    std::vector<int> cls;
    for (int g = 0; g < static_cast<int>(n_); ++g) {
      int y = conj(g, x);
      if (classes_.class_of[static_cast<std::size_t>(y)] < 0) {
        classes_.class_of[static_cast<std::size_t>(y)] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.reps.push_back(x);
    classes_.members.push_back(std::move(cls));
  }
}

/// Validate a Cayley table and build the group; relabels so that the
/// identity is index 0 (swapping it with whatever element held index 0).
inline GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table, std::vector<std::string> names = {}) {
  const std::size_t n = table.size();
  if (n == 0) fail("InvalidTable", "empty Cayley table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) fail("InvalidTable", "Cayley table is not square", {static_cast<long>(r)});
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] < 0 || static_cast<std::size_t>(table[r][c]) >= n)
        fail("InvalidTable", "entry out of range", {static_cast<long>(r), static_cast<long>(c)});
  }
  int e = -1;
  for (std::size_t x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      ok = table[x][y] == static_cast<int>(y) && table[y][x] == static_cast<int>(y);
    if (ok) e = static_cast<int>(x);
  }
  if (e < 0) fail("NoIdentity", "no two-sided identity element in the table");

  // relabel: old index e <-> new index 0
  std::vector<int> to_new(n), to_old(n);
  std::iota(to_new.begin(), to_new.end(), 0);
  std::swap(to_new[0], to_new[static_cast<std::size_t>(e)]);
  for (std::size_t i = 0; i < n; ++i) to_old[static_cast<std::size_t>(to_new[i])] = static_cast<int>(i);

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g->table_[a * n + b] = to_new[static_cast<std::size_t>(
          table[static_cast<std::size_t>(to_old[a])][static_cast<std::size_t>(to_old[b])])];

  g->inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g->table_[a * n + b] == 0 && g->table_[b * n + a] == 0) {
        g->inv_[a] = static_cast<int>(b);
        break;
      }
    if (g->inv_[a] < 0) fail("NoInverse", "element has no two-sided inverse", {static_cast<long>(to_old[a])});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(g->table_[a * n + b]);
      for (std::size_t c = 0; c < n; ++c) {
        if (g->table_[ab * n + c] != g->table_[a * n + static_cast<std::size_t>(g->table_[b * n + c])])
          fail("NotAssociative", "(ab)c != a(bc)",
               {static_cast<long>(to_old[a]), static_cast<long>(to_old[b]), static_cast<long>(to_old[c])});
      }
    }

  if (names.size() == n) {
    g->names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->names_[i] = names[static_cast<std::size_t>(to_old[i])];
  } else {
    g->names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->names_[i] = i == 0 ? "e" : "g" + std::to_string(i);
  }
  g->finish();
  return g;
}

using Permutation = std::vector<int>;

namespace detail {

inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  const bool compact = p.size() < 10;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first && !compact) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

inline void check_permutation(int degree, const Permutation& p) {
  if (static_cast<int>(p.size()) != degree) fail("InvalidPermutation", "generator has wrong length", {static_cast<long>(p.size())});
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)]) fail("InvalidPermutation", "generator is not a bijection", {v});
    hit[static_cast<std::size_t>(v)] = true;
  }
}

/// Product read left to right: first a, then b (the GAP convention), so
/// (ab)(i) = b(a(i)).
inline Permutation product(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

/// Compress a word such as "rrs" into "r^2s".
inline std::string compress_word(const std::string& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Table of a list of permutations that is closed under composition.
inline GroupPtr group_from_closed_list(const std::vector<Permutation>& elems, std::vector<std::string> names) {
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto it = index.find(product(elems[a], elems[b]));
      if (it == index.end()) fail("NotClosed", "permutation list is not closed", {static_cast<long>(a), static_cast<long>(b)});
      table[a][b] = it->second;
    }
  return group_from_cayley(table, std::move(names));
}

}  // namespace detail

/// Breadth-first closure of the generators (products read left to right,
/// right multiplication by generators). Elements are ordered by first discovery.
/// Optional generator labels produce word names such as "r^2s".
inline GroupPtr group_from_permutations(int degree, const std::vector<Permutation>& gens, std::size_t cap = 10000,
                                        const std::vector<std::string>& gen_labels = {}) {
  if (degree < 1) fail("InvalidPermutation", "degree must be positive", {degree});
  for (const auto& g : gens) detail::check_permutation(degree, g);
  Permutation id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::vector<std::string> words{""};
  std::map<Permutation, int> seen{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = detail::product(elems[head], gens[k]);
      if (seen.count(y)) continue;
      if (elems.size() >= cap) fail("OrderBoundExceeded", "permutation group closure exceeds cap", {static_cast<long>(cap)});
      seen.emplace(y, static_cast<int>(elems.size()));
      elems.push_back(y);
      words.push_back(words[head] + (k < gen_labels.size() ? gen_labels[k] : std::string()));
    }
  }
  std::vector<std::string> names(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    names[i] = gen_labels.size() == gens.size() && !gens.empty() ? detail::compress_word(words[i])
                                                                  : detail::cycle_notation(elems[i]);
  return detail::group_from_closed_list(elems, std::move(names));
}

/// Z/n with elements 0..n-1 named additively.
inline GroupPtr cyclic_group(int n) {
  if (n < 1) fail("InvalidParameter", "cyclic group order must be positive", {n});
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return group_from_cayley(t, names);
}

inline GroupPtr trivial_group() { return cyclic_group(1); }

/// Dihedral group of order 2n generated by the rotation r and a reflection s.
inline GroupPtr dihedral_group(int n) {
  if (n < 2) fail("InvalidParameter", "dihedral group needs n >= 2", {n});
  Permutation r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = (i + 1) % n;
    s[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  if (n == 2) {  // act on 4 points so that r and s are distinct
    return group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, 10000, {"r", "s"});
  }
  return group_from_permutations(n, {r, s}, 10000, {"r", "s"});
}

/// Symmetric group on n points. Elements are ordered by number of moved
/// points, then by their cycle notation, so S3 reads e,(12),(13),(23),(123),(132).
inline GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 7) fail("InvalidParameter", "symmetric group degree out of range", {n});
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  struct Keyed {
    int moved;
    std::vector<int> cycles;
    Permutation perm;
  };
  std::vector<Keyed> all;
  do {
    Keyed k{0, {}, p};
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (seen[s] || p[s] == static_cast<int>(s)) continue;
      std::size_t x = s;
      while (!seen[x]) {
        seen[x] = true;
        k.cycles.push_back(static_cast<int>(x));
        ++k.moved;
        x = static_cast<std::size_t>(p[x]);
      }
      k.cycles.push_back(-1);
    }
    all.push_back(std::move(k));
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
    if (a.moved != b.moved) return a.moved < b.moved;
    return a.cycles < b.cycles;
  });
  std::vector<Permutation> elems;
  std::vector<std::string> names;
  for (const auto& k : all) {
    elems.push_back(k.perm);
    names.push_back(detail::cycle_notation(k.perm));
  }
  return detail::group_from_closed_list(elems, std::move(names));
}

/// Group homomorphism stored elementwise.
struct GroupHomomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
};

inline void validate_homomorphism(const GroupHomomorphism& f) {
  if (f.map.size() != f.source->order()) fail("InvalidHomomorphism", "map has wrong length", {static_cast<long>(f.map.size())});
  for (int v : f.map)
    if (v < 0 || static_cast<std::size_t>(v) >= f.target->order()) fail("InvalidHomomorphism", "image out of range", {v});
  if (f(0) != 0) fail("NotHomomorphism", "identity not mapped to identity", {0});
  const int n = static_cast<int>(f.source->order());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f(f.source->mul(x, y)) != f.target->mul(f(x), f(y))) fail("NotHomomorphism", "f(xy) != f(x)f(y)", {x, y});
}

/// Left action of `group` on `set_group`; act[g * |H| + h] = g . h.
struct GroupAction {
  GroupPtr group;
  GroupPtr set_group;
  std::vector<int> act;

  int operator()(int g, int h) const { return act[static_cast<std::size_t>(g) * set_group->order() + static_cast<std::size_t>(h)]; }
};

inline GroupAction trivial_action(GroupPtr g, GroupPtr h) {
  GroupAction a{g, h, std::vector<int>(g->order() * h->order())};
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t y = 0; y < h->order(); ++y) a.act[x * h->order() + y] = static_cast<int>(y);
  return a;
}

inline GroupAction conjugation_action(GroupPtr g) {
  GroupAction a{g, g, std::vector<int>(g->order() * g->order())};
  for (int x = 0; x < static_cast<int>(g->order()); ++x)
    for (int y = 0; y < static_cast<int>(g->order()); ++y)
      a.act[static_cast<std::size_t>(x) * g->order() + static_cast<std::size_t>(y)] = g->conj(x, y);
  return a;
}

/// Checks identity, compatibility and that every g acts by an automorphism.
inline void validate_action(const GroupAction& a) {
  const int ng = static_cast<int>(a.group->order()), nh = static_cast<int>(a.set_group->order());
  if (a.act.size() != static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh))
    fail("InvalidAction", "action table has wrong size", {static_cast<long>(a.act.size())});
  for (int v : a.act)
    if (v < 0 || v >= nh) fail("InvalidAction", "action image out of range", {v});
  for (int h = 0; h < nh; ++h)
    if (a(0, h) != h) fail("NotAction", "identity does not act trivially", {0, h});
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int h = 0; h < nh; ++h)
        if (a(a.group->mul(g1, g2), h) != a(g1, a(g2, h))) fail("NotAction", "(g1 g2).h != g1.(g2.h)", {g1, g2, h});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int k = 0; k < nh; ++k)
        if (a(g, a.set_group->mul(h, k)) != a.set_group->mul(a(g, h), a(g, k)))
          fail("NotAutomorphism", "g.(hk) != (g.h)(g.k)", {g, h, k});
}

struct OrbitData {
  std::vector<int> orbit_reps;
  std::vector<int> orbit_of;       // element -> representative
  std::vector<int> witness;        // element h -> some g with g . rep = h
  std::vector<std::vector<int>> stabilizers;  // per representative, sorted G-indices
  std::vector<std::vector<int>> orbit_members;  // per representative, sorted H-indices

  /// Position of a representative in orbit_reps, or -1.
  int rep_index(int rep) const {
    auto it = std::find(orbit_reps.begin(), orbit_reps.end(), rep);
    return it == orbit_reps.end() ? -1 : static_cast<int>(it - orbit_reps.begin());
  }
};

/// Orbit decomposition; representative = smallest element of each orbit and
/// witness[h] = smallest g with g . rep = h.
inline OrbitData orbits(const GroupAction& a) {
  const int ng = static_cast<int>(a.group->order()), nh = static_cast<int>(a.set_group->order());
  OrbitData d;
  d.orbit_of.assign(static_cast<std::size_t>(nh), -1);
  d.witness.assign(static_cast<std::size_t>(nh), -1);
  for (int h = 0; h < nh; ++h) {
    if (d.orbit_of[static_cast<std::size_t>(h)] >= 0) continue;
    std::vector<int> members, stab;
    for (int g = 0; g < ng; ++g) {
      int y = a(g, h);
      if (y == h) stab.push_back(g);
      if (d.orbit_of[static_cast<std::size_t>(y)] < 0) {
        d.orbit_of[static_cast<std::size_t>(y)] = h;
        d.witness[static_cast<std::size_t>(y)] = g;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    d.orbit_reps.push_back(h);
    d.stabilizers.push_back(std::move(stab));
    d.orbit_members.push_back(std::move(members));
  }
  return d;
}

/// Conjugacy classes as computed at group construction.
inline const ConjugacyClasses& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

/// A subgroup realised as a standalone FiniteGroup plus its embedding.
struct Subgroup {
  GroupPtr group;
  std::vector<int> embedding;  // subgroup index -> parent index
  std::vector<int> index_of;   // parent index -> subgroup index or -1
};

/// Build a subgroup from a sorted element list containing 0; subgroup index
/// order follows parent order, so the identity stays at 0.
inline Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  if (elems.empty() || elems[0] != 0) fail("NotSubgroup", "element list must contain the identity");
  Subgroup s;
  s.embedding = elems;
  s.index_of.assign(parent.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) s.index_of[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    names.push_back(parent.name(elems[a]));
    for (std::size_t b = 0; b < elems.size(); ++b) {
      int p = s.index_of[static_cast<std::size_t>(parent.mul(elems[a], elems[b]))];
      if (p < 0) fail("NotSubgroup", "element list is not closed", {elems[a], elems[b]});
      t[a][b] = p;
    }
  }
  s.group = group_from_cayley(t, names);
  return s;
}

}  // namespace xmodrep
