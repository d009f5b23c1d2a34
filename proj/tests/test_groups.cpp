#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "xmodrep/group.hpp"

using namespace xmodrep;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // first a, then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

// S3 in the order e,(12),(13),(23),(123),(132), 0-based points
std::vector<Perm> s3_elements() { return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}; }

std::vector<std::vector<int>> table_of(const std::vector<Perm>& elems) {
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      t[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), compose(elems[a], elems[b])) - elems.begin());
  return t;
}

std::vector<std::set<int>> brute_force_classes(const FiniteGroup& g) {
  std::vector<std::set<int>> out;
  std::set<int> seen;
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    if (seen.count(x)) continue;
    std::set<int> cls;
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < n; ++y)
        if (g.mul(a, x) == g.mul(y, a)) cls.insert(y);  // y = a x a^-1
    seen.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : g.classes().members) s.insert(c.size());
  return s;
}

std::string expect_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(GroupFromCayley, TrivialGroup) {
  auto g = group_from_cayley({{0}});
  EXPECT_EQ(g->order(), 1u);
  EXPECT_EQ(g->classes().size(), 1u);
  EXPECT_EQ(g->inv(0), 0);
}

TEST(GroupFromCayley, Z2IsSelfInverse) {
  auto g = group_from_cayley({{0, 1}, {1, 0}});
  EXPECT_EQ(g->order(), 2u);
  EXPECT_EQ(g->inv(0), 0);
  EXPECT_EQ(g->inv(1), 1);
}

TEST(GroupFromCayley, S3HasThreeClasses) {
  auto g = group_from_cayley(table_of(s3_elements()));
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->classes().size(), 3u);
  auto oracle = brute_force_classes(*g);
  ASSERT_EQ(oracle.size(), 3u);
  for (std::size_t c = 0; c < 3; ++c) {
    std::set<int> mine(g->classes().members[c].begin(), g->classes().members[c].end());
    EXPECT_EQ(mine, oracle[c]);
  }
}

TEST(GroupFromCayley, RelabelsIdentityToZero) {
  // Z3 with the identity stored at index 2
  auto g = group_from_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  EXPECT_EQ(g->name(0), "e");
  for (int x = 0; x < 3; ++x) {
    EXPECT_EQ(g->mul(0, x), x);
    EXPECT_EQ(g->mul(x, g->inv(x)), 0);
  }
}

TEST(GroupFromCayley, Errors) {
  EXPECT_EQ(expect_error([] { group_from_cayley({{0, 1}, {1, 1}}); }), "NoInverse");
  EXPECT_EQ(expect_error([] { group_from_cayley({{1, 0}, {0, 0}}); }), "NoIdentity");
  EXPECT_EQ(expect_error([] { group_from_cayley({{0, 1}, {1, 2}}); }), "InvalidTable");
  // identity 0, every element self-inverse, but not associative (Latin square of order 5)
  std::vector<std::vector<int>> bad = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    group_from_cayley(bad);
    FAIL() << "expected NotAssociative";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotAssociative");
    ASSERT_EQ(e.witness().size(), 3u);
    const long a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    EXPECT_NE(bad[static_cast<std::size_t>(bad[a][b])][c], bad[a][static_cast<std::size_t>(bad[b][c])]);
  }
}

TEST(GroupFromPermutations, S3FromTransposition) {
  auto g = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g->order(), 6u);
}

TEST(GroupFromPermutations, CyclicOfOrderFour) {
  auto g = group_from_permutations(4, {{1, 2, 3, 0}});
  EXPECT_EQ(g->order(), 4u);
  EXPECT_TRUE(g->is_abelian());
  EXPECT_EQ(g->exponent(), 4);
}

TEST(GroupFromPermutations, DihedralOfOrderEight) {
  auto g = group_from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  EXPECT_EQ(g->order(), 8u);
  EXPECT_FALSE(g->is_abelian());
}

TEST(GroupFromPermutations, CapAndBadInput) {
  EXPECT_EQ(expect_error([] { group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100); }),
            "OrderBoundExceeded");
  EXPECT_EQ(expect_error([] { group_from_permutations(3, {{0, 0, 1}}); }), "InvalidPermutation");
}

TEST(NamedGroups, S3Enumeration) {
  auto g = symmetric_group(3);
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  EXPECT_EQ(g->names(), names);
  EXPECT_EQ(*g->table().data(), 0);
  auto oracle = group_from_cayley(table_of(s3_elements()));
  EXPECT_EQ(g->table(), oracle->table());
}

TEST(ConjugacyClasses, Trivial) {
  auto g = trivial_group();
  ASSERT_EQ(conjugacy_classes(*g).size(), 1u);
  EXPECT_EQ(conjugacy_classes(*g).members[0], std::vector<int>{0});
}

TEST(ConjugacyClasses, S3Sizes) {
  auto g = symmetric_group(3);
  const auto& c = conjugacy_classes(*g);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.members[0].size(), 1u);
  EXPECT_EQ(c.members[1].size(), 3u);
  EXPECT_EQ(c.members[2].size(), 2u);
  EXPECT_EQ(c.reps, (std::vector<int>{0, 1, 4}));
}

TEST(ConjugacyClasses, D4MatchesColumnHeads) {
  auto g = dihedral_group(4);
  const auto& c = conjugacy_classes(*g);
  ASSERT_EQ(c.size(), 5u);
  std::vector<std::string> heads;
  for (int r : c.reps) heads.push_back(g->name(r));
  // [1],[r],[s],[r^2],[sr]: the last class is {rs, sr}
  EXPECT_EQ(heads, (std::vector<std::string>{"e", "r", "s", "r^2", "rs"}));
  const auto& last = c.members[4];
  EXPECT_NE(std::find(last.begin(), last.end(), g->find("sr")), last.end());
  EXPECT_EQ(c.members[3].size(), 1u);
}

TEST(ConjugacyClasses, SortedByMinimalRepresentative) {
  for (auto g : {symmetric_group(4), dihedral_group(6), cyclic_group(7)}) {
    const auto& c = conjugacy_classes(*g);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(c.reps[i], c.members[i].front());
      if (i) EXPECT_LT(c.reps[i - 1], c.reps[i]);
    }
    EXPECT_EQ(c.size(), brute_force_classes(*g).size());
  }
}

TEST(Orbits, TrivialAction) {
  auto g = symmetric_group(3);
  auto h = cyclic_group(4);
  auto d = orbits(trivial_action(g, h));
  EXPECT_EQ(d.orbit_reps, (std::vector<int>{0, 1, 2, 3}));
  for (const auto& s : d.stabilizers) EXPECT_EQ(s.size(), 6u);
}

TEST(Orbits, S3Conjugation) {
  auto g = symmetric_group(3);
  auto d = orbits(conjugation_action(g));
  ASSERT_EQ(d.orbit_reps.size(), 3u);
  EXPECT_EQ(d.stabilizers[0].size(), 6u);
  EXPECT_EQ(d.stabilizers[1].size(), 2u);
  EXPECT_EQ(d.stabilizers[2].size(), 3u);
}

TEST(Orbits, InvariantsAndWitnesses) {
  for (auto g : {symmetric_group(3), dihedral_group(4), symmetric_group(4)}) {
    auto a = conjugation_action(g);
    auto d = orbits(a);
    std::size_t total = 0;
    for (std::size_t k = 0; k < d.orbit_reps.size(); ++k) {
      total += d.orbit_members[k].size();
      EXPECT_EQ(d.orbit_members[k].size() * d.stabilizers[k].size(), g->order());
      EXPECT_EQ(d.witness[static_cast<std::size_t>(d.orbit_reps[k])], 0);
    }
    EXPECT_EQ(total, g->order());
    for (int h = 0; h < static_cast<int>(g->order()); ++h)
      EXPECT_EQ(a(d.witness[static_cast<std::size_t>(h)], d.orbit_of[static_cast<std::size_t>(h)]), h);
    // conjugation orbits are the conjugacy classes
    const auto& c = g->classes();
    ASSERT_EQ(c.size(), d.orbit_reps.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      EXPECT_EQ(c.reps[k], d.orbit_reps[k]);
      EXPECT_EQ(c.members[k], d.orbit_members[k]);
    }
  }
}

TEST(RoundTrip, PermutationsThroughCayley) {
  auto g = group_from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  std::vector<std::vector<int>> t(g->order(), std::vector<int>(g->order()));
  for (int a = 0; a < static_cast<int>(g->order()); ++a)
    for (int b = 0; b < static_cast<int>(g->order()); ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g->mul(a, b);
  auto h = group_from_cayley(t);
  EXPECT_EQ(h->order(), g->order());
  EXPECT_EQ(class_sizes(*h), class_sizes(*g));
}

TEST(Homomorphism, Validation) {
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  validate_homomorphism({z4, z2, {0, 1, 0, 1}});
  EXPECT_EQ(expect_error([&] { validate_homomorphism({z4, z2, {0, 1, 1, 1}}); }), "NotHomomorphism");
}

TEST(Action, Validation) {
  auto g = symmetric_group(3);
  validate_action(conjugation_action(g));
  auto broken = conjugation_action(g);
  std::swap(broken.act[6 + 2], broken.act[6 + 3]);
  EXPECT_FALSE(expect_error([&] { validate_action(broken); }).empty());
}

TEST(Subgroup, Embedding) {
  auto g = symmetric_group(3);
  auto s = make_subgroup(*g, {0, 4, 5});
  EXPECT_EQ(s.group->order(), 3u);
  EXPECT_TRUE(s.group->is_abelian());
  EXPECT_EQ(s.group->name(1), "(123)");
  EXPECT_EQ(expect_error([&] { make_subgroup(*g, {0, 1, 4}); }), "NotSubgroup");
}
