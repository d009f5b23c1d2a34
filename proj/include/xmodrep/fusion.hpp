#pragma once

#include <map>
#include <mutex>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dgh.hpp"
#include "rep.hpp"

namespace xmodrep {

namespace detail {

inline long as_count(const Cyclotomic& v, const char* what) {
  if (!v.is_integer() || v.rational_value() < 0) fail("NonInteger", std::string(what) + " is not a non-negative integer: " + v.to_string());
  return v.rational_value().get_num().get_si();
}

}  // namespace detail

/// Fusion coefficients N^c_{a,b} (multiplicity of c in a (x) b) by three
/// routes: character convolution (the reference), the reduced double sum
/// over G x G, and decomposition of explicit tensor products.
class FusionEngine {
public:
  explicit FusionEngine(StabilizerDataPtr sd) : sd_(std::move(sd)), hopf_(sd_->xmod()) {
    for (const auto& l : sd_->labels()) chars_.push_back(simple_character(*sd_, l));
  }

  const StabilizerData& data() const noexcept { return *sd_; }
  const DHopf& hopf() const noexcept { return hopf_; }
  const std::vector<SimpleLabel>& labels() const noexcept { return sd_->labels(); }
  const ClassFunction& character(const SimpleLabel& l) const { return chars_[sd_->label_index(l)]; }

  /// <psi_c, psi_a psi_b>
  long coefficient_char(const SimpleLabel& a, const SimpleLabel& b, const SimpleLabel& c) const {
    return detail::as_count(inner_product(character(c), product(a, b)), "fusion coefficient");
  }

  /// (1/(|Stab s||Stab z|)) sum_{x,g} psi_a(s,g) psi_b(z, x^-1 g x) conj(psi_c(s (x.z), g)),
  /// asserted equal to the character route.
  long coefficient_reduced(const SimpleLabel& a, const SimpleLabel& b, const SimpleLabel& c) const {
    const auto& x = *sd_->xmod();
    const auto& G = *x.G;
    const int s = sd_->rep(a), z = sd_->rep(b);
    const auto& pa = character(a);
    const auto& pb = character(b);
    const auto& pc = character(c);
    Cyclotomic sum;
    for (int g = 0; g < static_cast<int>(G.order()); ++g) {
      const auto& va = pa(s, g);
      if (va.is_zero()) continue;
      for (int y = 0; y < static_cast<int>(G.order()); ++y) {
        const auto& vb = pb(z, G.mul(G.mul(G.inv(y), g), y));
        if (vb.is_zero()) continue;
        const auto& vc = pc(x.H->mul(s, x.act(y, z)), g);
        if (vc.is_zero()) continue;
        sum += va * vb * vc.conj();
      }
    }
    const auto denom = static_cast<unsigned long>(sd_->stabilizer(a.orbit).group->order() * sd_->stabilizer(b.orbit).group->order());
    const long n = detail::as_count(sum.scaled(Rational(1, denom)), "reduced fusion coefficient");
    const long ref = coefficient_char(a, b, c);
    if (n != ref) fail("MethodMismatch", "reduced formula disagrees with the character route", {a.orbit, a.irrep, b.orbit, b.irrep, c.orbit, c.irrep, n, ref});
    return n;
  }

  /// Decomposes the explicit tensor product of the simple modules; checks
  /// the multiplicities against the character route and the Cleb-Gor
  /// predicate against N > 0.
  std::vector<std::pair<SimpleLabel, long>> by_decomposition(const SimpleLabel& a, const SimpleLabel& b) const {
    auto t = tensor_product(simple_module(*sd_, a), simple_module(*sd_, b));
    auto dec = decompose(*sd_, t);
    std::map<SimpleLabel, long> got(dec.begin(), dec.end());
    for (const auto& c : labels()) {
      const long ref = coefficient_char(a, b, c);
      const long n = got.count(c) ? got[c] : 0;
      if (n != ref) fail("MethodMismatch", "explicit decomposition disagrees with the character route", {a.orbit, a.irrep, b.orbit, b.irrep, c.orbit, c.irrep, n, ref});
      if (cleb_gor(a, b, c) != (ref > 0))
        fail("MethodMismatch", "Cleb-Gor predicate disagrees with the multiplicity", {a.orbit, a.irrep, b.orbit, b.irrep, c.orbit, c.irrep, ref});
    }
    return dec;
  }

  /// Occurrence criterion for c in a (x) b, a = (z, i), b = (s, j), c = (t, k):
  /// some (h, l) in G x G has (h.z)(l.s) = t, and for such a pair the element
  /// (delta_{h.z} (x) h e_i h^-1) (x) (delta_{l.s} (x) l e_j l^-1) times
  /// Delta(1 (x) e_k) is nonzero in D (x) D. The pairs are enumerated by brute
  /// force; pairs with the same (h.z, l.s) give the same element.
  bool cleb_gor(const SimpleLabel& a, const SimpleLabel& b, const SimpleLabel& c) const {
    const auto& x = *sd_->xmod();
    const auto& G = *x.G;
    const int z = sd_->rep(a), s = sd_->rep(b), t = sd_->rep(c);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> pairs;
    for (int h = 0; h < static_cast<int>(G.order()); ++h)
      for (int l = 0; l < static_cast<int>(G.order()); ++l) {
        const int hz = x.act(h, z), ls = x.act(l, s);
        if (x.H->mul(hz, ls) != t) continue;
        if (seen.emplace(hz, ls).second) pairs.emplace_back(h, l);
      }
    if (pairs.empty()) return false;
    const auto delta_e = hopf_.comultiply(group_algebra_element(c));
    for (const auto& [h, l] : pairs) {
      auto left = conjugated(a, h), right = conjugated(b, l);
      auto fam = hopf_.tensor(left, right);
      if (!hopf_.multiply(fam, delta_e).is_zero()) return true;
    }
    return false;
  }

  /// Delta(f_c) (f_a (x) f_b) != 0 with the central idempotents of D(G,H);
  /// an independent occurrence test used to cross-check cleb_gor.
  bool occurs_by_idempotents(const SimpleLabel& a, const SimpleLabel& b, const SimpleLabel& c) const {
    std::call_once(idem_once_, [&] {
      for (auto& li : hopf_.central_idempotents(*sd_)) idems_.push_back(std::move(li.element));
    });
    const auto& fa = idems_[sd_->label_index(a)];
    const auto& fb = idems_[sd_->label_index(b)];
    const auto& fc = idems_[sd_->label_index(c)];
    return !hopf_.multiply(hopf_.comultiply(fc), hopf_.tensor(fa, fb)).is_zero();
  }

  /// Label whose character is psi(m^-1, g^-1).
  SimpleLabel dual_label(const SimpleLabel& a) const {
    const auto& x = *sd_->xmod();
    const auto& pa = character(a);
    auto d = zero_class_function(sd_->xmod());
    for (int m = 0; m < static_cast<int>(x.h_order()); ++m)
      for (int g = 0; g < static_cast<int>(x.g_order()); ++g) d.at(m, g) = pa(x.H->inv(m), x.G->inv(g));
    for (std::size_t i = 0; i < chars_.size(); ++i)
      if (chars_[i] == d) return labels()[i];
    fail("NoDual", "no simple character matches the dual", {a.orbit, a.irrep});
  }

private:
  const ClassFunction& product(const SimpleLabel& a, const SimpleLabel& b) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(sd_->label_index(a), sd_->label_index(b));
    auto it = products_.find(key);
    if (it == products_.end()) it = products_.emplace(key, convolution_product(chars_[key.first], chars_[key.second])).first;
    return it->second;
  }

  /// 1 (x) e_k^t as an element of D(G,H)
  DElement group_algebra_element(const SimpleLabel& c) const {
    const auto& stab = sd_->stabilizer(c.orbit);
    const auto& e = sd_->idempotents(c.orbit)[static_cast<std::size_t>(c.irrep)];
    DElement out = hopf_.element();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].is_zero()) out += hopf_.group_element(stab.embedding[k]).scaled(e[k]);
    return out;
  }

  /// delta_{h.z} (x) h e h^-1
  DElement conjugated(const SimpleLabel& a, int h) const {
    const auto& x = *sd_->xmod();
    const auto& stab = sd_->stabilizer(a.orbit);
    const auto& e = sd_->idempotents(a.orbit)[static_cast<std::size_t>(a.irrep)];
    const int hz = x.act(h, sd_->rep(a));
    DElement out = hopf_.element();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].is_zero()) out.add({hopf_.basis_index(hz, x.G->conj(h, stab.embedding[k]))}, e[k]);
    return out;
  }

  StabilizerDataPtr sd_;
  DHopf hopf_;
  std::vector<ClassFunction> chars_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, ClassFunction> products_;
  mutable std::once_flag idem_once_;
  mutable std::vector<DElement> idems_;
};

/// Grothendieck ring with N[(a L + b) L + c] = N^c_{a,b}.
struct FusionRing {
  std::vector<SimpleLabel> labels;
  std::vector<long> N;
  std::vector<long> dims;

  std::size_t size() const noexcept { return labels.size(); }
  long n(std::size_t a, std::size_t b, std::size_t c) const { return N[(a * size() + b) * size() + c]; }
};

struct FusionRingCheck {
  bool unit = true, commutative = true, associative = true, dimension_rule = true;
  bool all() const { return unit && commutative && associative && dimension_rule; }
};

inline FusionRingCheck check_fusion_ring(const FusionRing& r, std::size_t unit_index = 0) {
  FusionRingCheck out;
  const std::size_t L = r.size();
  for (std::size_t b = 0; b < L; ++b)
    for (std::size_t c = 0; c < L; ++c)
      if (r.n(unit_index, b, c) != (b == c ? 1 : 0)) out.unit = false;
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      long d = 0;
      for (std::size_t c = 0; c < L; ++c) {
        if (r.n(a, b, c) != r.n(b, a, c)) out.commutative = false;
        d += r.n(a, b, c) * r.dims[c];
      }
      if (d != r.dims[a] * r.dims[b]) out.dimension_rule = false;
    }
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        for (std::size_t d = 0; d < L; ++d) {
          long lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < L; ++e) {
            lhs += r.n(a, b, e) * r.n(e, c, d);
            rhs += r.n(b, c, e) * r.n(a, e, d);
          }
          if (lhs != rhs) out.associative = false;
        }
  return out;
}

/// Full table by the character route; the reduced formula is compared on
/// every triple when there are at most 512, otherwise on a seeded 10% sample.
inline FusionRing fusion_ring(const FusionEngine& f, std::uint64_t seed = 0) {
  FusionRing r;
  r.labels = f.labels();
  const std::size_t L = r.labels.size();
  for (const auto& l : r.labels) r.dims.push_back(f.data().dimension(l));
  r.N.resize(L * L * L);
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c) r.N[(a * L + b) * L + c] = f.coefficient_char(r.labels[a], r.labels[b], r.labels[c]);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(0.1);
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        if (L * L * L <= 512 || pick(rng)) (void)f.coefficient_reduced(r.labels[a], r.labels[b], r.labels[c]);
  const auto chk = check_fusion_ring(r, f.data().label_index(f.data().unit_label()));
  if (!chk.all()) fail("FusionRingCheck", "fusion ring invariants fail", {chk.unit, chk.commutative, chk.associative, chk.dimension_rule});
  return r;
}

}  // namespace xmodrep
