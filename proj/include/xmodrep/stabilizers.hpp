#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "group_chars.hpp"
#include "xmod.hpp"

namespace xmodrep {

/// Simple-object label: orbit index (into orbit_data.orbit_reps) and the
/// row of that stabilizer's character table.
struct SimpleLabel {
  int orbit = 0;
  int irrep = 0;
  auto operator<=>(const SimpleLabel&) const = default;
};

/// Character tables, group-algebra idempotents and explicit irreps of every
/// stabilizer Stab_G(s), s an orbit representative. Irreps are built on
/// first use with the configured seed.
class StabilizerData {
public:
  explicit StabilizerData(XModPtr x, std::uint64_t seed = 0, std::size_t cap = 512) : x_(std::move(x)), seed_(seed) {
    for (const auto& s : x_->stabilizers) {
      tables_.push_back(character_table(s.group, cap));
      idempotents_.push_back(central_idempotents_group(tables_.back()));
    }
    for (int k = 0; k < static_cast<int>(tables_.size()); ++k)
      for (int i = 0; i < static_cast<int>(tables_[static_cast<std::size_t>(k)].size()); ++i) labels_.push_back({k, i});
  }

  const XModPtr& xmod() const noexcept { return x_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const Subgroup& stabilizer(int k) const { return x_->stabilizers.at(static_cast<std::size_t>(k)); }
  const GroupCharTable& table(int k) const { return tables_.at(static_cast<std::size_t>(k)); }
  const std::vector<GroupAlgebraElement>& idempotents(int k) const { return idempotents_.at(static_cast<std::size_t>(k)); }

  /// All labels, ordered by orbit, then by character-table row.
  const std::vector<SimpleLabel>& labels() const noexcept { return labels_; }
  std::size_t label_index(const SimpleLabel& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    fail("InvalidLabel", "no such simple label", {l.orbit, l.irrep});
  }

  void check(const SimpleLabel& l) const {
    if (l.orbit < 0 || l.orbit >= static_cast<int>(tables_.size()) || l.irrep < 0 ||
        l.irrep >= static_cast<int>(tables_[static_cast<std::size_t>(l.orbit)].size()))
      fail("InvalidLabel", "no such simple label", {l.orbit, l.irrep});
  }

  int rep(const SimpleLabel& l) const { return x_->orbit_data.orbit_reps.at(static_cast<std::size_t>(l.orbit)); }
  int degree(const SimpleLabel& l) const {
    check(l);
    return table(l.orbit).degrees[static_cast<std::size_t>(l.irrep)];
  }
  int orbit_size(int k) const { return static_cast<int>(x_->orbit_data.orbit_members.at(static_cast<std::size_t>(k)).size()); }
  int dimension(const SimpleLabel& l) const {
    check(l);
    return orbit_size(l.orbit) * degree(l);
  }

  /// psi_{i}^{s} with 1-based i and the display name of s.
  std::string name(const SimpleLabel& l) const {
    return "psi_" + std::to_string(l.irrep + 1) + "^" + x_->H->name(rep(l));
  }

  const MatrixIrrep& irrep(int k, int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(k, i);
    auto it = irreps_.find(key);
    if (it == irreps_.end())
      it = irreps_.emplace(key, explicit_irrep(table(k), static_cast<std::size_t>(i), seed_)).first;
    return it->second;
  }

  /// The unit object (trivial character on the orbit of the identity).
  SimpleLabel unit_label() const { return {0, 0}; }

private:
  XModPtr x_;
  std::uint64_t seed_;
  std::vector<GroupCharTable> tables_;
  std::vector<std::vector<GroupAlgebraElement>> idempotents_;
  std::vector<SimpleLabel> labels_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, MatrixIrrep> irreps_;
};

using StabilizerDataPtr = std::shared_ptr<const StabilizerData>;

inline StabilizerDataPtr make_stabilizer_data(XModPtr x, std::uint64_t seed = 0) {
  return std::make_shared<const StabilizerData>(std::move(x), seed);
}

}  // namespace xmodrep
