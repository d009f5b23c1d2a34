#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmodrep {

/// Domain error carrying a stable machine-readable code and the indices
/// that witness the violation (e.g. the pair (g, h) breaking an axiom).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, std::vector<long> witness = {})
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<long>& witness() const noexcept { return witness_; }

private:
  std::string code_;
  std::vector<long> witness_;
};

namespace detail {

inline std::string join_indices(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

[[noreturn]] inline void fail(const std::string& code, const std::string& what,
                              std::vector<long> witness = {}) {
  std::string msg = code + ": " + what;
  if (!witness.empty()) msg += " (witness " + detail::join_indices(witness) + ")";
  throw Error(code, msg, std::move(witness));
}

}  // namespace xmodrep
