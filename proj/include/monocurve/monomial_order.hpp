#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"

namespace monocurve {

/// Degree reverse lexicographic order over an explicit variable priority, or a
/// block-elimination order: degrevlex on the leading `front_block` variables
/// (in priority order) first, then degrevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, BlockElimination };

  MonomialOrder() = default;

  /// Priority = identity: variable 0 is the largest.
  static MonomialOrder degrevlex(std::size_t nvars);
  /// priority[k] = index of the k-th largest variable.
  static MonomialOrder degrevlex(std::vector<std::size_t> priority);
  static MonomialOrder block_elimination(std::size_t nvars, std::size_t front_block);

  Kind kind() const { return kind_; }
  std::size_t size() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t front_block() const { return front_block_; }

  /// Throws AmbientMismatch when the monomials do not live over this order's
  /// variable count.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// e.g. "degrevlex(x1>x2>x0)" or "elim(t|x1>x2)".
  std::string descriptor(const VariableSet& vars) const;

  /// True when the given variable is the least one in priority order.
  bool is_least(std::size_t var) const { return !priority_.empty() && priority_.back() == var; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t front_block);

  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t begin,
                                     std::size_t end) const;

  Kind kind_ = Kind::Degrevlex;
  std::vector<std::size_t> priority_;
  std::size_t front_block_ = 0;
  bool identity_ = true;
};

/// Free-function form of the comparison.
inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace monocurve
