#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monocurve/error.hpp"

namespace monocurve {

/// Upper bound on ring size. Elimination rings carry at most two parameters,
/// eight curve variables and the homogenizing variable.
inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::int32_t;

/// Dense exponent vector with inline storage and a cached total degree.
/// Exponent arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exponents);
  explicit Monomial(std::span<const Exponent> exponents);

  std::size_t size() const { return size_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  std::int64_t degree() const { return degree_; }
  std::span<const Exponent> exponents() const { return {exps_.data(), size_}; }

  /// Bit i set iff variable i occurs; a necessary condition for divisibility.
  std::uint32_t support() const { return support_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// this / other; other must divide this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(Exponent k) const;
  Monomial lcm(const Monomial& other) const;

  /// Monomial with one extra variable appended, carrying exponent e.
  Monomial extended(Exponent e) const;
  /// Drops the last variable (which must be the one being removed).
  Monomial truncated(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_ || a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.size_; ++i) {
      if (a.exps_[i] != b.exps_[i]) return false;
    }
    return true;
  }

  std::size_t hash() const;

 private:
  void recompute();

  std::array<Exponent, kMaxVariables> exps_{};
  std::size_t size_ = 0;
  std::int64_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Ordered list of distinct variable identifiers. The list order is the
/// priority order used by monomial orders (first = largest).
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  /// x1..xn with the given prefix.
  static VariableSet indexed(const std::string& prefix, std::size_t count, std::size_t first = 1);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::ptrdiff_t index_of(const std::string& name) const;

  VariableSet appended(const std::string& name) const;
  VariableSet concatenated(const VariableSet& tail) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(const std::string& name);

std::string format_monomial(const Monomial& m, const VariableSet& vars);

}  // namespace monocurve

template <>
struct std::hash<monocurve::Monomial> {
  std::size_t operator()(const monocurve::Monomial& m) const { return m.hash(); }
};
