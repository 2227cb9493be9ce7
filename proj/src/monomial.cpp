#include "monocurve/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

namespace monocurve {

namespace {

Exponent checked_exponent(std::int64_t value) {
  if (value < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  if (value > std::numeric_limits<Exponent>::max()) fail(ErrorKind::Overflow, "exponent overflow");
  return static_cast<Exponent>(value);
}

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    fail(ErrorKind::TooLarge, "at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : size_(nvars) { check_size(nvars); }

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const Exponent> exponents) : size_(exponents.size()) {
  check_size(size_);
  for (std::size_t i = 0; i < size_; ++i) exps_[i] = checked_exponent(exponents[i]);
  recompute();
}

void Monomial::set(std::size_t i, Exponent e) {
  exps_[i] = checked_exponent(e);
  recompute();
}

void Monomial::recompute() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size_ != other.size_) fail(ErrorKind::AmbientMismatch, "monomial sizes differ");
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.exps_[i] = checked_exponent(std::int64_t{exps_[i]} + other.exps_[i]);
  }
  out.recompute();
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (size_ != other.size_) fail(ErrorKind::AmbientMismatch, "monomial sizes differ");
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.exps_[i] = checked_exponent(std::int64_t{exps_[i]} - other.exps_[i]);
  }
  out.recompute();
  return out;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.exps_[i] = checked_exponent(std::int64_t{exps_[i]} * k);
  }
  out.recompute();
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (size_ != other.size_) fail(ErrorKind::AmbientMismatch, "monomial sizes differ");
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  out.recompute();
  return out;
}

Monomial Monomial::extended(Exponent e) const {
  check_size(size_ + 1);
  Monomial out = *this;
  out.size_ = size_ + 1;
  out.exps_[size_] = checked_exponent(e);
  out.recompute();
  return out;
}

Monomial Monomial::truncated(std::size_t nvars) const {
  Monomial out(nvars);
  for (std::size_t i = 0; i < nvars && i < size_; ++i) out.exps_[i] = exps_[i];
  out.recompute();
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::size_t>(exps_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  check_size(names_.size());
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) fail(ErrorKind::InvalidArgument, "invalid variable name '" + name + "'");
    if (!seen.insert(name).second) fail(ErrorKind::InvalidArgument, "duplicate variable '" + name + "'");
  }
}

VariableSet VariableSet::indexed(const std::string& prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(first + i));
  return VariableSet(std::move(names));
}

std::ptrdiff_t VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : it - names_.begin();
}

VariableSet VariableSet::appended(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  return VariableSet(std::move(names));
}

VariableSet VariableSet::concatenated(const VariableSet& tail) const {
  auto names = names_;
  names.insert(names.end(), tail.names_.begin(), tail.names_.end());
  return VariableSet(std::move(names));
}

std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace monocurve
