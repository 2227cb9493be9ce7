#include "monocurve/monomial_order.hpp"

#include <algorithm>
#include <numeric>

namespace monocurve {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t front_block)
    : kind_(kind), priority_(std::move(priority)), front_block_(front_block) {
  std::vector<std::size_t> check = priority_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) fail(ErrorKind::InvalidArgument, "variable priority is not a permutation");
  }
  if (front_block_ > priority_.size()) fail(ErrorKind::InvalidArgument, "front block larger than ring");
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (priority_[i] != i) identity_ = false;
  }
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> priority(nvars);
  std::iota(priority.begin(), priority.end(), 0);
  return MonomialOrder(Kind::Degrevlex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::Degrevlex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::block_elimination(std::size_t nvars, std::size_t front_block) {
  std::vector<std::size_t> priority(nvars);
  std::iota(priority.begin(), priority.end(), 0);
  return MonomialOrder(Kind::BlockElimination, std::move(priority), front_block);
}

std::strong_ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b,
                                                  std::size_t begin, std::size_t end) const {
  std::int64_t da = 0;
  std::int64_t db = 0;
  if (identity_ && begin == 0 && end == a.size()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t k = begin; k < end; ++k) {
      da += a[priority_[k]];
      db += b[priority_[k]];
    }
  }
  if (da != db) return da <=> db;
  // Equal degree: the smaller exponent on the least differing variable wins.
  for (std::size_t k = end; k > begin; --k) {
    const std::size_t var = priority_[k - 1];
    if (a[var] != b[var]) return b[var] <=> a[var];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != priority_.size() || b.size() != priority_.size()) {
    fail(ErrorKind::AmbientMismatch, "monomial has " + std::to_string(a.size()) + "/" +
                                         std::to_string(b.size()) + " variables, order expects " +
                                         std::to_string(priority_.size()));
  }
  if (kind_ == Kind::BlockElimination) {
    auto front = compare_range(a, b, 0, front_block_);
    if (front != 0) return front;
    return compare_range(a, b, front_block_, priority_.size());
  }
  return compare_range(a, b, 0, priority_.size());
}

std::string MonomialOrder::descriptor(const VariableSet& vars) const {
  auto chain = [&](std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t k = begin; k < end; ++k) {
      if (k > begin) out += '>';
      out += vars[priority_[k]];
    }
    return out;
  };
  if (kind_ == Kind::BlockElimination) {
    return "elim(" + chain(0, front_block_) + "|" + chain(front_block_, priority_.size()) + ")";
  }
  return "degrevlex(" + chain(0, priority_.size()) + ")";
}

}  // namespace monocurve
