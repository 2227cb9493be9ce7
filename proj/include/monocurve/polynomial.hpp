#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"
#include "monocurve/monomial_order.hpp"

namespace monocurve {

using Rational = mpq_class;

/// Variables plus the active monomial order. Polynomials share their ring by
/// pointer; two rings are compatible when variables and order agree.
struct PolyRing {
  VariableSet vars;
  MonomialOrder order;

  std::size_t size() const { return vars.size(); }
  std::string descriptor() const { return order.descriptor(vars); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(VariableSet vars, MonomialOrder order);
/// degrevlex in list order.
RingPtr make_ring(VariableSet vars);

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept as a
/// sorted vector, strictly descending under the ring order, with no zero
/// coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c = 1);
  /// a - b
  static Polynomial binomial(RingPtr ring, const Monomial& a, const Monomial& b);
  /// Combines like terms and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  /// Largest total degree among the terms; -1 for zero.
  std::int64_t degree() const;
  bool is_homogeneous() const;
  /// Exactly two terms whose coefficients are negatives of each other.
  bool is_pure_binomial() const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  /// c * m * this
  Polynomial scaled(const Rational& c, const Monomial& m) const;
  /// this - c * m * g, merged in one pass.
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;

  /// Same polynomial viewed in a ring with the same variables but a different
  /// order (terms re-sorted).
  Polynomial in_ring(RingPtr other) const;

  /// Canonical text: descending terms, "^" powers, " + "/" - " separators.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses "x1^5 - x2^3*x0^2", "3/2*x1*x2 + 1", ... in any term order and with
/// arbitrary whitespace. Unknown variables are a ParseError.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

bool same_ring(const RingPtr& a, const RingPtr& b);

inline std::ostream& operator<<(std::ostream& out, const Polynomial& f) { return out << f.to_string(); }

}  // namespace monocurve
