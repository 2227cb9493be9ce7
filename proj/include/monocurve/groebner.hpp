#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocurve/polynomial.hpp"

namespace monocurve {

/// S(f, g) = (L / LT(f)) f - (L / LT(g)) g with L the lcm of the leading
/// monomials. Throws ZeroPolynomial on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r where no term of r is divisible
/// by any leading monomial. The reducer is always the first divisor in list
/// order, so the remainder is reproducible.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

struct PairLogEntry {
  enum class Outcome { Zero, Added };

  std::size_t first = 0;
  std::size_t second = 0;
  std::string lcm;
  Outcome outcome = Outcome::Zero;
  std::string remainder;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t skipped_product = 0;
  std::size_t skipped_chain = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  /// Nonzero remainders appended to the input; 0 means the input already
  /// satisfied Buchberger's criterion.
  std::size_t added = 0;
  bool binomial_path = false;
  std::vector<PairLogEntry> log;
};

struct BuchbergerOptions {
  /// Grading used to pick the next pair (smallest weighted lcm first). Empty
  /// means standard degree.
  std::vector<std::int64_t> selection_weights;
  bool trace = false;
  /// Skip the pure-binomial fast path even when every input is a binomial.
  bool force_generic = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Called with every nonzero remainder (generic path only).
  std::function<void(const Polynomial&)> on_remainder;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  RingPtr ring;
  bool reduced = false;
  BuchbergerStats stats;

  std::vector<Monomial> leading_monomials() const;
  std::string order_descriptor() const { return ring->descriptor(); }
  std::vector<std::string> to_strings() const;
};

/// Buchberger's algorithm with the product and chain criteria (Gebauer-Möller
/// update) and the normal selection strategy, followed by auto-reduction to the
/// unique reduced basis. Inputs consisting only of pure binomials x^u - x^v run
/// on an implicit +-1 coefficient representation.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options = {});

/// Minimalizes, inter-reduces, makes monic and sorts ascending by leading
/// monomial. The input must already be a Gröbner basis.
GroebnerBasis reduce_basis(std::span<const Polynomial> basis);

/// Every pairwise S-polynomial reduces to zero (no criteria applied).
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

/// Monic, leading monomials pairwise non-dividing, and no term of any element
/// divisible by another element's leading monomial.
bool is_reduced_basis(std::span<const Polynomial> basis);

/// Ring with `hvar` appended as the least variable of the same degrevlex order.
RingPtr homogenizing_ring(const RingPtr& ring, const std::string& hvar);

/// f^h = sum c_m m hvar^(deg f - deg m), expressed in `target` (which must be
/// homogenizing_ring of f's ring).
Polynomial homogenize(const Polynomial& f, const RingPtr& target);
/// Sets the last variable of f's ring to 1 and expresses the result in `target`.
Polynomial dehomogenize(const Polynomial& f, const RingPtr& target);

/// Termwise homogenization of a reduced degrevlex basis. Throws
/// PreconditionViolated when the basis is not reduced or not degrevlex.
GroebnerBasis homogenize_basis(const GroebnerBasis& basis, const std::string& hvar);

}  // namespace monocurve
