#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"

namespace monocurve {

/// numerator(t) / (1 - t)^denominator_power, numerator stored low degree first.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  std::size_t denominator_power = 0;
  bool reduced = false;

  /// Cancels (1 - t) factors until numerator(1) != 0 or the denominator is gone.
  HilbertSeries reduce() const;
  /// Hilbert function values h(0..degree).
  std::vector<std::int64_t> expand(std::size_t degree) const;
  std::int64_t numerator_at_one() const;
  std::size_t numerator_degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }
  bool numerator_palindromic() const;
  /// Exponent l with H(1/t) = (-1)^d t^l H(t) for d = denominator_power, valid
  /// exactly when the numerator is palindromic: l = d - deg(numerator).
  std::int64_t functional_equation_exponent() const;
  /// deg(numerator) - denominator_power, the degree of H as a rational function.
  std::int64_t a_invariant() const;
  std::string to_string() const;
};

/// Minimal generators of the monomial ideal: duplicates and multiples removed.
std::vector<Monomial> minimalize_monomials(std::span<const Monomial> generators);

/// Hilbert series of k[x_1..x_n]/I for the monomial ideal I, with the
/// numerator over (1 - t)^n computed by pivot splitting
/// N(I) = N(I + x^e) + t^e N(I : x^e), x the most frequent variable among the
/// minimal generators and e its least positive exponent. Returned unreduced.
HilbertSeries hilbert_series(std::span<const Monomial> generators, std::size_t nvars);

}  // namespace monocurve
