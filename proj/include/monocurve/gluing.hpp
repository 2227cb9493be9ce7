#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// Data of a gluing <q m_1, ..., q m_l, p n_1, ..., p n_k>, with
/// p = sum bvec_i m_i and q = sum avec_j n_j.
struct GluingSpec {
  NumericalSemigroup left;
  NumericalSemigroup right;
  Integer p = 0;
  Integer q = 0;
  std::vector<Integer> bvec;
  std::vector<Integer> avec;
  bool star = false;
};

/// Throws the first violated gluing invariant (NotCoprime, PIsGenerator,
/// QIsGenerator, Overlap, PNotInLeft, QNotInRight, BadCoefficients, NotStar).
void validate(const GluingSpec& spec);

struct GeneratorOrigin {
  enum class Side { Left, Right };
  Side side;
  std::size_t index;  // 0-based position in the source semigroup
  Integer value;      // q * m_i or p * n_j
};

struct GluedSemigroup {
  NumericalSemigroup semigroup;
  /// Generators in gluing layout: q m_1 .. q m_l, then p n_1 .. p n_k.
  std::vector<GeneratorOrigin> layout;

  std::vector<Integer> layout_values() const;
};

GluedSemigroup glue(const GluingSpec& spec);

/// Star gluing with p = b_l m_l and q = sum a_j n_j. Checks sum a_j <= b_l
/// (NotStar) before the general gluing invariants, and that p n_k comes out as
/// the largest generator.
GluingSpec star_glue(const NumericalSemigroup& left, const NumericalSemigroup& right, Integer bl,
                     const std::vector<Integer>& avec);

/// Gluing spec from p and q alone; coefficients are found by factorization
/// (largest generators first).
GluingSpec make_gluing(const NumericalSemigroup& left, const NumericalSemigroup& right, Integer p,
                       Integer q);

/// A factorization of x over the semigroup's generators, searching the largest
/// generator first; nullopt when x is not an element.
std::optional<std::vector<Integer>> factorize(const NumericalSemigroup& semigroup, Integer x);

}  // namespace monocurve
