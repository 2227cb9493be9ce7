#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monocurve/integer.hpp"

namespace monocurve {

/// Least element of each residue class mod `modulus` reachable as a
/// non-negative combination of `generators`; std::nullopt for classes the
/// generators never reach. Shortest paths over the residue graph, where
/// residue j has an edge to (j + g) mod modulus of weight g.
std::vector<std::optional<Integer>> residue_minima(std::span<const Integer> generators,
                                                   Integer modulus);

/// Ap(S, n) stored by residue: elements[j] is the least element of S that is
/// congruent to j mod n.
struct AperySet {
  Integer modulus = 0;
  std::vector<Integer> elements;

  std::vector<Integer> sorted() const;
  Integer max() const;
};

/// Ap of the semigroup generated by an arbitrary list (need not be minimal, may
/// contain 1). Requires gcd(generators) = 1 so every residue is reached.
AperySet apery_of_generators(std::span<const Integer> generators, Integer modulus);

/// A numerical semigroup with its minimal generators sorted ascending.
/// Immutable; the Apéry set with respect to the multiplicity is computed once at
/// construction and backs membership, Frobenius number and genus.
class NumericalSemigroup {
 public:
  struct Construction;

  /// Sorts, deduplicates and minimalizes. Throws NotNumerical when gcd != 1 and
  /// Degenerate when fewer than two minimal generators survive.
  static Construction make(std::span<const Integer> gens);
  static NumericalSemigroup from(std::span<const Integer> gens);
  static NumericalSemigroup from(std::initializer_list<Integer> gens);

  const std::vector<Integer>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  Integer multiplicity() const { return generators_.front(); }
  Integer largest() const { return generators_.back(); }

  bool contains(Integer x) const;
  AperySet apery(Integer n) const;
  const AperySet& apery_multiplicity() const { return apery_min_; }

  Integer frobenius() const;
  Integer genus() const;
  bool is_symmetric() const;

  /// "3,5"
  std::string to_string() const;
  static NumericalSemigroup parse(const std::string& text);

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  explicit NumericalSemigroup(std::vector<Integer> minimal);

  std::vector<Integer> generators_;
  AperySet apery_min_;
};

struct NumericalSemigroup::Construction {
  NumericalSemigroup semigroup;
  std::vector<Integer> redundant;
};

/// Parses a comma separated integer list ("3, 5,7").
std::vector<Integer> parse_integer_list(const std::string& text);
std::string join_integers(std::span<const Integer> values);

using Point2 = std::pair<Integer, Integer>;

/// The subsemigroup of N^2 generated by (n_i, n_r - n_i) for 0 <= i <= r with
/// n_0 = 0. Every generator has coordinate sum n_r.
class ProjectiveSemigroup {
 public:
  explicit ProjectiveSemigroup(NumericalSemigroup base);

  const NumericalSemigroup& base() const { return base_; }
  const std::vector<Point2>& generators() const { return generators_; }
  Integer degree() const { return base_.largest(); }

  /// Generators of the reversed semigroup <n_r - n_1, ..., n_r - n_{r-1}, n_r>,
  /// listed raw (not minimalized; may contain 1).
  std::vector<Integer> reversed_generators() const;

  /// Membership in the projectivized semigroup.
  bool contains(Point2 v) const;

  /// Fewest generators of the base semigroup summing to x, or nullopt when x is
  /// not in the base semigroup.
  std::optional<Integer> min_factorization_length(Integer x) const;

 private:
  NumericalSemigroup base_;
  std::vector<Point2> generators_;
};

/// The Apéry set of the projectivized semigroup with respect to n_r:
/// points[0] = (0, n_r), points[n_r] = (n_r, 0), interior points sorted by
/// first coordinate.
struct ProjectiveAperySet {
  Integer modulus = 0;
  std::vector<Point2> points;
  /// Ap(reversed semigroup, n_r), sorted ascending.
  std::vector<Integer> reversed_apery;

  std::span<const Point2> interior() const {
    return std::span<const Point2>(points).subspan(1, points.size() - 2);
  }
};

ProjectiveAperySet projective_apery(const ProjectiveSemigroup& semigroup);

/// True when the second coordinates of the interior points, together with 0,
/// reproduce Ap(reversed semigroup, n_r). On failure `missing` receives the
/// first interior second coordinate that falls outside it.
bool is_good_apery(const ProjectiveAperySet& apery, Integer* missing = nullptr);

}  // namespace monocurve
