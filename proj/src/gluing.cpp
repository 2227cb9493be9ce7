#include "monocurve/gluing.hpp"

#include <algorithm>
#include <numeric>

namespace monocurve {

namespace {

Integer dot(const std::vector<Integer>& coefficients, const std::vector<Integer>& gens) {
  Integer sum = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) sum = checked_add(sum, checked_mul(coefficients[i], gens[i]));
  return sum;
}

bool is_generator(const NumericalSemigroup& s, Integer x) {
  const auto& g = s.generators();
  return std::find(g.begin(), g.end(), x) != g.end();
}

void check_coefficients(const std::vector<Integer>& coefficients, const NumericalSemigroup& s, Integer target,
                        const char* name) {
  if (coefficients.size() != s.rank()) {
    fail(ErrorKind::BadCoefficients, std::string(name) + " has " + std::to_string(coefficients.size()) +
                                         " entries for " + std::to_string(s.rank()) + " generators");
  }
  if (std::any_of(coefficients.begin(), coefficients.end(), [](Integer c) { return c < 0; })) {
    fail(ErrorKind::BadCoefficients, std::string(name) + " has a negative entry");
  }
  if (dot(coefficients, s.generators()) != target) {
    fail(ErrorKind::BadCoefficients, std::string(name) + " . <" + s.to_string() + "> != " + std::to_string(target));
  }
}

}  // namespace

void validate(const GluingSpec& spec) {
  if (spec.p <= 0 || spec.q <= 0) fail(ErrorKind::InvalidArgument, "p and q must be positive");
  if (!spec.left.contains(spec.p)) {
    fail(ErrorKind::PNotInLeft, std::to_string(spec.p) + " not in <" + spec.left.to_string() + ">");
  }
  if (!spec.right.contains(spec.q)) {
    fail(ErrorKind::QNotInRight, std::to_string(spec.q) + " not in <" + spec.right.to_string() + ">");
  }
  if (is_generator(spec.left, spec.p)) {
    fail(ErrorKind::PIsGenerator, "p = " + std::to_string(spec.p) + " is a generator of <" + spec.left.to_string() + ">");
  }
  if (is_generator(spec.right, spec.q)) {
    fail(ErrorKind::QIsGenerator, "q = " + std::to_string(spec.q) + " is a generator of <" + spec.right.to_string() + ">");
  }
  check_coefficients(spec.bvec, spec.left, spec.p, "bvec");
  check_coefficients(spec.avec, spec.right, spec.q, "avec");
  if (std::gcd(spec.p, spec.q) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(spec.p) + ", " + std::to_string(spec.q) + ") != 1");
  }
  for (Integer m : spec.left.generators()) {
    for (Integer n : spec.right.generators()) {
      if (checked_mul(spec.q, m) == checked_mul(spec.p, n)) {
        fail(ErrorKind::Overlap, "q*" + std::to_string(m) + " = p*" + std::to_string(n));
      }
    }
  }
  if (spec.star) {
    const auto& b = spec.bvec;
    if (!std::all_of(b.begin(), b.end() - 1, [](Integer c) { return c == 0; })) {
      fail(ErrorKind::NotStar, "p must be a multiple of the largest generator of the left semigroup");
    }
    const Integer asum = std::accumulate(spec.avec.begin(), spec.avec.end(), Integer{0});
    if (asum > b.back()) {
      fail(ErrorKind::NotStar, "sum a_j = " + std::to_string(asum) + " > b_l = " + std::to_string(b.back()));
    }
  }
}

std::vector<Integer> GluedSemigroup::layout_values() const {
  std::vector<Integer> out;
  for (const auto& origin : layout) out.push_back(origin.value);
  return out;
}

GluedSemigroup glue(const GluingSpec& spec) {
  validate(spec);
  std::vector<GeneratorOrigin> layout;
  const auto& m = spec.left.generators();
  const auto& n = spec.right.generators();
  for (std::size_t i = 0; i < m.size(); ++i) {
    layout.push_back({GeneratorOrigin::Side::Left, i, checked_mul(spec.q, m[i])});
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    layout.push_back({GeneratorOrigin::Side::Right, j, checked_mul(spec.p, n[j])});
  }
  std::vector<Integer> values;
  for (const auto& origin : layout) values.push_back(origin.value);
  return GluedSemigroup{NumericalSemigroup::from(values), std::move(layout)};
}

GluingSpec star_glue(const NumericalSemigroup& left, const NumericalSemigroup& right, Integer bl,
                     const std::vector<Integer>& avec) {
  if (avec.size() != right.rank()) {
    fail(ErrorKind::BadCoefficients, "need one a_j per generator of <" + right.to_string() + ">");
  }
  if (std::any_of(avec.begin(), avec.end(), [](Integer a) { return a < 0; }) || bl < 0) {
    fail(ErrorKind::BadCoefficients, "coefficients must be non-negative");
  }
  const Integer asum = std::accumulate(avec.begin(), avec.end(), Integer{0});
  if (asum > bl) {
    fail(ErrorKind::NotStar, "sum a_j = " + std::to_string(asum) + " > b_l = " + std::to_string(bl));
  }

  GluingSpec spec{left, right, checked_mul(bl, left.largest()), dot(avec, right.generators()),
                  std::vector<Integer>(left.rank(), 0), avec, true};
  spec.bvec.back() = bl;
  validate(spec);

  const Integer top = checked_mul(spec.p, right.largest());
  if (checked_mul(spec.q, left.largest()) > top) {
    fail(ErrorKind::InternalInconsistency, "p*n_k is not the largest glued generator");
  }
  return spec;
}

std::optional<std::vector<Integer>> factorize(const NumericalSemigroup& semigroup, Integer x) {
  if (!semigroup.contains(x)) return std::nullopt;
  const auto& gens = semigroup.generators();
  std::vector<char> reachable(static_cast<std::size_t>(x) + 1, 0);
  reachable[0] = 1;
  for (Integer v = 1; v <= x; ++v) {
    for (Integer g : gens) {
      if (g <= v && reachable[static_cast<std::size_t>(v - g)]) {
        reachable[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  std::vector<Integer> coefficients(gens.size(), 0);
  Integer v = x;
  while (v > 0) {
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (gens[i] <= v && reachable[static_cast<std::size_t>(v - gens[i])]) {
        ++coefficients[i];
        v -= gens[i];
        break;
      }
    }
  }
  return coefficients;
}

GluingSpec make_gluing(const NumericalSemigroup& left, const NumericalSemigroup& right, Integer p, Integer q) {
  if (p <= 0 || q <= 0) fail(ErrorKind::InvalidArgument, "p and q must be positive");
  auto b = factorize(left, p);
  if (!b) fail(ErrorKind::PNotInLeft, std::to_string(p) + " not in <" + left.to_string() + ">");
  auto a = factorize(right, q);
  if (!a) fail(ErrorKind::QNotInRight, std::to_string(q) + " not in <" + right.to_string() + ">");
  GluingSpec spec{left, right, p, q, std::move(*b), std::move(*a), false};
  validate(spec);
  return spec;
}

}  // namespace monocurve
