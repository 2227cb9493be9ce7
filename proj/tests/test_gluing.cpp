#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "monocurve/gluing.hpp"
#include "oracles.hpp"

using namespace monocurve;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInconsistency;
}

const NumericalSemigroup kLeft = NumericalSemigroup::from({3, 5});
const NumericalSemigroup kRight = NumericalSemigroup::from({7, 12});

}  // namespace

TEST(Glue, ReferenceExample) {
  const auto spec = make_gluing(kLeft, kRight, 8, 19);
  EXPECT_EQ(spec.bvec, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(spec.avec, (std::vector<Integer>{1, 1}));
  const auto glued = glue(spec);
  EXPECT_EQ(glued.layout_values(), (std::vector<Integer>{57, 95, 56, 96}));
  EXPECT_EQ(glued.semigroup.to_string(), "56,57,95,96");
  EXPECT_EQ(glued.layout[2].side, GeneratorOrigin::Side::Right);
  EXPECT_EQ(glued.layout[2].index, 0u);
}

TEST(Glue, SecondExample) {
  const auto glued = glue(make_gluing(kLeft, kRight, 10, 19));
  EXPECT_EQ(glued.layout_values(), (std::vector<Integer>{57, 95, 70, 120}));
  EXPECT_EQ(glued.semigroup.to_string(), "57,70,95,120");
}

TEST(Glue, ValidationErrors) {
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 5, 19); }), ErrorKind::PIsGenerator);
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 8, 12); }), ErrorKind::QIsGenerator);
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 7, 19); }), ErrorKind::PNotInLeft);
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 8, 13); }), ErrorKind::QNotInRight);
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 9, 21); }), ErrorKind::NotCoprime);
  EXPECT_EQ(kind_of([] { make_gluing(kLeft, kRight, 0, 19); }), ErrorKind::InvalidArgument);
  GluingSpec p_generator{kLeft, kRight, 8, 19, {1, 1}, {1, 1}, false};
  p_generator.left = NumericalSemigroup::from({7, 8, 9});
  p_generator.bvec = {0, 1, 0};
  EXPECT_EQ(kind_of([&] { validate(p_generator); }), ErrorKind::PIsGenerator);
  EXPECT_EQ(kind_of([] { make_gluing(NumericalSemigroup::from({2, 9}), NumericalSemigroup::from({3, 4}), 9, 8); }),
            ErrorKind::PIsGenerator);
  GluingSpec bad{kLeft, kRight, 8, 19, {1, 2}, {1, 1}, false};
  EXPECT_EQ(kind_of([&] { validate(bad); }), ErrorKind::BadCoefficients);
}

TEST(StarGlue, Examples) {
  const auto spec = star_glue(kLeft, kRight, 2, {1, 1});
  EXPECT_EQ(spec.p, 10);
  EXPECT_EQ(spec.q, 19);
  EXPECT_TRUE(spec.star);
  EXPECT_EQ(spec.bvec, (std::vector<Integer>{0, 2}));
  EXPECT_EQ(glue(spec).semigroup.largest(), 120);
  EXPECT_EQ(kind_of([] { star_glue(kLeft, kRight, 1, {1, 1}); }), ErrorKind::NotStar);
  EXPECT_EQ(kind_of([] { star_glue(kLeft, kRight, 2, {0, 1}); }), ErrorKind::QIsGenerator);
  EXPECT_EQ(kind_of([] { star_glue(kLeft, kRight, 2, {2, 0}); }), ErrorKind::NotCoprime);
  EXPECT_EQ(kind_of([] { star_glue(kLeft, kRight, 2, {1}); }), ErrorKind::BadCoefficients);
  GluingSpec not_star{kLeft, kRight, 8, 19, {1, 1}, {1, 1}, true};
  EXPECT_EQ(kind_of([&] { validate(not_star); }), ErrorKind::NotStar);
}

TEST(StarGlue, LargestGeneratorIsPNk) {
  std::mt19937_64 rng(51);
  int built = 0;
  for (int trial = 0; trial < 3000 && built < 200; ++trial) {
    try {
      const auto left = NumericalSemigroup::from(oracle::random_list(rng, 2 + trial % 2, 2, 30));
      const auto right = NumericalSemigroup::from(oracle::random_list(rng, 2 + (trial / 2) % 2, 2, 30));
      const Integer bl = std::uniform_int_distribution<Integer>(2, 4)(rng);
      std::vector<Integer> a;
      for (std::size_t j = 0; j < right.rank(); ++j) a.push_back(std::uniform_int_distribution<Integer>(0, 2)(rng));
      const auto spec = star_glue(left, right, bl, a);
      const auto values = glue(spec).layout_values();
      EXPECT_EQ(*std::max_element(values.begin(), values.end()), spec.p * right.largest());
      ++built;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(built, 50);
}

TEST(Glue, SymmetricInputsGiveSymmetricGluing) {
  std::mt19937_64 rng(52);
  int checked = 0;
  for (int trial = 0; trial < 5000 && checked < 150; ++trial) {
    try {
      const auto left = NumericalSemigroup::from(oracle::random_list(rng, 2 + trial % 2, 2, 20));
      const auto right = NumericalSemigroup::from(oracle::random_list(rng, 2, 2, 20));
      if (!left.is_symmetric() || !right.is_symmetric()) continue;
      const Integer p = std::uniform_int_distribution<Integer>(left.multiplicity() + 1, 3 * left.largest())(rng);
      const Integer q = std::uniform_int_distribution<Integer>(right.multiplicity() + 1, 3 * right.largest())(rng);
      const auto glued = glue(make_gluing(left, right, p, q));
      EXPECT_TRUE(glued.semigroup.is_symmetric()) << glued.semigroup.to_string();
      ++checked;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Factorize, ReconstructsTarget) {
  const auto s = NumericalSemigroup::from({7, 12, 19});
  for (Integer x = 0; x < 200; ++x) {
    const auto f = factorize(s, x);
    EXPECT_EQ(f.has_value(), oracle::contains(s.generators(), x));
    if (f) {
      EXPECT_EQ(std::inner_product(f->begin(), f->end(), s.generators().begin(), Integer{0}), x);
    }
  }
}
