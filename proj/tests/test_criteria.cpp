#include <gtest/gtest.h>

#include <random>

#include "monocurve/criteria.hpp"
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

std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count, std::size_t max_rank,
                                                  Integer max_gen) {
  std::mt19937_64 rng(seed);
  std::vector<NumericalSemigroup> out;
  while (out.size() < count) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(2, max_rank)(rng);
    try {
      out.push_back(NumericalSemigroup::from(oracle::random_list(rng, r, 2, max_gen)));
    } catch (const Error&) {
    }
  }
  return out;
}

ProjectiveCurveIdeal closure_of(std::initializer_list<Integer> gens) {
  return projective_closure_ideal(defining_ideal(NumericalSemigroup::from(gens)));
}

ProjectiveSemigroup projective(std::initializer_list<Integer> gens) {
  return ProjectiveSemigroup(NumericalSemigroup::from(gens));
}

Rational evaluate(const HilbertSeries& h, const Rational& t) {
  Rational num = 0;
  Rational power = 1;
  for (std::int64_t c : h.numerator) {
    num += power * c;
    power *= t;
  }
  Rational den = 1;
  for (std::size_t i = 0; i < h.denominator_power; ++i) den *= 1 - t;
  return num / den;
}

Rational power_of(const Rational& t, std::int64_t e) {
  Rational out = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out *= t;
  return e < 0 ? Rational(1 / out) : out;
}

const Monomial kX1Fifth{5, 0, 0};

}  // namespace

TEST(Hilbert, Examples) {
  const std::vector<Monomial> principal{kX1Fifth};
  const auto h = hilbert_series(principal, 3);
  EXPECT_EQ(h.numerator, (std::vector<std::int64_t>{1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(h.denominator_power, 3u);
  const auto r = h.reduce();
  EXPECT_EQ(r.numerator, (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(r.denominator_power, 2u);
  EXPECT_TRUE(r.reduced);
  EXPECT_EQ(r.to_string(), "(1 + t + t^2 + t^3 + t^4) / (1 - t)^2");

  const auto zero = hilbert_series(std::vector<Monomial>{}, 4).reduce();
  EXPECT_EQ(zero.numerator, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(zero.denominator_power, 4u);

  const auto line = hilbert_series(std::vector<Monomial>{Monomial{1}}, 1).reduce();
  EXPECT_EQ(line.numerator, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(line.denominator_power, 0u);
  EXPECT_EQ(line.expand(3), (std::vector<std::int64_t>{1, 0, 0, 0}));
}

TEST(Hilbert, MinimalizesGenerators) {
  const std::vector<Monomial> gens{Monomial{2, 1}, Monomial{1, 0}, Monomial{1, 0}, Monomial{0, 3}};
  EXPECT_EQ(minimalize_monomials(gens).size(), 2u);
  EXPECT_EQ(hilbert_series(gens, 2).reduce().numerator, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(Hilbert, MatchesStandardMonomialCounts) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < count; ++k) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, std::uniform_int_distribution<int>(0, 4)(rng));
      if (!m.is_one()) gens.push_back(m);
    }
    const auto raw = hilbert_series(gens, n);
    const auto reduced = raw.reduce();
    const auto a = raw.expand(15);
    const auto b = reduced.expand(15);
    for (int d = 0; d <= 15; ++d) {
      const auto expected = oracle::standard_monomials(gens, n, d);
      ASSERT_EQ(a[static_cast<std::size_t>(d)], expected) << "degree " << d;
      ASSERT_EQ(b[static_cast<std::size_t>(d)], expected) << "degree " << d;
    }
  }
}

TEST(Hilbert, PalindromeIffFunctionalEquation) {
  std::mt19937_64 rng(62);
  const std::vector<Rational> points{Rational(1, 3), Rational(2, 7), Rational(-5, 2), Rational(7, 11)};
  int palindromes = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    HilbertSeries h{{}, 2, true};
    for (std::size_t i = 0; i < len; ++i) h.numerator.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < len / 2; ++i) h.numerator[len - 1 - i] = h.numerator[i];
    }
    const std::int64_t l = h.functional_equation_exponent();
    EXPECT_EQ(l, 2 - static_cast<std::int64_t>(len - 1));
    bool holds = true;
    for (const auto& t : points) holds = holds && evaluate(h, 1 / t) == power_of(t, l) * evaluate(h, t);
    EXPECT_EQ(holds, h.numerator_palindromic());
    palindromes += h.numerator_palindromic() ? 1 : 0;
  }
  EXPECT_GT(palindromes, 150);
}

TEST(Hilbert, ClosureSeriesCountsProjectivePoints) {
  // dim_k k[closure]_d = number of points of the projectivized semigroup with
  // coordinate sum d * n_r.
  for (const auto& s : random_semigroups(63, 12, 4, 12)) {
    const auto series = closure_hilbert_series(projective_closure_ideal(defining_ideal(s)));
    EXPECT_EQ(series.denominator_power, 2u) << s.to_string();
    const auto values = series.expand(5);
    const Integer top = s.largest();
    for (Integer d = 0; d <= 5; ++d) {
      std::int64_t points = 0;
      for (Integer v1 = 0; v1 <= d * top; ++v1) points += oracle::contains2d(s.generators(), v1, d * top - v1) ? 1 : 0;
      ASSERT_EQ(values[static_cast<std::size_t>(d)], points) << s.to_string() << " degree " << d;
    }
  }
}

TEST(AcmGroebner, Examples) {
  EXPECT_TRUE(is_acm_groebner(closure_of({3, 5})).acm);
  const auto bad = is_acm_groebner(closure_of({57, 95, 56, 96}));
  EXPECT_FALSE(bad.acm);
  ASSERT_TRUE(bad.offending.has_value());
  EXPECT_GT(bad.offending->leading_monomial()[3], 0);
  EXPECT_TRUE(is_acm_groebner(closure_of({57, 95, 70, 120})).acm);
}

TEST(AcmApery, Examples) {
  EXPECT_TRUE(is_acm_apery(projective({3, 5})).acm);
  EXPECT_TRUE(is_acm_apery(projective({2, 3})).acm);
  const auto bad = is_acm_apery(projective({57, 95, 56, 96}));
  EXPECT_FALSE(bad.acm);
  EXPECT_TRUE(bad.missing.has_value());
}

TEST(GorensteinApery, Examples) {
  EXPECT_TRUE(is_gorenstein_apery(projective({3, 5})).gorenstein);
  EXPECT_TRUE(is_gorenstein_apery(projective({57, 95, 70, 120})).gorenstein);
  const auto t = is_gorenstein_apery(projective({3, 5, 7}));
  EXPECT_FALSE(t.gorenstein);
  EXPECT_TRUE(t.failing_index.has_value());
  EXPECT_EQ(kind_of([] { is_gorenstein_apery(projective({57, 95, 56, 96})); }), ErrorKind::NotCohenMacaulay);
}

TEST(GorensteinHilbert, Examples) {
  const auto plane = is_gorenstein_hilbert(closure_of({3, 5}));
  EXPECT_TRUE(plane.gorenstein);
  EXPECT_EQ(plane.series.numerator, (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_TRUE(is_gorenstein_hilbert(closure_of({57, 95, 70, 120})).gorenstein);
  EXPECT_FALSE(is_gorenstein_hilbert(closure_of({3, 5, 7})).gorenstein);
  EXPECT_EQ(kind_of([] { is_gorenstein_hilbert(closure_of({57, 95, 56, 96})); }), ErrorKind::NotCohenMacaulay);
}

TEST(FullVerdict, Examples) {
  const auto plane = full_verdict(NumericalSemigroup::from({3, 5}));
  EXPECT_TRUE(plane.acm_groebner && plane.acm_apery);
  EXPECT_EQ(plane.gorenstein_apery, std::optional<bool>(true));
  EXPECT_EQ(plane.gorenstein_hilbert, std::optional<bool>(true));

  const auto reference = full_verdict(NumericalSemigroup::from({57, 95, 56, 96}));
  EXPECT_FALSE(reference.acm_groebner);
  EXPECT_FALSE(reference.acm_apery);
  EXPECT_FALSE(reference.gorenstein_apery.has_value());
  EXPECT_FALSE(reference.gorenstein_hilbert.has_value());
  EXPECT_TRUE(reference.symmetric);

  const auto star = full_verdict(NumericalSemigroup::from({57, 95, 70, 120}));
  EXPECT_TRUE(star.acm_groebner && star.acm_apery);
  EXPECT_EQ(star.gorenstein_apery, std::optional<bool>(true));
  EXPECT_EQ(star.gorenstein_hilbert, std::optional<bool>(true));

  EXPECT_EQ(kind_of([] { full_verdict(NumericalSemigroup::from({5001, 5003})); }), ErrorKind::TooLarge);
}

TEST(FullVerdict, CriteriaAgreeOnRandomSemigroups) {
  int acm = 0;
  int gorenstein = 0;
  for (const auto& s : random_semigroups(64, 120, 4, 60)) {
    const auto closure = projective_closure_ideal(defining_ideal(s));
    const ProjectiveSemigroup p(s);
    const bool by_groebner = is_acm_groebner(closure).acm;
    ASSERT_EQ(by_groebner, is_acm_apery(p).acm) << s.to_string();
    if (!by_groebner) continue;
    ++acm;
    const bool by_apery = is_gorenstein_apery(p).gorenstein;
    ASSERT_EQ(by_apery, is_gorenstein_hilbert(closure).gorenstein) << s.to_string();
    if (by_apery) {
      ++gorenstein;
      EXPECT_TRUE(s.is_symmetric()) << s.to_string();
    }
  }
  EXPECT_GT(acm, 20);
  EXPECT_GT(gorenstein, 5);
}
