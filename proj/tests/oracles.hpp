#pragma once

// Brute-force references used by the tests. None of these call into the
// algorithms they check: membership is plain reachability, Apéry sets come
// from a sieve, and 2-D membership enumerates generator multisets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "monocurve/integer.hpp"
#include "monocurve/monomial.hpp"
#include "monocurve/polynomial.hpp"

namespace oracle {

using monocurve::Integer;

/// reach[x] for 0 <= x <= bound.
inline std::vector<bool> sieve(const std::vector<Integer>& gens, Integer bound) {
  std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
  reach[0] = true;
  for (Integer x = 1; x <= bound; ++x) {
    for (Integer g : gens) {
      if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return reach;
}

inline bool contains(const std::vector<Integer>& gens, Integer x) {
  return x >= 0 && sieve(gens, x)[static_cast<std::size_t>(x)];
}

/// Ap(<gens>, n) by residue, from a sieve up to n * max(gens) (every residue is
/// hit below that bound once gcd = 1).
inline std::vector<Integer> apery(const std::vector<Integer>& gens, Integer n) {
  const Integer bound = n * *std::max_element(gens.begin(), gens.end()) + n;
  const auto reach = sieve(gens, bound);
  std::vector<Integer> out(static_cast<std::size_t>(n), -1);
  for (Integer x = 0; x <= bound; ++x) {
    auto& slot = out[static_cast<std::size_t>(x % n)];
    if (reach[static_cast<std::size_t>(x)] && slot < 0) slot = x;
  }
  return out;
}

inline Integer frobenius(const std::vector<Integer>& gens) {
  const Integer bound = gens[0] * gens.back();
  const auto reach = sieve(gens, bound);
  Integer last = -1;
  for (Integer x = 0; x <= bound; ++x) {
    if (!reach[static_cast<std::size_t>(x)]) last = x;
  }
  return last;
}

inline Integer gap_count(const std::vector<Integer>& gens) {
  const Integer f = frobenius(gens);
  if (f < 0) return 0;
  const auto reach = sieve(gens, f);
  return static_cast<Integer>(std::count(reach.begin(), reach.end(), false));
}

/// (v1, v2) is a sum of exactly k = (v1 + v2) / top points (n_i, top - n_i),
/// with n_0 = 0 and n_r = top; multisets enumerated as non-decreasing index
/// sequences.
inline bool contains2d(const std::vector<Integer>& gens, Integer v1, Integer v2) {
  const Integer top = gens.back();
  if (v1 < 0 || v2 < 0 || (v1 + v2) % top != 0) return false;
  std::vector<Integer> firsts{0};
  firsts.insert(firsts.end(), gens.begin(), gens.end());
  const Integer k = (v1 + v2) / top;
  // Depth-first over non-decreasing choices; the second coordinate is implied
  // by the count, so only the first coordinate needs to match.
  struct Frame {
    std::size_t start;
    Integer used;
    Integer sum;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.used == k) {
      if (f.sum == v1) return true;
      continue;
    }
    for (std::size_t i = f.start; i < firsts.size(); ++i) {
      const Integer s = f.sum + firsts[i];
      if (s > v1) break;
      stack.push_back({i, f.used + 1, s});
    }
  }
  return false;
}

/// Least mu with (upsilon, mu) in the projectivized semigroup, scanning
/// mu = -upsilon mod top upward.
inline Integer least_mu(const std::vector<Integer>& gens, Integer upsilon) {
  const Integer top = gens.back();
  for (Integer mu = ((-upsilon) % top + top) % top;; mu += top) {
    if (contains2d(gens, upsilon, mu)) return mu;
  }
}

/// Random strictly increasing list of `count` values in [lo, hi].
inline std::vector<Integer> random_list(std::mt19937_64& rng, std::size_t count, Integer lo, Integer hi) {
  std::uniform_int_distribution<Integer> d(lo, hi);
  std::vector<Integer> out;
  while (out.size() < count) {
    const Integer x = d(rng);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Degrevlex as a matrix order: total degree first, then the negated
/// exponents of the variables read from the last (least) one upward.
inline int degrevlex_matrix_compare(const std::vector<int>& a, const std::vector<int>& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return -a[i] > -b[i] ? 1 : -1;
  }
  return 0;
}

/// Image of f under x_i -> t^(weights[i]) as exponent -> coefficient.
inline std::map<Integer, monocurve::Rational> substitute(const monocurve::Polynomial& f,
                                                         const std::vector<Integer>& weights) {
  std::map<Integer, monocurve::Rational> out;
  for (const auto& t : f.terms()) {
    Integer e = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) e += weights[i] * t.monomial[i];
    out[e] += t.coefficient;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

/// Every exponent vector in n variables of total degree exactly d.
inline std::vector<monocurve::Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<monocurve::Monomial> out;
  std::vector<int> e(n, 0);
  // Enumerate compositions of d into n parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      monocurve::Monomial x(n);
      for (std::size_t k = 0; k < n; ++k) x.set(k, e[k]);
      out.push_back(x);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Number of degree-d monomials in n variables divisible by no generator.
inline std::int64_t standard_monomials(const std::vector<monocurve::Monomial>& gens, std::size_t n, int d) {
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(n, d)) {
    if (std::none_of(gens.begin(), gens.end(), [&](const monocurve::Monomial& g) { return g.divides(m); })) ++count;
  }
  return count;
}

}  // namespace oracle
