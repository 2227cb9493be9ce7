#include "monocurve/hilbert.hpp"

#include <algorithm>

#include "monocurve/integer.hpp"

namespace monocurve {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly add(Poly a, const Poly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = checked_add(a[i + shift], b[i]);
  trim(a);
  return a;
}

Poly times_one_minus_power(const Poly& p, std::size_t e) {
  Poly out = p;
  Poly shifted(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) shifted[i] = -p[i];
  return add(std::move(out), shifted, e);
}

Poly numerator(std::vector<Monomial> gens) {
  gens = minimalize_monomials(gens);
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {0};
  }

  const std::size_t n = gens.front().size();
  std::vector<std::size_t> count(n, 0);
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support()) coprime = false;
    seen |= g.support();
    for (std::size_t v = 0; v < n; ++v) count[v] += g[v] > 0 ? 1 : 0;
  }
  if (coprime) {
    Poly out{1};
    for (const auto& g : gens) out = times_one_minus_power(out, static_cast<std::size_t>(g.degree()));
    return out;
  }

  const std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Exponent e = 0;
  for (const auto& g : gens) {
    if (g[pivot] > 0 && (e == 0 || g[pivot] < e)) e = g[pivot];
  }
  Monomial power(n);
  power.set(pivot, e);

  std::vector<Monomial> sum{power};
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    if (g[pivot] == 0) sum.push_back(g);
    Monomial q = g;
    q.set(pivot, std::max<Exponent>(0, g[pivot] - e));
    quotient.push_back(q);
  }
  return add(numerator(std::move(sum)), numerator(std::move(quotient)), static_cast<std::size_t>(e));
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::span<const Monomial> generators) {
  std::vector<Monomial> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : sorted) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  return out;
}

HilbertSeries hilbert_series(std::span<const Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) fail(ErrorKind::AmbientMismatch, "generator has the wrong number of variables");
  }
  return HilbertSeries{numerator(std::vector<Monomial>(generators.begin(), generators.end())), nvars, false};
}

HilbertSeries HilbertSeries::reduce() const {
  HilbertSeries out = *this;
  trim(out.numerator);
  while (out.denominator_power > 0 && out.numerator_at_one() == 0 && out.numerator != Poly{0}) {
    // numerator = (1 - t) q  with q_i = n_0 + ... + n_i
    Poly q(out.numerator.size() - 1, 0);
    std::int64_t running = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      running = checked_add(running, out.numerator[i]);
      q[i] = running;
    }
    out.numerator = std::move(q);
    trim(out.numerator);
    --out.denominator_power;
  }
  out.reduced = true;
  return out;
}

std::vector<std::int64_t> HilbertSeries::expand(std::size_t degree) const {
  Poly h(degree + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i <= degree; ++i) h[i] = numerator[i];
  for (std::size_t k = 0; k < denominator_power; ++k) {
    for (std::size_t i = 1; i <= degree; ++i) h[i] = checked_add(h[i], h[i - 1]);
  }
  return h;
}

std::int64_t HilbertSeries::numerator_at_one() const {
  std::int64_t sum = 0;
  for (std::int64_t c : numerator) sum = checked_add(sum, c);
  return sum;
}

bool HilbertSeries::numerator_palindromic() const {
  Poly p = numerator;
  trim(p);
  return std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2), p.rbegin());
}

std::int64_t HilbertSeries::functional_equation_exponent() const {
  return static_cast<std::int64_t>(denominator_power) - static_cast<std::int64_t>(numerator_degree());
}

std::int64_t HilbertSeries::a_invariant() const { return -functional_equation_exponent(); }

std::string HilbertSeries::to_string() const {
  std::string num;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const std::int64_t c = numerator[i];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (num.empty()) {
      num += c < 0 ? "-" : "";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    if (a != 1 || i == 0) num += std::to_string(a);
    if (i > 0) num += (a != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  if (num.empty()) num = "0";
  if (denominator_power == 0) return num;
  return "(" + num + ") / (1 - t)" + (denominator_power > 1 ? "^" + std::to_string(denominator_power) : "");
}

}  // namespace monocurve
