#include "monocurve/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace monocurve {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "S-polynomial of zero");
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const Polynomial left = f.scaled(1 / lf.coefficient, l / lf.monomial);
  return left.minus_scaled(1 / lg.coefficient, l / lg.monomial, g);
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const auto& ring = f.ring();
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(ring)), Polynomial(ring)};
  for (const auto& g : divisors) {
    if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::AmbientMismatch, "divisor from another ring");
  }

  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term lead = h.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& gl = divisors[i].leading_term();
      if (!gl.monomial.divides(lead.monomial)) continue;
      const Rational c = lead.coefficient / gl.coefficient;
      const Monomial m = lead.monomial / gl.monomial;
      h = h.minus_scaled(c, m, divisors[i]);
      out.quotients[i] = out.quotients[i] + Polynomial::term(ring, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      h = h.minus_scaled(lead.coefficient, lead.monomial, Polynomial::constant(ring, 1));
    }
  }
  out.remainder = Polynomial::from_terms(ring, std::move(remainder));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  return divide(f, divisors).remainder;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(g.leading_monomial());
  return out;
}

std::vector<std::string> GroebnerBasis::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string());
  return out;
}

namespace {

void check_deadline(const BuchbergerOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    fail(ErrorKind::Timeout, "Buchberger run exceeded its deadline");
  }
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::int64_t weight;
};

// Pending critical pairs, maintained with the Gebauer-Möller update. Works on
// leading monomials only, so both coefficient representations share it.
class PairQueue {
 public:
  PairQueue(const MonomialOrder& order, std::vector<std::int64_t> weights)
      : order_(order), weights_(std::move(weights)) {}

  bool empty() const { return pairs_.empty(); }

  // `leads` holds every basis element so far; the new element is leads.back().
  void update(std::span<const Monomial> leads, std::vector<bool>& active, BuchbergerStats& stats) {
    const std::size_t h = leads.size() - 1;
    const Monomial& lh = leads[h];

    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g]) fresh.push_back(make_pair(g, h, leads));
    }
    stats.pairs_created += fresh.size();

    // Drop (g, h) when another new pair's lcm divides its lcm, unless the lead
    // monomials are coprime; equal lcms keep one representative.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool drop = false;
      if (!leads[p.i].coprime(lh)) {
        for (std::size_t b = a + 1; b < fresh.size() && !drop; ++b) {
          drop = fresh[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) {
          drop = kept[b].lcm.divides(p.lcm);
        }
      }
      if (drop) {
        ++stats.skipped_chain;
      } else {
        kept.push_back(p);
      }
    }

    // Old pairs whose lcm is a proper multiple of the new lead via both sides.
    std::erase_if(pairs_, [&](const CriticalPair& p) {
      const bool drop = lh.divides(p.lcm) && leads[p.i].lcm(lh) != p.lcm && leads[p.j].lcm(lh) != p.lcm;
      if (drop) ++stats.skipped_chain;
      return drop;
    });

    for (auto& p : kept) {
      if (leads[p.i].coprime(lh)) {
        ++stats.skipped_product;
      } else {
        pairs_.push_back(std::move(p));
      }
    }

    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && lh.divides(leads[g])) active[g] = false;
    }
    active.push_back(true);
  }

  // Normal strategy: smallest weighted lcm, ties by order then insertion.
  CriticalPair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.weight != b.weight) {
        if (a.weight < b.weight) best = k;
        continue;
      }
      const auto cmp = order_.compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    CriticalPair out = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

 private:
  CriticalPair make_pair(std::size_t i, std::size_t j, std::span<const Monomial> leads) const {
    Monomial l = leads[i].lcm(leads[j]);
    std::int64_t w = 0;
    if (weights_.empty()) {
      w = l.degree();
    } else {
      for (std::size_t v = 0; v < l.size(); ++v) w += weights_[v] * l[v];
    }
    return CriticalPair{i, j, std::move(l), w};
  }

  const MonomialOrder& order_;
  std::vector<std::int64_t> weights_;
  std::vector<CriticalPair> pairs_;
};

void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

// ---------------------------------------------------------------------------
// Pure binomial representation: head - tail with head > tail.

struct Binomial {
  Monomial head;
  Monomial tail;
};

class BinomialEngine {
 public:
  BinomialEngine(const RingPtr& ring, const BuchbergerOptions& options)
      : ring_(ring), order_(ring->order), options_(options) {}

  std::optional<Binomial> orient(Monomial a, Monomial b) const {
    const auto cmp = order_.compare(a, b);
    if (cmp == 0) return std::nullopt;
    if (cmp < 0) std::swap(a, b);
    return Binomial{std::move(a), std::move(b)};
  }

  // Rewrites m with the first applicable head until nothing divides it. Each
  // step removes the largest power of the head that divides m.
  Monomial reduce_monomial(Monomial m, std::size_t skip = std::numeric_limits<std::size_t>::max()) const {
    std::size_t steps = 0;
    for (;;) {
      bool changed = false;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == skip || !live_[k]) continue;
        const auto& b = basis_[k];
        if (!b.head.divides(m)) continue;
        Exponent power = std::numeric_limits<Exponent>::max();
        for (std::size_t v = 0; v < m.size(); ++v) {
          if (b.head[v] > 0) power = std::min(power, m[v] / b.head[v]);
        }
        m = (m / b.head.pow(power)) * b.tail.pow(power);
        changed = true;
        break;
      }
      if (!changed) return m;
      if (++steps % 4096 == 0) check_deadline(options_);
    }
  }

  GroebnerBasis run(std::span<const Polynomial> input) {
    BuchbergerStats stats;
    stats.binomial_path = true;
    PairQueue queue(order_, options_.selection_weights);
    std::vector<bool> active;
    std::vector<Monomial> leads;

    auto insert = [&](Binomial b) {
      leads.push_back(b.head);
      basis_.push_back(std::move(b));
      live_.push_back(true);
      queue.update(leads, active, stats);
    };

    for (const auto& f : input) {
      const auto& t = f.terms();
      if (auto b = orient(t[0].monomial, t[1].monomial)) insert(std::move(*b));
    }

    while (!queue.empty()) {
      check_deadline(options_);
      const CriticalPair pair = queue.pop();
      const auto& bi = basis_[pair.i];
      const auto& bj = basis_[pair.j];
      ++stats.reductions;
      Monomial a = reduce_monomial((pair.lcm / bi.head) * bi.tail);
      Monomial c = reduce_monomial((pair.lcm / bj.head) * bj.tail);
      auto remainder = orient(std::move(a), std::move(c));
      if (!remainder) {
        ++stats.zero_reductions;
        if (options_.trace) log(stats, pair, nullptr);
        continue;
      }
      ++stats.added;
      if (options_.trace) log(stats, pair, &*remainder);
      insert(std::move(*remainder));
    }

    return finish(std::move(stats));
  }

 private:
  void log(BuchbergerStats& stats, const CriticalPair& pair, const Binomial* remainder) const {
    PairLogEntry entry{pair.i, pair.j, format_monomial(pair.lcm, ring_->vars),
                       remainder ? PairLogEntry::Outcome::Added : PairLogEntry::Outcome::Zero, "0"};
    if (remainder) entry.remainder = to_polynomial(*remainder).to_string();
    stats.log.push_back(std::move(entry));
  }

  Polynomial to_polynomial(const Binomial& b) const { return Polynomial::binomial(ring_, b.head, b.tail); }

  GroebnerBasis finish(BuchbergerStats stats) {
    // Minimalize: keep one element per minimal head.
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      for (std::size_t o = 0; o < basis_.size() && live_[k]; ++o) {
        if (o == k || !live_[o]) continue;
        if (basis_[o].head.divides(basis_[k].head)) live_[k] = false;
      }
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!live_[k]) continue;
      Monomial tail = reduce_monomial(basis_[k].tail, k);
      out.push_back(Polynomial::binomial(ring_, basis_[k].head, tail));
    }
    sort_basis(out, order_);
    return GroebnerBasis{std::move(out), ring_, true, std::move(stats)};
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  const BuchbergerOptions& options_;
  std::vector<Binomial> basis_;
  std::vector<bool> live_;
};

GroebnerBasis generic_buchberger(const RingPtr& ring, std::span<const Polynomial> input,
                                 const BuchbergerOptions& options) {
  BuchbergerStats stats;
  PairQueue queue(ring->order, options.selection_weights);
  std::vector<bool> active;
  std::vector<Monomial> leads;
  std::vector<Polynomial> basis;

  auto insert = [&](Polynomial p) {
    leads.push_back(p.leading_monomial());
    basis.push_back(std::move(p));
    queue.update(leads, active, stats);
  };

  for (const auto& f : input) {
    if (!f.is_zero()) insert(f.monic());
  }

  while (!queue.empty()) {
    check_deadline(options);
    const CriticalPair pair = queue.pop();
    ++stats.reductions;
    Polynomial r = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    PairLogEntry entry;
    if (options.trace) {
      entry = PairLogEntry{pair.i, pair.j, format_monomial(pair.lcm, ring->vars),
                           PairLogEntry::Outcome::Zero, r.to_string()};
    }
    if (r.is_zero()) {
      ++stats.zero_reductions;
    } else {
      ++stats.added;
      entry.outcome = PairLogEntry::Outcome::Added;
      if (options.on_remainder) options.on_remainder(r);
      insert(r.monic());
    }
    if (options.trace) stats.log.push_back(std::move(entry));
  }

  GroebnerBasis out = reduce_basis(basis);
  out.stats = std::move(stats);
  return out;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options) {
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "empty generator list");
  check_deadline(options);
  const RingPtr ring = generators.front().ring();
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::AmbientMismatch, "generators from different rings");
  }
  if (!options.selection_weights.empty() && options.selection_weights.size() != ring->size()) {
    fail(ErrorKind::InvalidArgument, "selection weights do not match the ring");
  }
  const bool binomial = std::all_of(generators.begin(), generators.end(),
                                    [](const Polynomial& p) { return p.is_zero() || p.is_pure_binomial(); });
  const bool any_nonzero = std::any_of(generators.begin(), generators.end(),
                                       [](const Polynomial& p) { return !p.is_zero(); });
  if (!any_nonzero) fail(ErrorKind::ZeroPolynomial, "all generators are zero");
  if (binomial && !options.force_generic) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : generators) {
      if (!g.is_zero()) nonzero.push_back(g);
    }
    BinomialEngine engine(ring, options);
    return engine.run(nonzero);
  }
  return generic_buchberger(ring, generators, options);
}

GroebnerBasis reduce_basis(std::span<const Polynomial> basis) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  const RingPtr ring = basis.front().ring();
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) continue;
    const auto& lk = basis[k].leading_monomial();
    bool redundant = false;
    for (std::size_t o = 0; o < basis.size() && !redundant; ++o) {
      if (o == k || basis[o].is_zero()) continue;
      const auto& lo = basis[o].leading_monomial();
      // Equal leads: keep the first occurrence.
      redundant = lo.divides(lk) && (lo != lk || o < k);
    }
    if (!redundant) minimal.push_back(basis[k].monic());
  }
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t o = 0; o < minimal.size(); ++o) {
      if (o != k) others.push_back(minimal[o]);
    }
    const Term lead = minimal[k].leading_term();
    const Polynomial tail = minimal[k] - Polynomial::term(ring, lead.monomial, lead.coefficient);
    reduced.push_back(Polynomial::term(ring, lead.monomial, 1) + normal_form(tail, others));
  }
  sort_basis(reduced, ring->order);
  return GroebnerBasis{std::move(reduced), ring, true, {}};
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& lead = basis[j].leading_monomial();
      for (const auto& t : basis[i].terms()) {
        if (lead.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

RingPtr homogenizing_ring(const RingPtr& ring, const std::string& hvar) {
  if (ring->order.kind() != MonomialOrder::Kind::Degrevlex) {
    fail(ErrorKind::PreconditionViolated, "homogenization needs a degrevlex order, got " + ring->descriptor());
  }
  if (ring->vars.index_of(hvar) >= 0) {
    fail(ErrorKind::PreconditionViolated, "homogenizing variable '" + hvar + "' already in the ring");
  }
  auto priority = ring->order.priority();
  priority.push_back(priority.size());
  return make_ring(ring->vars.appended(hvar), MonomialOrder::degrevlex(std::move(priority)));
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target) {
  if (target->size() != f.ring()->size() + 1) fail(ErrorKind::AmbientMismatch, "target is not f's ring plus one");
  const auto d = f.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    terms.push_back(Term{t.monomial.extended(static_cast<Exponent>(d - t.monomial.degree())), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target) {
  if (target->size() + 1 != f.ring()->size()) fail(ErrorKind::AmbientMismatch, "target is not f's ring minus one");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back(Term{t.monomial.truncated(target->size()), t.coefficient});
  return Polynomial::from_terms(target, std::move(terms));
}

GroebnerBasis homogenize_basis(const GroebnerBasis& basis, const std::string& hvar) {
  if (!basis.reduced) fail(ErrorKind::PreconditionViolated, "basis is not flagged reduced");
  const RingPtr target = homogenizing_ring(basis.ring, hvar);
  std::vector<Polynomial> out;
  for (const auto& g : basis.generators) out.push_back(homogenize(g, target));
  sort_basis(out, target->order);
  return GroebnerBasis{std::move(out), target, true, {}};
}

}  // namespace monocurve
