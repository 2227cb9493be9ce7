#include "monocurve/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace monocurve {

std::vector<std::optional<Integer>> residue_minima(std::span<const Integer> generators,
                                                   Integer modulus) {
  if (modulus <= 0) fail(ErrorKind::InvalidModulus, "modulus must be positive");
  const auto n = static_cast<std::size_t>(modulus);
  constexpr Integer kUnreached = std::numeric_limits<Integer>::max();
  std::vector<Integer> dist(n, kUnreached);
  dist[0] = 0;

  using Entry = std::pair<Integer, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, j] = queue.top();
    queue.pop();
    if (d != dist[j]) continue;
    for (Integer g : generators) {
      const auto next = static_cast<std::size_t>((static_cast<Integer>(j) + g % modulus) % modulus);
      const Integer candidate = checked_add(d, g);
      if (candidate < dist[next]) {
        dist[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }

  std::vector<std::optional<Integer>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (dist[j] != kUnreached) out[j] = dist[j];
  }
  return out;
}

std::vector<Integer> AperySet::sorted() const {
  std::vector<Integer> out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

Integer AperySet::max() const { return *std::max_element(elements.begin(), elements.end()); }

AperySet apery_of_generators(std::span<const Integer> generators, Integer modulus) {
  auto minima = residue_minima(generators, modulus);
  AperySet out{modulus, {}};
  out.elements.reserve(minima.size());
  for (const auto& m : minima) {
    if (!m) fail(ErrorKind::NotNumerical, "generators do not reach every residue class");
    out.elements.push_back(*m);
  }
  return out;
}

namespace {

bool in_generated(const std::vector<std::optional<Integer>>& minima, Integer modulus, Integer x) {
  const auto& m = minima[static_cast<std::size_t>(x % modulus)];
  return m && x >= *m;
}

}  // namespace

NumericalSemigroup::Construction NumericalSemigroup::make(std::span<const Integer> gens) {
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "empty generator list");
  std::vector<Integer> sorted(gens.begin(), gens.end());
  for (Integer g : sorted) {
    if (g <= 0) fail(ErrorKind::InvalidArgument, "generators must be positive, got " + std::to_string(g));
  }
  std::sort(sorted.begin(), sorted.end());

  Integer g = 0;
  for (Integer x : sorted) g = std::gcd(g, x);
  if (g != 1) {
    fail(ErrorKind::NotNumerical, "gcd(" + join_integers(sorted) + ") = " + std::to_string(g));
  }

  std::vector<Integer> redundant;
  std::vector<Integer> minimal;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Integer x = sorted[i];
    if (i > 0 && sorted[i - 1] == x) {
      redundant.push_back(x);
      continue;
    }
    // x can only be a combination of strictly smaller kept generators.
    if (!minimal.empty()) {
      auto minima = residue_minima(minimal, minimal.front());
      if (in_generated(minima, minimal.front(), x)) {
        redundant.push_back(x);
        continue;
      }
    }
    minimal.push_back(x);
  }
  if (minimal.size() < 2) {
    fail(ErrorKind::Degenerate,
         "fewer than two minimal generators remain (" + join_integers(minimal) + ")");
  }
  return Construction{NumericalSemigroup(std::move(minimal)), std::move(redundant)};
}

NumericalSemigroup NumericalSemigroup::from(std::span<const Integer> gens) {
  return make(gens).semigroup;
}

NumericalSemigroup NumericalSemigroup::from(std::initializer_list<Integer> gens) {
  return make(std::span<const Integer>(gens.begin(), gens.size())).semigroup;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> minimal)
    : generators_(std::move(minimal)),
      apery_min_(apery_of_generators(generators_, generators_.front())) {}

bool NumericalSemigroup::contains(Integer x) const {
  if (x < 0) return false;
  const Integer n = multiplicity();
  return x >= apery_min_.elements[static_cast<std::size_t>(x % n)];
}

AperySet NumericalSemigroup::apery(Integer n) const {
  if (n <= 0 || !contains(n)) {
    fail(ErrorKind::InvalidModulus, std::to_string(n) + " is not a positive element of <" + to_string() + ">");
  }
  return apery_of_generators(generators_, n);
}

Integer NumericalSemigroup::frobenius() const { return apery_min_.max() - multiplicity(); }

Integer NumericalSemigroup::genus() const {
  // sum(Ap)/n - (n-1)/2, kept in integers: (2*sum - n*(n-1)) / (2n).
  const Integer n = multiplicity();
  Integer sum = 0;
  for (Integer a : apery_min_.elements) sum = checked_add(sum, a);
  return (2 * sum - n * (n - 1)) / (2 * n);
}

bool NumericalSemigroup::is_symmetric() const {
  const auto ap = apery_min_.sorted();
  const Integer top = ap.back();
  for (std::size_t i = 0; i < ap.size(); ++i) {
    if (ap[i] + ap[ap.size() - 1 - i] != top) return false;
  }
  return true;
}

std::string NumericalSemigroup::to_string() const { return join_integers(generators_); }

NumericalSemigroup NumericalSemigroup::parse(const std::string& text) {
  return from(parse_integer_list(text));
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) fail(ErrorKind::ParseError, "empty entry in '" + text + "'");
    const std::string token = item.substr(first, last - first + 1);
    Integer value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(ErrorKind::ParseError, "not an integer: '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) fail(ErrorKind::ParseError, "empty integer list");
  return out;
}

std::string join_integers(std::span<const Integer> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

ProjectiveSemigroup::ProjectiveSemigroup(NumericalSemigroup base) : base_(std::move(base)) {
  const Integer top = base_.largest();
  generators_.emplace_back(0, top);
  for (Integer n : base_.generators()) generators_.emplace_back(n, top - n);
}

std::vector<Integer> ProjectiveSemigroup::reversed_generators() const {
  const auto& gens = base_.generators();
  const Integer top = base_.largest();
  std::vector<Integer> out;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) out.push_back(top - gens[i]);
  out.push_back(top);
  return out;
}

namespace {

// table[v] = fewest generators summing to v, -1 when v is not representable.
std::vector<Integer> min_lengths_upto(std::span<const Integer> gens, Integer bound) {
  std::vector<Integer> table(static_cast<std::size_t>(bound) + 1, -1);
  table[0] = 0;
  for (Integer v = 1; v <= bound; ++v) {
    Integer best = -1;
    for (Integer g : gens) {
      if (g > v) break;
      const Integer prev = table[static_cast<std::size_t>(v - g)];
      if (prev >= 0 && (best < 0 || prev + 1 < best)) best = prev + 1;
    }
    table[static_cast<std::size_t>(v)] = best;
  }
  return table;
}

}  // namespace

std::optional<Integer> ProjectiveSemigroup::min_factorization_length(Integer x) const {
  if (!base_.contains(x)) return std::nullopt;
  return min_lengths_upto(base_.generators(), x)[static_cast<std::size_t>(x)];
}

// A point (v1, v2) uses exactly (v1 + v2) / n_r generators, since each has
// coordinate sum n_r. The copies of (0, n_r) only pad the count, so the point is
// a member iff v1 is in the base semigroup with a factorization of at most that
// many generators.
bool ProjectiveSemigroup::contains(Point2 v) const {
  const auto [v1, v2] = v;
  if (v1 < 0 || v2 < 0) return false;
  const Integer top = degree();
  const Integer total = checked_add(v1, v2);
  if (total % top != 0) return false;
  const auto length = min_factorization_length(v1);
  return length && *length <= total / top;
}

ProjectiveAperySet projective_apery(const ProjectiveSemigroup& semigroup) {
  const Integer top = semigroup.degree();
  const auto base_apery = semigroup.base().apery(top);
  const auto firsts = base_apery.sorted();
  const auto lengths = min_lengths_upto(semigroup.base().generators(), firsts.back());

  ProjectiveAperySet out;
  out.modulus = top;
  out.points.emplace_back(0, top);
  for (Integer v : firsts) {
    if (v == 0) continue;
    // Least second coordinate: pad with no copies of (0, n_r).
    const Integer length = lengths[static_cast<std::size_t>(v)];
    out.points.emplace_back(v, checked_mul(top, length) - v);
  }
  out.points.emplace_back(top, 0);
  out.reversed_apery = apery_of_generators(semigroup.reversed_generators(), top).sorted();
  return out;
}

bool is_good_apery(const ProjectiveAperySet& apery, Integer* missing) {
  // reversed_apery is sorted, so its leading 0 pairs with b_0.
  std::vector<Integer> remaining(apery.reversed_apery.begin() + 1, apery.reversed_apery.end());
  bool good = true;
  for (const auto& [v, mu] : apery.interior()) {
    (void)v;
    auto it = std::lower_bound(remaining.begin(), remaining.end(), mu);
    if (it == remaining.end() || *it != mu) {
      if (good && missing) *missing = mu;
      good = false;
      continue;
    }
    remaining.erase(it);
  }
  return good;
}

}  // namespace monocurve
