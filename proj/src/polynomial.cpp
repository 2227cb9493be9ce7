#include "monocurve/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace monocurve {

RingPtr make_ring(VariableSet vars, MonomialOrder order) {
  if (vars.size() != order.size()) {
    fail(ErrorKind::AmbientMismatch, "order over " + std::to_string(order.size()) +
                                         " variables for a ring of " + std::to_string(vars.size()));
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(vars), std::move(order)});
}

RingPtr make_ring(VariableSet vars) {
  const auto n = vars.size();
  return make_ring(std::move(vars), MonomialOrder::degrevlex(n));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const auto n = ring->size();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) fail(ErrorKind::AmbientMismatch, "monomial size does not match ring");
  std::vector<Term> terms;
  if (c != 0) terms.push_back(Term{std::move(m), c});
  if (!terms.empty()) terms.back().coefficient.canonicalize();
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::binomial(RingPtr ring, const Monomial& a, const Monomial& b) {
  return from_terms(std::move(ring), {Term{a, 1}, Term{b, -1}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.monomial.size() != ring->size()) {
      fail(ErrorKind::AmbientMismatch, "monomial size does not match ring");
    }
    t.coefficient.canonicalize();
  }
  const auto& order = ring->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

bool Polynomial::is_pure_binomial() const {
  return terms_.size() == 2 && terms_[0].coefficient == -terms_[1].coefficient;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Rational lc = terms_.front().coefficient;
  if (lc == 1) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient /= lc;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(out));
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) {
    fail(ErrorKind::AmbientMismatch, ring_->descriptor() + " vs " + other.ring_->descriptor());
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return minus_scaled(Rational(-1), Monomial(ring_->size()), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return minus_scaled(Rational(1), Monomial(ring_->size()), other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial acc(ring_);
  for (const auto& t : other.terms_) acc = acc.minus_scaled(-t.coefficient, t.monomial, *this);
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.monomial * m, t.coefficient * c});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(g);
  const auto& order = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    Monomial shifted = g.terms_[j].monomial * m;
    if (i == terms_.size()) {
      out.push_back(Term{std::move(shifted), -c * g.terms_[j++].coefficient});
      continue;
    }
    const auto cmp = order.compare(terms_[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(shifted), -c * g.terms_[j++].coefficient});
    } else {
      Rational coeff = terms_[i].coefficient - c * g.terms_[j].coefficient;
      if (coeff != 0) out.push_back(Term{std::move(shifted), std::move(coeff)});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (!(other->vars == ring_->vars)) fail(ErrorKind::AmbientMismatch, "variable sets differ");
  return from_terms(std::move(other), terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool negative = sgn(t.coefficient) < 0;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += format_monomial(t.monomial, ring_->vars);
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = next() == '-';
    terms.push_back(parse_term(negative));
    for (skip_space(); pos_ < text_.size(); skip_space()) {
      const char sign = next();
      if (sign != '+' && sign != '-') error("expected '+' or '-'");
      terms.push_back(parse_term(sign == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    Term term{Monomial(ring_->size()), negative ? -1 : 1};
    parse_factor(term);
    for (skip_space(); peek() == '*'; skip_space()) {
      ++pos_;
      parse_factor(term);
    }
    return term;
  }

  void parse_factor(Term& term) {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational value{mpz_class(read_digits())};
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const mpz_class den(read_digits());
        if (den == 0) error("zero denominator");
        value /= Rational(den);
      }
      term.coefficient *= value;
      return;
    }
    const std::string name = read_identifier();
    const auto index = ring_->vars.index_of(name);
    if (index < 0) error("unknown variable '" + name + "'");
    long exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      exponent = std::stol(read_digits());
    }
    const auto i = static_cast<std::size_t>(index);
    term.monomial.set(i, static_cast<Exponent>(term.monomial[i] + exponent));
  }

  std::string read_digits() {
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    return text_.substr(start, pos_ - start);
  }

  std::string read_identifier() {
    const auto start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (start == pos_) error("expected a variable or number");
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char next() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  const std::string& text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolynomialParser(text, ring).parse();
}

}  // namespace monocurve
