#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smc/rational.hpp"
#include "smc/ring.hpp"

namespace smc {

struct Term {
  Rational coeff;
  Monomial mono;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: terms sorted strictly descending in the ring's order, no
// zero coefficients, no duplicate monomials. Two equal polynomials are
// structurally identical. Immutable in spirit: all operations return new
// values.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

  static Polynomial constant(RingPtr ring, Rational c) {
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), Monomial{}});
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial variable(RingPtr ring, int i, int exponent = 1) {
    if (i < 0 || i >= ring->nvars()) throw std::invalid_argument("Polynomial: bad variable index");
    Monomial m;
    m.set(i, exponent);
    return monomial(std::move(ring), Rational(1), m);
  }

  static Polynomial variable(const RingPtr& ring, const std::string& name, int exponent = 1) {
    int i = ring->var_index(name);
    if (i < 0) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
    return variable(ring, i, exponent);
  }

  static Polynomial monomial(RingPtr ring, Rational c, const Monomial& m) {
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), m});
    return Polynomial(std::move(ring), std::move(t));
  }

  // Builds canonical form from arbitrary (coeff, monomial) pairs.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    const PolyRing& r = *ring;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return monomial_greater(a.mono, b.mono, r); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return Polynomial(std::move(ring), std::move(out));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return terms_.front();
  }

  // Max weighted degree over terms; nullopt for the zero polynomial.
  std::optional<int> weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(*ring_));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.weighted_degree(*ring_);
    for (const auto& t : terms_)
      if (t.mono.weighted_degree(*ring_) != d) return false;
    return true;
  }

  Polynomial operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return Polynomial(ring_, std::move(t));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring_, q.ring_, "poly_add");
    const PolyRing& r = *p.ring_;
    std::vector<Term> out;
    out.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
      const Term& a = p.terms_[i];
      const Term& b = q.terms_[j];
      if (a.mono == b.mono) {
        Rational c = a.coeff + b.coeff;
        if (c != 0) out.push_back({std::move(c), a.mono});
        ++i, ++j;
      } else if (monomial_greater(a.mono, b.mono, r)) {
        out.push_back(a);
        ++i;
      } else {
        out.push_back(b);
        ++j;
      }
    }
    for (; i < p.terms_.size(); ++i) out.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) out.push_back(q.terms_[j]);
    return Polynomial(p.ring_ ? p.ring_ : q.ring_, std::move(out));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring_, q.ring_, "poly_mul");
    RingPtr ring = p.ring_ ? p.ring_ : q.ring_;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
      for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({std::move(c), m});
    const PolyRing& r = *ring;
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return monomial_greater(a.mono, b.mono, r); });
    return Polynomial(std::move(ring), std::move(out));
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return zero(p.ring_);
    std::vector<Term> t = p.terms_;
    for (auto& x : t) x.coeff *= c;
    return Polynomial(p.ring_, std::move(t));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  Polynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      base = (n >>= 1) ? base * base : base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!same_ring(p.ring_, q.ring_)) return false;
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (p.terms_[i].mono != q.terms_[i].mono || p.terms_[i].coeff != q.terms_[i].coeff)
        return false;
    return true;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace smc
