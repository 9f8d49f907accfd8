#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "smc/groebner.hpp"

namespace smc {

// A graded quotient ring: weighted polynomial ring modulo a homogeneous
// ideal, with a free-form provenance label.
struct QuotientPresentation {
  RingPtr ring;
  Ideal relations;
  std::string label;

  QuotientPresentation(RingPtr r, Ideal rel, std::string lbl)
      : ring(std::move(r)), relations(std::move(rel)), label(std::move(lbl)) {
    require_same_ring(ring, relations.ring(), "QuotientPresentation");
  }
};

namespace tpoly {

// Dense integer polynomials in the formal series variable t.
using TPoly = std::vector<Int>;

inline TPoly trim(TPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

inline TPoly add(TPoly a, const TPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(std::move(a));
}

inline TPoly sub(TPoly a, const TPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(std::move(a));
}

inline TPoly shift(const TPoly& a, int k) {
  if (a.empty()) return {};
  TPoly out(a.size() + static_cast<std::size_t>(k), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + static_cast<std::size_t>(k)] = a[i];
  return out;
}

inline TPoly one_minus_tw(int w) {
  TPoly p(static_cast<std::size_t>(w) + 1, Int(0));
  p[0] = 1;
  p[static_cast<std::size_t>(w)] = -1;
  return p;
}

// Exact division by (1 - t^w); returns false if not divisible.
inline bool divide_by_one_minus_tw(const TPoly& p, int w, TPoly& quotient) {
  if (p.empty()) {
    quotient.clear();
    return true;
  }
  std::size_t n = p.size();
  TPoly q(n, Int(0));
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = p[k];
    if (k >= static_cast<std::size_t>(w)) q[k] += q[k - static_cast<std::size_t>(w)];
  }
  // exact iff the top w entries vanish after the recurrence wraps
  if (n < static_cast<std::size_t>(w)) return false;
  for (std::size_t k = n - static_cast<std::size_t>(w); k < n; ++k)
    if (q[k] != 0) return false;
  q.resize(n - static_cast<std::size_t>(w));
  quotient = trim(std::move(q));
  return true;
}

}  // namespace tpoly

// Rational-function Hilbert series: integer numerator over prod (1 - t^w).
// Canonical form divides out removable (1 - t^w) factors greedily, largest w
// first, so equal series print identically. (Largest-first matters: dividing
// a numerator N(t)(1-t)(1-t^2) by (1-t) twice strands the factor (1+t) in
// the numerator, while taking (1-t^2) first reaches N(t).)
class HilbertSeries {
 public:
  HilbertSeries(tpoly::TPoly numerator, std::vector<int> denominator_weights)
      : num_(tpoly::trim(std::move(numerator))), weights_(std::move(denominator_weights)) {
    std::sort(weights_.begin(), weights_.end());
    canonicalize();
  }

  const tpoly::TPoly& numerator() const { return num_; }
  const std::vector<int>& denominator_weights() const { return weights_; }

  // Power-series coefficients of degrees 0..N.
  std::vector<Int> coefficients(int N) const {
    std::vector<Int> a(static_cast<std::size_t>(N) + 1, Int(0));
    for (std::size_t i = 0; i < num_.size() && i <= static_cast<std::size_t>(N); ++i)
      a[i] = num_[i];
    for (int w : weights_)
      for (int k = w; k <= N; ++k)
        a[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(k - w)];
    return a;
  }

  friend bool operator==(const HilbertSeries& x, const HilbertSeries& y) {
    // cross-multiplied polynomial identity
    tpoly::TPoly lhs = x.num_;
    for (int w : y.weights_) lhs = tpoly::mul(lhs, tpoly::one_minus_tw(w));
    tpoly::TPoly rhs = y.num_;
    for (int w : x.weights_) rhs = tpoly::mul(rhs, tpoly::one_minus_tw(w));
    return lhs == rhs;
  }

  std::string to_string() const {
    std::ostringstream os;
    if (num_.empty()) return "0";
    bool first = true;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      const Int& c = num_[k];
      if (c == 0) continue;
      Int abs_c = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << abs_c;
      } else {
        if (abs_c != 1) os << abs_c << "*";
        os << "t";
        if (k > 1) os << "^" << k;
      }
    }
    if (!weights_.empty()) {
      std::ostringstream den;
      std::map<int, int> mult;
      for (int w : weights_) ++mult[w];
      for (auto [w, m] : mult) {
        den << "(1-t";
        if (w > 1) den << "^" << w;
        den << ")";
        if (m > 1) den << "^" << m;
      }
      return "(" + os.str() + ") / (" + den.str() + ")";
    }
    return os.str();
  }

 private:
  void canonicalize() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = weights_.size(); i-- > 0;) {
        tpoly::TPoly q;
        if (tpoly::divide_by_one_minus_tw(num_, weights_[i], q)) {
          num_ = std::move(q);
          weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(i));
          progress = true;
          break;
        }
      }
      if (num_.empty()) {
        weights_.clear();
        break;
      }
    }
  }

  tpoly::TPoly num_;
  std::vector<int> weights_;
};

// Minimal monomial generators of the leading-term ideal of a reduced GB.
inline std::vector<Monomial> leading_term_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms = gb.leading_monomials();
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
      if (i != j && lms[j].divides(lms[i]) && (lms[i] != lms[j] || j < i)) redundant = true;
    if (!redundant) minimal.push_back(lms[i]);
  }
  return minimal;
}

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && (gens[i] != gens[j] || j < i)) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline std::string monomial_key(const std::vector<Monomial>& gens) {
  std::vector<std::string> parts;
  for (const auto& m : gens)
    parts.emplace_back(reinterpret_cast<const char*>(m.e.data()), m.e.size());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (auto& p : parts) key += p;
  return key;
}

// Numerator of the Hilbert series of R/(monomial ideal), by the pivot
// recursion N(I) = N(I + (x)) + t^w(x) N(I : x). Memoized on the canonical
// generator set.
class HilbertNumerator {
 public:
  explicit HilbertNumerator(const PolyRing& ring) : ring_(ring) {}

  tpoly::TPoly compute(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    // ideal contains 1: quotient is zero
    for (const auto& g : gens)
      if (g.is_one()) return {};
    if (gens.empty()) return {Int(1)};

    std::string key = monomial_key(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    tpoly::TPoly result;
    if (pairwise_coprime(gens)) {
      result = {Int(1)};
      for (const auto& g : gens)
        result = tpoly::mul(result, tpoly::one_minus_tw(g.weighted_degree(ring_)));
    } else {
      int x = pick_pivot(gens);
      // I + (x)
      std::vector<Monomial> plus;
      Monomial xv;
      xv.set(x, 1);
      plus.push_back(xv);
      for (const auto& g : gens)
        if (g[x] == 0) plus.push_back(g);
      // I : x
      std::vector<Monomial> colon;
      for (const auto& g : gens) {
        Monomial h = g;
        if (h[x] > 0) h.set(x, h[x] - 1);
        colon.push_back(h);
      }
      result = tpoly::add(compute(std::move(plus)),
                          tpoly::shift(compute(std::move(colon)), ring_.weight(x)));
    }
    memo_[key] = result;
    return result;
  }

 private:
  bool pairwise_coprime(const std::vector<Monomial>& gens) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!Monomial::coprime(gens[i], gens[j])) return false;
    return true;
  }

  int pick_pivot(const std::vector<Monomial>& gens) const {
    // variable occurring in the most generators
    int best = 0, best_count = -1;
    for (int v = 0; v < ring_.nvars(); ++v) {
      int count = 0;
      for (const auto& g : gens)
        if (g[v] > 0) ++count;
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    return best;
  }

  const PolyRing& ring_;
  std::map<std::string, tpoly::TPoly> memo_;
};

}  // namespace detail

inline HilbertSeries hilbert_series_of_monomials(const RingPtr& ring,
                                                 const std::vector<Monomial>& gens) {
  detail::HilbertNumerator hn(*ring);
  tpoly::TPoly num = hn.compute(gens);
  std::vector<int> weights;
  for (int i = 0; i < ring->nvars(); ++i) weights.push_back(ring->weight(i));
  return HilbertSeries(std::move(num), std::move(weights));
}

// Exact Hilbert series of the graded quotient, via the leading-term ideal of
// a reduced Groebner basis (Macaulay's principle).
inline HilbertSeries hilbert_series(const QuotientPresentation& pres) {
  GroebnerBasis gb = buchberger(pres.relations);
  return hilbert_series_of_monomials(pres.ring, leading_term_ideal(gb));
}

inline HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  return hilbert_series_of_monomials(gb.ring(), leading_term_ideal(gb));
}

}  // namespace smc
