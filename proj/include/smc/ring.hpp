#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace smc {

struct VariableSpec {
  std::string name;
  int weight = 1;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

enum class MonomialOrder {
  WeightedDegRevLex,  // total weighted degree, ties broken reverse-lex
  Lex,
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring with a fixed, ordered list of weighted variables and a
// monomial order. Immutable; shared by reference between values.
class PolyRing {
 public:
  static constexpr int kMaxVars = 12;

  static RingPtr create(std::vector<VariableSpec> vars,
                        MonomialOrder order = MonomialOrder::WeightedDegRevLex) {
    if (vars.empty() || vars.size() > kMaxVars)
      throw std::invalid_argument("PolyRing: need 1.." + std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].weight < 1) throw std::invalid_argument("PolyRing: weight must be >= 1");
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i].name == vars[j].name)
          throw std::invalid_argument("PolyRing: duplicate variable '" + vars[i].name + "'");
    }
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(vars), order));
  }

  int nvars() const { return static_cast<int>(vars_.size()); }
  const VariableSpec& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  int weight(int i) const { return vars_[static_cast<std::size_t>(i)].weight; }
  MonomialOrder order() const { return order_; }
  const std::vector<VariableSpec>& vars() const { return vars_; }

  // -1 if the name is unknown.
  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars_[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
  }

  // Structural equality; two separately created rings with the same
  // variables and order are the same ring.
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PolyRing(std::vector<VariableSpec> vars, MonomialOrder order)
      : vars_(std::move(vars)), order_(order) {}

  std::vector<VariableSpec> vars_;
  MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

// Exponent vector. Fixed storage, trailing entries zero; the ring knows how
// many slots are live.
struct Monomial {
  std::array<std::uint8_t, PolyRing::kMaxVars> e{};

  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  void set(int i, int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("Monomial: exponent out of range");
    e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; });
  }

  int weighted_degree(const PolyRing& ring) const {
    int d = 0;
    for (int i = 0; i < ring.nvars(); ++i) d += e[static_cast<std::size_t>(i)] * ring.weight(i);
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e.size(); ++i) {
      int v = e[i] + o.e[i];
      if (v > 255) throw std::overflow_error("Monomial: exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(v);
    }
    return r;
  }

  // Quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Strict "a before b" in descending ring order (a > b).
inline bool monomial_greater(const Monomial& a, const Monomial& b, const PolyRing& ring) {
  switch (ring.order()) {
    case MonomialOrder::Lex: {
      for (int i = 0; i < ring.nvars(); ++i) {
        auto ai = a[i], bi = b[i];
        if (ai != bi) return ai > bi;
      }
      return false;
    }
    case MonomialOrder::WeightedDegRevLex: {
      int da = a.weighted_degree(ring), db = b.weighted_degree(ring);
      if (da != db) return da > db;
      // tie-break: at the last variable where they differ, the larger
      // exponent wins, so later variables dominate within a degree and
      // substitution relations like s2 - s1^2 lead with s2
      for (int i = ring.nvars() - 1; i >= 0; --i) {
        auto ai = a[i], bi = b[i];
        if (ai != bi) return ai > bi;
      }
      return false;
    }
  }
  return false;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace smc
