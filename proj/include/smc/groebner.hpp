#pragma once

#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "smc/polynomial.hpp"
#include "smc/ringmap.hpp"

namespace smc {

// Homogeneous ideal, given by nonzero homogeneous generators.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      require_same_ring(ring_, g.ring(), "Ideal");
      if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
      if (!g.is_homogeneous())
        throw std::invalid_argument("Ideal: generator not homogeneous: inhomogeneous ideals "
                                    "are unsupported");
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

namespace detail {

// Division remainder against a list of monic divisors. The input terms are
// consumed in descending order, so the remainder comes out sorted.
inline Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    // move irreducible leading terms to the remainder in one sweep, then
    // cancel the first reducible one
    const std::vector<Term>& ts = work.terms();
    std::size_t idx = 0;
    const Polynomial* hit = nullptr;
    for (; idx < ts.size() && !hit; ++idx) {
      for (const auto& g : divisors)
        if (g.leading_term().mono.divides(ts[idx].mono)) {
          hit = &g;
          break;
        }
      if (!hit) remainder.push_back(ts[idx]);
    }
    if (!hit) break;
    --idx;
    Monomial q = ts[idx].mono / hit->leading_term().mono;
    Rational c = ts[idx].coeff / hit->leading_term().coeff;
    std::vector<Term> tail(ts.begin() + static_cast<std::ptrdiff_t>(idx), ts.end());
    work = Polynomial::from_terms(p.ring(), std::move(tail)) -
           Polynomial::monomial(p.ring(), c, q) * *hit;
  }
  return Polynomial::from_terms(p.ring(), std::move(remainder));
}

inline Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading_term().coeff) * p;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial lcm = Monomial::lcm(f.leading_term().mono, g.leading_term().mono);
  Polynomial a = Polynomial::monomial(f.ring(), Rational(1) / f.leading_term().coeff,
                                      lcm / f.leading_term().mono);
  Polynomial b = Polynomial::monomial(g.ring(), Rational(1) / g.leading_term().coeff,
                                      lcm / g.leading_term().mono);
  return a * f - b * g;
}

}  // namespace detail

// Reduced Groebner basis: monic elements, no term of any element divisible by
// the leading monomial of another, sorted ascending in the ring order. This
// form is unique for (ideal, order), which makes ideal equality and golden
// outputs canonical.
class GroebnerBasis {
 public:
  GroebnerBasis(Ideal ideal, std::vector<Polynomial> elements)
      : ideal_(std::move(ideal)), elements_(std::move(elements)) {}

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const std::vector<Polynomial>& elements() const { return elements_; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g.leading_term().mono);
    return out;
  }

 private:
  Ideal ideal_;
  std::vector<Polynomial> elements_;
};

// Buchberger with the normal selection strategy (minimal lcm degree first)
// and the two classical pair criteria, followed by minimization and full
// inter-reduction.
inline GroebnerBasis buchberger(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const PolyRing& r = *ring;
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) basis.push_back(detail::make_monic(g));

  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
  };
  auto pair_before = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.lcm != b.lcm) return !monomial_greater(a.lcm, b.lcm, r);
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };

  std::vector<Pair> pending;
  std::set<std::pair<int, int>> pending_keys;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial lcm = Monomial::lcm(basis[static_cast<std::size_t>(i)].leading_term().mono,
                                   basis[static_cast<std::size_t>(j)].leading_term().mono);
      pending.push_back({i, j, lcm, lcm.weighted_degree(r)});
      pending_keys.insert({i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_before);
    Pair p = *it;
    pending.erase(it);
    pending_keys.erase({p.i, p.j});

    const Monomial& lmi = basis[static_cast<std::size_t>(p.i)].leading_term().mono;
    const Monomial& lmj = basis[static_cast<std::size_t>(p.j)].leading_term().mono;
    // first criterion: coprime leading monomials
    if (Monomial::coprime(lmi, lmj)) continue;
    // second (chain) criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[static_cast<std::size_t>(k)].leading_term().mono.divides(p.lcm)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (!pending_keys.count({key_ik.first, key_ik.second}) &&
          !pending_keys.count({key_jk.first, key_jk.second})) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    Polynomial s = detail::s_polynomial(basis[static_cast<std::size_t>(p.i)],
                                        basis[static_cast<std::size_t>(p.j)]);
    Polynomial nf = detail::reduce_full(s, basis);
    if (!nf.is_zero()) {
      basis.push_back(detail::make_monic(nf));
      add_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }

  // minimize: keep only elements with minimal leading monomials
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lmi = basis[i].leading_term().mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_term().mono;
      if (lmj.divides(lmi) && (lmi != lmj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce tails
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial nf = detail::reduce_full(minimal[i], others);
    reduced.push_back(detail::make_monic(nf));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return !monomial_greater(a.leading_term().mono, b.leading_term().mono, r);
  });
  return GroebnerBasis(ideal, std::move(reduced));
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  require_same_ring(p.ring(), gb.ring(), "normal_form");
  return detail::reduce_full(p, gb.elements());
}

inline bool ideal_membership(const Polynomial& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring(), "ideal_membership");
  return normal_form(p, buchberger(ideal)).is_zero();
}

inline bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

inline bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.elements() == b.elements();
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_equal");
  return gb_equal(buchberger(a), buchberger(b));
}

// All monomials of exact weighted degree, in descending ring order.
inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
  std::vector<Monomial> out;
  Monomial current;
  const PolyRing& r = *ring;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == r.nvars()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    int w = r.weight(var);
    for (int e = 0; e * w <= remaining; ++e) {
      current.set(var, e);
      self(self, var + 1, remaining - e * w);
    }
    current.set(var, 0);
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_greater(a, b, r); });
  return out;
}

// Monomials of exact weighted degree outside the leading-term ideal; their
// count is the graded dimension of the quotient in that degree.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree) {
  std::vector<Monomial> lms = gb.leading_monomials();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(gb.ring(), degree)) {
    bool divisible = false;
    for (const auto& lm : lms)
      if (lm.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

// ---- exact rank ----------------------------------------------------------

namespace detail {

inline int int_size(const Int& x) {
  return static_cast<int>(mpz_sizeinbase(x.backend().data(), 2));
}

}  // namespace detail

// Fraction-free (Bareiss) Gaussian elimination; pivots chosen as the
// smallest nonzero entry of the working column block to limit growth.
inline int exact_rank(std::vector<std::vector<Rational>> mat) {
  if (mat.empty()) return 0;
  std::size_t ncols = mat[0].size();
  // clear denominators row by row
  std::vector<std::vector<Int>> a;
  a.reserve(mat.size());
  for (auto& row : mat) {
    Int lcm = 1;
    for (auto& x : row)
      if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Int> irow(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      irow[j] = numerator(row[j]) * (lcm / denominator(row[j]));
    a.push_back(std::move(irow));
  }

  int rank = 0;
  Int prev_pivot = 1;
  std::size_t nrows = a.size();
  for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < nrows; ++col) {
    // smallest nonzero entry in this column at or below `rank`
    std::size_t best = nrows;
    int best_size = 0;
    for (std::size_t i = static_cast<std::size_t>(rank); i < nrows; ++i) {
      if (a[i][col] == 0) continue;
      int sz = detail::int_size(a[i][col]);
      if (best == nrows || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == nrows) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[best]);
    const std::vector<Int>& prow = a[static_cast<std::size_t>(rank)];
    Int pivot = prow[col];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < nrows; ++i) {
      Int factor = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        Int v = a[i][j] * pivot - factor * prow[j];
        a[i][j] = v / prev_pivot;  // exact by Bareiss
      }
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

// Exact rational solve of A x = b by Gaussian elimination.
// Returns false if inconsistent; any free variables are set to zero.
inline bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                         std::vector<Rational>& x) {
  std::size_t nrows = a.size();
  std::size_t ncols = nrows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t sel = nrows;
    for (std::size_t i = row; i < nrows; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[row], a[sel]);
    std::swap(b[row], b[sel]);
    Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < nrows; ++i)
    if (b[i] != 0) return false;
  x.assign(ncols, Rational(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k];
  return true;
}

// Dimension over the rationals of the span of the normal forms of the mapped
// source monomials of one weighted degree, inside the target quotient.
inline int graded_image_rank(const RingMap& map, const GroebnerBasis& target_gb, int degree) {
  std::vector<Monomial> source_monos = monomials_of_degree(map.source(), degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col_index;
  std::vector<std::vector<Rational>> rows;
  for (const auto& mu : source_monos) {
    Polynomial img = map.apply(Polynomial::monomial(map.source(), Rational(1), mu));
    Polynomial nf = normal_form(img, target_gb);
    if (nf.is_zero()) continue;
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (const auto& t : nf.terms()) {
      auto [it, inserted] = col_index.try_emplace(t.mono, col_index.size());
      sparse.emplace_back(it->second, t.coeff);
    }
    rows.emplace_back();
    rows.back().assign(col_index.size(), Rational(0));
    for (auto& [j, c] : sparse) rows.back()[j] = c;
  }
  std::size_t ncols = col_index.size();
  for (auto& row : rows) row.resize(ncols, Rational(0));
  if (rows.empty()) return 0;
  return exact_rank(std::move(rows));
}

}  // namespace smc
