#pragma once

#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "smc/hilbert.hpp"
#include "smc/matrix.hpp"
#include "smc/parser.hpp"

namespace smc {

// ---- parameters ----------------------------------------------------------

// Dimension parameter of the target projective space: a positive integer or
// infinity. Infinity keeps only the base relations of a presentation.
struct TargetDim {
  bool infinite = false;
  int n = 0;

  static TargetDim inf() {
    TargetDim t;
    t.infinite = true;
    return t;
  }
  static TargetDim finite(int n) {
    if (n < 1) throw std::invalid_argument("TargetDim: n must be >= 1");
    TargetDim t;
    t.n = n;
    return t;
  }

  std::string to_string() const { return infinite ? "inf" : std::to_string(n); }
  friend bool operator==(const TargetDim&, const TargetDim&) = default;
};

inline void require_degree(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("degree d must be 1, 2 or 3");
}

// ---- rings ---------------------------------------------------------------

// Coordinate ring of the big cell for maps of degree d (the "T-ring"
// variables before imposing relations).
inline RingPtr t_poly_ring(int d) {
  require_degree(d);
  switch (d) {
    case 1: {
      static RingPtr r = PolyRing::create({{"b2", 2}, {"r2", 1}});
      return r;
    }
    case 2: {
      static RingPtr r = PolyRing::create({{"b", 1}, {"q", 2}, {"r1", 1}, {"r2", 1}});
      return r;
    }
    default: {
      static RingPtr r = PolyRing::create(
          {{"b", 1}, {"q1", 1}, {"q2", 1}, {"q3", 1}, {"l1", 1}, {"l2", 1}, {"l3", 1}});
      return r;
    }
  }
}

// Ring on the conjectured generators of the cohomology ring.
inline RingPtr generator_poly_ring(int d) {
  switch (d) {
    case 2: {
      static RingPtr r = PolyRing::create({{"b", 1}, {"t", 1}, {"k", 2}});
      return r;
    }
    case 3: {
      static RingPtr r = PolyRing::create(
          {{"b", 1}, {"sigma1", 1}, {"rho", 2}, {"sigma2", 2}, {"tau", 2}, {"sigma3", 3}});
      return r;
    }
    default:
      throw std::invalid_argument("generator ring: only d = 2 or 3");
  }
}

namespace detail {
inline Polynomial P(const RingPtr& ring, std::string_view text) { return parse_poly(text, ring); }
}  // namespace detail

// ---- recursion data ------------------------------------------------------

// The matrix E of the vector-field action on the relation column.
inline PolyMatrix matrix_E(int d) {
  require_degree(d);
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  switch (d) {
    case 1:
      return PolyMatrix::from_rows(r, {{P(r, "0"), P(r, "b2")},  //
                                       {P(r, "1"), P(r, "r2")}});
    case 2:
      return PolyMatrix::from_rows(r, {{P(r, "b"), P(r, "2*q"), P(r, "2*q")},
                                       {P(r, "1"), P(r, "r1-b"), P(r, "0")},
                                       {P(r, "1"), P(r, "0"), P(r, "r2-b")}});
    default:
      return PolyMatrix::from_rows(
          r, {{P(r, "b"), P(r, "q1*(q1-5*(q2+q3))"), P(r, "q2*(q2-5*(q1+q3))"),
               P(r, "q3*(q3-5*(q1+q2))")},
              {P(r, "1"), P(r, "l1+b+3*(q3-q2)"), P(r, "-q2"), P(r, "q3")},
              {P(r, "1"), P(r, "q1"), P(r, "l2+b+3*(q1-q3)"), P(r, "-q3")},
              {P(r, "1"), P(r, "-q1"), P(r, "q2"), P(r, "l3+b+3*(q2-q1)")}});
  }
}

// Seed column R_1 (r_1 for d=3).
inline PolyMatrix first_column(int d) {
  require_degree(d);
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  switch (d) {
    case 1:
      return PolyMatrix::column(r, {P(r, "0"), P(r, "1")});
    case 2:
      return PolyMatrix::column(r, {P(r, "b"), P(r, "1"), P(r, "1")});
    default:
      return PolyMatrix::column(r, {P(r, "b"), P(r, "1"), P(r, "1"), P(r, "1")});
  }
}

// Moving relation column R_{n+1} = E^n R_1.
inline PolyMatrix moving_relations(int d, int n) {
  if (n < 1) throw std::invalid_argument("moving_relations: n must be >= 1");
  return matrix_E(d).power(n) * first_column(d);
}

// Base relations of the T-ring (independent of n).
inline std::vector<Polynomial> base_relations(int d) {
  require_degree(d);
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  switch (d) {
    case 1:
      return {};
    case 2:
      return {P(r, "q*(r1+r2-4*b)")};
    default:
      return {P(r, "q1*l1"), P(r, "q2*l2"), P(r, "q3*l3")};
  }
}

// The T-ring presentation: base relations, plus the moving relations for
// finite n.
inline QuotientPresentation t_ring(int d, TargetDim dim) {
  require_degree(d);
  if (d == 1 && dim.infinite)
    throw std::invalid_argument("t_ring: d=1 has no stable limit presentation (n=inf rejected)");
  const RingPtr r = t_poly_ring(d);
  std::vector<Polynomial> gens = base_relations(d);
  if (!dim.infinite) {
    PolyMatrix col = moving_relations(d, dim.n);
    for (int i = 0; i < col.rows(); ++i) gens.push_back(col.at(i, 0));
  }
  return QuotientPresentation(r, Ideal(r, std::move(gens)),
                              "T-ring d=" + std::to_string(d) + " n=" + dim.to_string());
}

// Recursion matrix A over the generator ring.
inline PolyMatrix matrix_A(int d) {
  const RingPtr r = generator_poly_ring(d);  // rejects d=1
  using detail::P;
  if (d == 2)
    return PolyMatrix::from_rows(r, {{P(r, "b"), P(r, "0"), P(r, "0")},
                                     {P(r, "1"), P(r, "0"), P(r, "k")},
                                     {P(r, "0"), P(r, "1"), P(r, "t")}});
  return PolyMatrix::from_rows(
      r, {{P(r, "b+sigma1"), P(r, "0"), P(r, "9*rho+1/4*(sigma2-sigma1^2)+3*tau"), P(r, "0"),
           P(r, "sigma3")},
          {P(r, "0"), P(r, "b+1/2*sigma1"), P(r, "4*rho+1/2*tau"), P(r, "rho"),
           P(r, "-1/2*sigma1*rho")},
          {P(r, "1"), P(r, "0"), P(r, "b"), P(r, "0"), P(r, "0")},
          {P(r, "0"), P(r, "1"), P(r, "0"), P(r, "b"), P(r, "0")},
          {P(r, "0"), P(r, "0"), P(r, "1"), P(r, "1"), P(r, "b")}});
}

// Seed column G_1 over the generator ring.
inline PolyMatrix vector_G1(int d) {
  const RingPtr r = generator_poly_ring(d);
  using detail::P;
  if (d == 2) return PolyMatrix::column(r, {P(r, "b*(2*b-t)"), P(r, "2*b-t"), P(r, "2")});
  return PolyMatrix::column(r, {P(r, "b*sigma1+18*rho+1/2*(sigma2+sigma1^2)+6*tau"),
                                P(r, "9*rho+tau"), P(r, "2*b+sigma1"), P(r, "b"), P(r, "3")});
}

// n-independent relations of the conjectured presentation (d=3 only).
inline std::vector<Polynomial> fixed_relations(int d) {
  const RingPtr r = generator_poly_ring(d);
  using detail::P;
  if (d == 2) return {};
  return {P(r, "tau^2-rho*sigma2"), P(r, "tau*sigma3"), P(r, "rho*sigma3")};
}

// The conjectured presentation of the cohomology ring on the generator
// variables: fixed relations plus G_{n+1} = A^n G_1 for finite n.
inline QuotientPresentation conjecture_ring(int d, TargetDim dim) {
  const RingPtr r = generator_poly_ring(d);
  std::vector<Polynomial> gens = fixed_relations(d);
  if (!dim.infinite) {
    PolyMatrix col = matrix_A(d).power(dim.n) * vector_G1(d);
    for (int i = 0; i < col.rows(); ++i) gens.push_back(col.at(i, 0));
  }
  return QuotientPresentation(r, Ideal(r, std::move(gens)),
                              "generator presentation d=" + std::to_string(d) +
                                  " n=" + dim.to_string());
}

inline QuotientPresentation conjecture_ring(int d, int n) {
  return conjecture_ring(d, TargetDim::finite(n));
}

// The intertwiner matrix over the T-ring (AH = HE modulo base relations).
inline PolyMatrix matrix_H(int d) {
  generator_poly_ring(d);  // rejects d=1
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  if (d == 2)
    return PolyMatrix::from_rows(r, {{P(r, "4*b-r1-r2"), P(r, "0"), P(r, "0")},
                                     {P(r, "2"), P(r, "b-r2"), P(r, "b-r1")},
                                     {P(r, "0"), P(r, "1"), P(r, "1")}});
  PolyMatrix h(r, 5, 4);
  const Polynomial rho = P(r, "q1^2+q2^2+q3^2-2*(q1*q2+q1*q3+q2*q3)");
  const std::vector<Polynomial> theta = {P(r, "q3-q2"), P(r, "q1-q3"), P(r, "q2-q1")};
  const std::vector<Polynomial> lambda = {P(r, "l3-l2"), P(r, "l1-l3"), P(r, "l2-l1")};
  const Polynomial two = P(r, "2"), one = P(r, "1");
  h.at(0, 0) = P(r, "l1+l2+l3");
  h.at(2, 0) = two;
  h.at(3, 0) = one;
  for (int i = 1; i <= 3; ++i) {
    Polynomial li = Polynomial::variable(r, "l" + std::to_string(i));
    Polynomial qi = Polynomial::variable(r, "q" + std::to_string(i));
    const Polynomial& th = theta[static_cast<std::size_t>(i - 1)];
    const Polynomial& la = lambda[static_cast<std::size_t>(i - 1)];
    h.at(0, i) = Rational(6) * rho + li * li - qi * la + Rational(5) * li * th;
    h.at(1, i) = Rational(3) * rho + li * th;
    h.at(2, i) = li + Rational(2) * th;
    h.at(3, i) = th;
    h.at(4, i) = one;
  }
  return h;
}

// The identification of generator variables with T-ring classes.
inline RingMap generator_map(int d) {
  const RingPtr src = generator_poly_ring(d);
  const RingPtr dst = t_poly_ring(d);
  using detail::P;
  if (d == 2)
    return RingMap(src, dst, {P(dst, "b"), P(dst, "r1+r2-2*b"), P(dst, "4*q-(b-r1)*(b-r2)")});
  return RingMap(src, dst,
                 {P(dst, "b"), P(dst, "l1+l2+l3"),
                  P(dst, "q1^2+q2^2+q3^2-2*(q1*q2+q1*q3+q2*q3)"),
                  P(dst, "l1^2+l2^2+l3^2-2*(l1*l2+l1*l3+l2*l3)"),
                  P(dst, "l1*(q3-q2)+l2*(q1-q3)+l3*(q2-q1)"), P(dst, "l1*l2*l3")});
}

// ---- symmetry ------------------------------------------------------------

// Generators of the S_d action on the T-ring by signed variable
// permutations.
struct SymmetryAction {
  int d = 0;
  std::vector<RingMap> generators;
};

inline SymmetryAction symmetry_action(int d) {
  require_degree(d);
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  SymmetryAction act;
  act.d = d;
  if (d == 1) throw std::invalid_argument("symmetry_action: trivial for d=1");
  if (d == 2) {
    act.generators.push_back(
        RingMap(r, r, {P(r, "b"), P(r, "q"), P(r, "r2"), P(r, "r1")}));
    return act;
  }
  // transpositions (1 2) and (2 3); q_i -> sign * q_{sigma(i)}, l_i -> l_{sigma(i)}
  act.generators.push_back(RingMap(
      r, r, {P(r, "b"), P(r, "-q2"), P(r, "-q1"), P(r, "-q3"), P(r, "l2"), P(r, "l1"),
             P(r, "l3")}));
  act.generators.push_back(RingMap(
      r, r, {P(r, "b"), P(r, "-q1"), P(r, "-q3"), P(r, "-q2"), P(r, "l1"), P(r, "l3"),
             P(r, "l2")}));
  return act;
}

// Is the ideal mapped into itself by every generator of the action?
inline bool ideal_symmetric(const Ideal& ideal, const SymmetryAction& act) {
  GroebnerBasis gb = buchberger(ideal);
  for (const auto& m : act.generators)
    for (const auto& g : ideal.generators())
      if (!normal_form(m.apply(g), gb).is_zero()) return false;
  return true;
}

inline bool check_symmetry(int d, TargetDim dim) {
  return ideal_symmetric(t_ring(d, dim).relations, symmetry_action(d));
}

inline bool check_symmetry(int d, int n) { return check_symmetry(d, TargetDim::finite(n)); }

// ---- reports -------------------------------------------------------------

struct DegreeCheck {
  int degree = 0;
  Int expected{0};
  Int actual{0};
};

struct CheckReport {
  std::string check;
  bool ok = true;
  std::vector<DegreeCheck> per_degree;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
  void record_degree(int degree, Int expected, Int actual) {
    if (expected != actual) ok = false;
    per_degree.push_back({degree, std::move(expected), std::move(actual)});
  }
};

namespace detail {

inline PolyMatrix apply_entrywise(const RingMap& m, const PolyMatrix& a) {
  PolyMatrix out(m.target(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = m.apply(a.at(i, j));
  return out;
}

// Runs f(degree) for lo..hi, optionally on jobs concurrent threads, and
// returns results in degree order regardless of completion order.
template <typename F>
auto map_degrees(int lo, int hi, int jobs, F&& f) {
  using R = std::invoke_result_t<F, int>;
  std::vector<R> out;
  if (hi < lo) return out;
  if (jobs <= 1) {
    for (int p = lo; p <= hi; ++p) out.push_back(f(p));
    return out;
  }
  std::vector<std::future<R>> futures;
  for (int p = lo; p <= hi; ++p)
    futures.push_back(std::async(std::launch::async, [&f, p] { return f(p); }));
  for (auto& fut : futures) out.push_back(fut.get());
  return out;
}

}  // namespace detail

// ---- intertwiner ---------------------------------------------------------

// Verifies, modulo the base ideal: (i) phi(A)H = HE, (ii) H R_1 = phi(G_1),
// (iii) H R_{n+1} = phi(G_{n+1}). Takes H as a parameter so perturbed
// matrices can be used as negative controls.
inline CheckReport check_intertwiner_with(int d, int n, const PolyMatrix& h) {
  CheckReport rep{"intertwiner"};
  if (n < 1) throw std::invalid_argument("check_intertwiner: n must be >= 1");
  const RingPtr r = t_poly_ring(d);
  RingMap phi = generator_map(d);
  GroebnerBasis base_gb = buchberger(Ideal(r, base_relations(d)));
  auto check_matrix = [&](const PolyMatrix& lhs, const PolyMatrix& rhs, const char* what) {
    for (int i = 0; i < lhs.rows(); ++i)
      for (int j = 0; j < lhs.cols(); ++j) {
        Polynomial diff = normal_form(lhs.at(i, j) - rhs.at(i, j), base_gb);
        if (!diff.is_zero())
          rep.fail(std::string(what) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                   "): " + format_poly(diff));
      }
  };
  PolyMatrix phiA = detail::apply_entrywise(phi, matrix_A(d));
  check_matrix(phiA * h, h * matrix_E(d), "AH-HE");
  check_matrix(h * first_column(d), detail::apply_entrywise(phi, vector_G1(d)), "HR1-G1");
  PolyMatrix gn = matrix_A(d).power(n) * vector_G1(d);
  check_matrix(h * moving_relations(d, n), detail::apply_entrywise(phi, gn), "HRn-Gn");
  return rep;
}

inline CheckReport check_intertwiner(int d, int n) {
  return check_intertwiner_with(d, n, matrix_H(d));
}

// ---- Chern data ----------------------------------------------------------

// The action matrix M_m of the vector field on the rank-(dm+1) bundle E_m,
// in the basis (1, f_1..f_d, f_1^2..f_d^2, ..., f_1^m..f_d^m).
inline PolyMatrix chern_matrix(int d, int m) {
  require_degree(d);
  if (m < 1) throw std::invalid_argument("chern_matrix: m must be >= 1");
  const RingPtr r = t_poly_ring(d);
  const int size = d * m + 1;
  PolyMatrix M(r, size, size);
  auto idx = [d](int i, int mu) { return mu == 0 ? 0 : (mu - 1) * d + i; };
  auto C = [&](int k) { return Polynomial::constant(r, Rational(k)); };
  if (d == 1) {
    const Polynomial b2 = Polynomial::variable(r, "b2");
    const Polynomial r2 = Polynomial::variable(r, "r2");
    for (int mu = 0; mu <= m; ++mu) {
      if (mu >= 1) {
        M.at(mu - 1, mu) = Rational(mu) * b2;
        M.at(mu, mu) = Rational(mu) * r2;
      }
      if (mu < m) M.at(mu + 1, mu) = C(m - mu);
    }
    return M;
  }
  if (d == 2) {
    const Polynomial b = Polynomial::variable(r, "b");
    const Polynomial q = Polynomial::variable(r, "q");
    const Polynomial rr[2] = {Polynomial::variable(r, "r1"), Polynomial::variable(r, "r2")};
    M.at(0, 0) = Rational(m) * b;
    M.at(idx(1, 1), 0) = C(m);
    M.at(idx(2, 1), 0) = C(m);
    for (int i = 1; i <= 2; ++i)
      for (int mu = 1; mu <= m; ++mu) {
        const int c = idx(i, mu);
        M.at(idx(i, mu - 1), c) = Rational(mu + m) * q;
        M.at(c, c) = Rational(m - 2 * mu) * b + Rational(mu) * rr[i - 1];
        if (mu < m) M.at(idx(i, mu + 1), c) = C(m - mu);
      }
    return M;
  }
  // d == 3: coordinate images of the off-diagonal section pairings
  const Polynomial b = Polynomial::variable(r, "b");
  const Polynomial q1 = Polynomial::variable(r, "q1"), q2 = Polynomial::variable(r, "q2"),
                   q3 = Polynomial::variable(r, "q3");
  const Polynomial l[3] = {Polynomial::variable(r, "l1"), Polynomial::variable(r, "l2"),
                           Polynomial::variable(r, "l3")};
  const Polynomial zero = Polynomial::zero(r);
  // eta[i][j], 1-based: eta_12=q1, eta_13=-q1, eta_21=-q2, eta_23=q2,
  // eta_31=q3, eta_32=-q3
  auto eta = [&](int i, int j) -> Polynomial {
    if (i == 1) return j == 2 ? q1 : -q1;
    if (i == 2) return j == 1 ? -q2 : q2;
    return j == 1 ? q3 : -q3;
  };
  auto theta = [&](int i, int mu) {  // theta_i^{(mu)} = sum_{j != i} eta_ij^{mu-1} eta_ji
    Polynomial s = zero;
    for (int j = 1; j <= 3; ++j)
      if (j != i) s = s + eta(i, j).pow(mu - 1) * eta(j, i);
    return s;
  };
  auto eta2 = [&](int i) {  // eta_i^{(2)} = q_i^2
    const Polynomial& qi = i == 1 ? q1 : (i == 2 ? q2 : q3);
    return qi * qi;
  };
  M.at(0, 0) = Rational(m) * b;
  for (int i = 1; i <= 3; ++i) M.at(idx(i, 1), 0) = C(m);
  for (int i = 1; i <= 3; ++i) {
    const Polynomial& li = l[i - 1];
    for (int mu = 1; mu <= m; ++mu) {
      const int c = idx(i, mu);
      if (mu == 1) {
        M.at(0, c) = Rational(3 * m + 2) * theta(i, 2) + eta2(i);
        for (int j = 1; j <= 3; ++j)
          if (j != i) M.at(idx(j, 1), c) = Rational(m) * eta(i, j);
        M.at(c, c) = li + Rational(m) * b + Rational(m + 2) * theta(i, 1);
      } else {
        M.at(0, c) = Rational(3 * m) * theta(i, mu + 1);
        for (int j = 1; j <= 3; ++j)
          if (j != i) M.at(idx(j, 1), c) = Rational(m) * eta(i, j).pow(mu);
        for (int alpha = 1; alpha <= mu - 2; ++alpha)
          M.at(idx(i, alpha), c) = Rational(4 * m) * theta(i, mu - alpha + 1);
        M.at(idx(i, mu - 1), c) =
            M.at(idx(i, mu - 1), c) + Rational(2 * mu + 4 * m) * theta(i, 2) +
            Rational(mu) * eta2(i);
        M.at(c, c) = Rational(mu) * li + Rational(m) * b + Rational(m + 2 * mu) * theta(i, 1);
      }
      if (mu < m) M.at(idx(i, mu + 1), c) = C(m - mu);
    }
  }
  return M;
}

namespace detail {

inline void reduce_entries(PolyMatrix& m, const GroebnerBasis& gb) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = normal_form(m.at(i, j), gb);
}

}  // namespace detail

// p-th Chern class of E_m: the elementary symmetric function of the
// spectrum of M_m (via Newton's identities on reduced power traces),
// in normal form modulo the base ideal (n = inf) or the full T-ring ideal
// (finite n).
inline Polynomial chern_class(int d, int m, int p, TargetDim dim = TargetDim::inf()) {
  require_degree(d);
  if (m < 1) throw std::invalid_argument("chern_class: m must be >= 1");
  if (p < 1 || p > d * m + 1)
    throw std::invalid_argument("chern_class: p out of range 1.." + std::to_string(d * m + 1));
  const RingPtr r = t_poly_ring(d);
  GroebnerBasis gb = (d == 1 && dim.infinite)
                         ? buchberger(Ideal(r, {}))
                         : buchberger(dim.infinite ? Ideal(r, base_relations(d))
                                                   : t_ring(d, dim).relations);
  const PolyMatrix M = chern_matrix(d, m);
  std::vector<Polynomial> psum(static_cast<std::size_t>(p) + 1, Polynomial::zero(r));
  PolyMatrix Mk = M;
  detail::reduce_entries(Mk, gb);
  psum[1] = normal_form(Mk.trace(), gb);
  for (int j = 2; j <= p; ++j) {
    Mk = Mk * M;
    detail::reduce_entries(Mk, gb);
    psum[static_cast<std::size_t>(j)] = Mk.trace();
  }
  std::vector<Polynomial> esym(static_cast<std::size_t>(p) + 1, Polynomial::zero(r));
  esym[0] = Polynomial::constant(r, 1);
  for (int k = 1; k <= p; ++k) {
    Polynomial acc = Polynomial::zero(r);
    for (int j = 1; j <= k; ++j) {
      Polynomial term = esym[static_cast<std::size_t>(k - j)] * psum[static_cast<std::size_t>(j)];
      acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    esym[static_cast<std::size_t>(k)] = normal_form(Rational(1, k) * acc, gb);
  }
  return esym[static_cast<std::size_t>(p)];
}

// Closed formulas for c_1 and tr M_m^2 / c_2 in T-ring variables.
inline Polynomial chern_closed_formula(int d, int m, int p) {
  require_degree(d);
  if (m < 1 || p < 1 || p > 2)
    throw std::invalid_argument("chern_closed_formula: need m >= 1 and p in {1,2}");
  const RingPtr r = t_poly_ring(d);
  using detail::P;
  const Rational mm(m);
  if (d == 1) {
    if (p == 1) return Rational(m * (m + 1), 2) * P(r, "r2");
    if (m != 1)
      throw std::invalid_argument("chern_closed_formula: d=1 c2 is only stated for m=1");
    return P(r, "-b2");
  }
  if (d == 2) {
    Polynomial c1 = Rational(-m) * P(r, "b") + Rational(m * (m + 1), 2) * P(r, "r1+r2");
    if (p == 1) return c1;
    // tr M^2 with the b^2 coefficient corrected to (1/3)m(2m^2+3m+4)
    Polynomial tr2 = Rational(m * (2 * m * m + 3 * m + 4), 3) * P(r, "b^2") -
                     Rational(m * (m + 1) * (m + 2), 3) * P(r, "b*(r1+r2)") +
                     Rational(m * (m + 1) * (2 * m + 1), 6) * P(r, "8*q+r1^2+r2^2");
    return Rational(1, 2) * (c1 * c1 - tr2);
  }
  Polynomial c1 =
      Rational(m * (3 * m + 1)) * P(r, "b") + Rational(m * (m + 1), 2) * P(r, "l1+l2+l3");
  if (p == 1) return c1;
  Polynomial tr2 = Rational(m * m * (3 * m + 1)) * P(r, "b^2") +
                   Rational(m * m * (m + 1)) * P(r, "b*(l1+l2+l3)") +
                   Rational(m * (m + 1) * (2 * m + 1), 6) * P(r, "l1^2+l2^2+l3^2") +
                   Rational(m * (3 * m + 1) * (3 * m + 2)) *
                       P(r, "q1^2+q2^2+q3^2-2*(q1*q2+q1*q3+q2*q3)") +
                   Rational(m * (m + 1) * (7 * m + 2), 3) *
                       P(r, "l1*(q3-q2)+l2*(q1-q3)+l3*(q2-q1)");
  return Rational(1, 2) * (c1 * c1 - tr2);
}

// The same classes expressed on the conjectured generators (d = 2, 3).
inline Polynomial chern_generator_formula(int d, int m, int p) {
  const RingPtr r = generator_poly_ring(d);
  if (m < 1 || p < 1 || p > 2)
    throw std::invalid_argument("chern_generator_formula: need m >= 1 and p in {1,2}");
  using detail::P;
  if (d == 2) {
    Polynomial c1 = Rational(m * m) * P(r, "b") + Rational(m * (m + 1), 2) * P(r, "t");
    if (p == 1) return c1;
    Polynomial tr2 = Rational(m * (2 * m * m + 3 * m + 4), 3) * P(r, "b^2") -
                     Rational(m * (m + 1) * (m + 2), 3) * P(r, "b*(t+2*b)") +
                     Rational(m * (m + 1) * (2 * m + 1), 6) *
                         P(r, "2*b^2+2*b*t+t^2+2*k");
    return Rational(1, 2) * (c1 * c1 - tr2);
  }
  if (p == 1)
    return Rational(m * (3 * m + 1)) * P(r, "b") + Rational(m * (m + 1), 2) * P(r, "sigma1");
  return Rational(3 * m * m * m * (3 * m + 1), 2) * P(r, "b^2") +
         Rational(3 * m * m * m * (m + 1), 2) * P(r, "b*sigma1") +
         Rational(m * (m + 1) * (3 * m * m + m - 1), 24) * P(r, "sigma1^2") -
         Rational(m * (3 * m + 1) * (3 * m + 2), 2) * P(r, "rho") -
         Rational(m * (m + 1) * (2 * m + 1), 24) * P(r, "sigma2") -
         Rational(m * (m + 1) * (7 * m + 2), 6) * P(r, "tau");
}

// Verifies that the generator-ring expression maps onto chern_class(d,m,p)
// modulo the base ideal.
inline CheckReport chern_in_generators(int d, int m, int p) {
  CheckReport rep{"chern-in-generators"};
  RingMap phi = generator_map(d);
  Polynomial mapped = phi.apply(chern_generator_formula(d, m, p));
  Polynomial cls = chern_class(d, m, p);
  GroebnerBasis base_gb = buchberger(Ideal(t_poly_ring(d), base_relations(d)));
  Polynomial diff = normal_form(mapped - cls, base_gb);
  if (!diff.is_zero())
    rep.fail("d=" + std::to_string(d) + " m=" + std::to_string(m) + " p=" + std::to_string(p) +
             " difference: " + format_poly(diff));
  return rep;
}

// ---- reference series ----------------------------------------------------

// Closed-form Hilbert series the computations are compared against.
inline HilbertSeries reference_series(int d, TargetDim dim) {
  require_degree(d);
  using namespace tpoly;
  auto binom_factor = [](int k) { return one_minus_tw(k); };
  if (d == 3) {
    if (dim.infinite) return HilbertSeries({1, 1, 2, 2, 2}, {1, 2, 2, 3});
    const int n = dim.n;
    TPoly num = add(sub(shift({2, 2, 2, 1, 1}, 2 * n + 3), shift({1, 3, 4, 4, 3, 1}, n + 1)),
                    {1, 1, 2, 2, 2});
    num = mul(num, mul(binom_factor(n), binom_factor(n + 1)));
    return HilbertSeries(std::move(num), {1, 2, 2, 3});
  }
  if (d == 2) {
    if (dim.infinite) return HilbertSeries({1}, {1, 1, 2});
    const int n = dim.n;
    TPoly num = mul(binom_factor(n), mul(binom_factor(n + 1), binom_factor(n + 2)));
    return HilbertSeries(std::move(num), {1, 1, 2});
  }
  if (dim.infinite) throw std::invalid_argument("reference_series: d=1 requires finite n");
  const int n = dim.n;
  return HilbertSeries(mul(binom_factor(n), binom_factor(n + 1)), {1, 2});
}

inline HilbertSeries reference_series(int d, int n) {
  return reference_series(d, TargetDim::finite(n));
}

// ---- verification suites -------------------------------------------------

struct ConjectureD3Report {
  bool series_ok = false;
  bool image_dims_ok = false;
  CheckReport detail{"conjecture-d3"};
  bool ok() const { return series_ok && image_dims_ok; }
};

// Reproduces the computational evidence for the d=3 conjecture at finite n:
// the Hilbert series of the generator presentation matches the reference,
// and the graded image of the generator map has the same dimensions through
// degree n+2.
inline ConjectureD3Report verify_conjecture_d3(int n, int jobs = 1) {
  if (n < 1) throw std::invalid_argument("verify_conjecture_d3: n must be >= 1");
  ConjectureD3Report rep;
  HilbertSeries ref = reference_series(3, n);
  rep.series_ok = hilbert_series(conjecture_ring(3, n)) == ref;
  if (!rep.series_ok) rep.detail.fail("Hilbert series of the presentation differs from reference");

  GroebnerBasis tgb = buchberger(t_ring(3, TargetDim::finite(n)).relations);
  RingMap phi = generator_map(3);
  std::vector<Int> expected = ref.coefficients(n + 2);
  std::vector<int> ranks = detail::map_degrees(
      0, n + 2, jobs, [&](int p) { return graded_image_rank(phi, tgb, p); });
  rep.image_dims_ok = true;
  for (int p = 0; p <= n + 2; ++p) {
    rep.detail.record_degree(p, expected[static_cast<std::size_t>(p)],
                             Int(ranks[static_cast<std::size_t>(p)]));
    if (expected[static_cast<std::size_t>(p)] != ranks[static_cast<std::size_t>(p)])
      rep.image_dims_ok = false;
  }
  rep.detail.ok = rep.ok();
  return rep;
}

// Degreewise injectivity of the generator map into the T-ring quotient:
// in each degree the image rank must equal the graded dimension of the
// source presentation.
inline CheckReport graded_injectivity(int d, TargetDim dim, int max_degree, int jobs = 1) {
  CheckReport rep{"injectivity"};
  if (max_degree < 0) throw std::invalid_argument("graded_injectivity: negative degree");
  QuotientPresentation source = conjecture_ring(d, dim);
  std::vector<Int> source_dims = hilbert_series(source).coefficients(max_degree);
  GroebnerBasis tgb = buchberger(t_ring(d, dim).relations);
  RingMap phi = generator_map(d);
  std::vector<int> ranks = detail::map_degrees(
      0, max_degree, jobs, [&](int p) { return graded_image_rank(phi, tgb, p); });
  for (int p = 0; p <= max_degree; ++p)
    rep.record_degree(p, source_dims[static_cast<std::size_t>(p)],
                      Int(ranks[static_cast<std::size_t>(p)]));
  return rep;
}

// ---- d=2 invariants ------------------------------------------------------

inline RingPtr invariant_poly_ring_d2() {
  static RingPtr r = PolyRing::create({{"b", 1}, {"t", 1}, {"k", 2}, {"q", 2}});
  return r;
}

// b,t,k as for the generator map, plus the invariant class q itself.
inline RingMap invariant_map_d2() {
  const RingPtr src = invariant_poly_ring_d2();
  const RingPtr dst = t_poly_ring(2);
  using detail::P;
  return RingMap(src, dst,
                 {P(dst, "b"), P(dst, "r1+r2-2*b"), P(dst, "4*q-(b-r1)*(b-r2)"), P(dst, "q")});
}

namespace detail {

// Writes target as a linear combination of the psi-images of the source
// monomials of its degree; empty optional if no preimage exists.
inline std::optional<Polynomial> linear_preimage(const RingMap& psi, const Polynomial& target) {
  if (target.is_zero()) return Polynomial::zero(psi.source());
  if (!target.is_homogeneous())
    throw std::invalid_argument("linear_preimage: target must be homogeneous");
  int degree = *target.weighted_degree();
  std::vector<Monomial> monos = monomials_of_degree(psi.source(), degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  std::vector<std::vector<Rational>> cols;
  for (const auto& mu : monos) {
    Polynomial img = psi.apply(Polynomial::monomial(psi.source(), Rational(1), mu));
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (const auto& t : img.terms()) {
      auto [it, inserted] = row_of.try_emplace(t.mono, row_of.size());
      sparse.emplace_back(it->second, t.coeff);
    }
    cols.emplace_back();
    for (auto& [i, c] : sparse) {
      if (cols.back().size() <= i) cols.back().resize(i + 1, Rational(0));
      cols.back()[i] = c;
    }
  }
  for (const auto& t : target.terms()) row_of.try_emplace(t.mono, row_of.size());
  std::size_t nrows = row_of.size();
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(monos.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) a[i][j] = cols[j][i];
  std::vector<Rational> b(nrows, Rational(0));
  for (const auto& t : target.terms()) b[row_of.at(t.mono)] = t.coeff;
  std::vector<Rational> x;
  if (!solve_linear(std::move(a), std::move(b), x)) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t j = 0; j < monos.size(); ++j)
    if (x[j] != 0) terms.push_back({x[j], monos[j]});
  return Polynomial::from_terms(psi.source(), std::move(terms));
}

}  // namespace detail

// Verifies the stated presentation of the S_2-invariant subring of the d=2
// T-ring quotient: generator images are swap-fixed, the stated relations map
// into the T-ring ideal, and graded dimensions match the Reynolds-projected
// fixed subspace through max_degree.
inline CheckReport invariant_check_d2(int n, int max_degree, int jobs = 1) {
  CheckReport rep{"invariants-d2"};
  if (n < 1) throw std::invalid_argument("invariant_check_d2: n must be >= 1");
  const RingPtr inv = invariant_poly_ring_d2();
  const RingMap psi = invariant_map_d2();
  const RingMap swap = symmetry_action(2).generators.front();
  using detail::P;

  for (int i = 0; i < inv->nvars(); ++i)
    if (!(swap.apply(psi.image(i)) == psi.image(i)))
      rep.fail("image of '" + inv->var(i).name + "' is not swap-invariant");

  QuotientPresentation tring = t_ring(2, TargetDim::finite(n));
  GroebnerBasis tgb = buchberger(tring.relations);

  // invariant relations: q(2b-t), the preimage of the first moving relation,
  // and the last two components of G_{n+1}
  std::vector<Polynomial> relations = {P(inv, "q*(2*b-t)")};
  Polynomial x_comp = moving_relations(2, n).at(0, 0);
  std::optional<Polynomial> x_rel = detail::linear_preimage(psi, x_comp);
  if (!x_rel) {
    rep.fail("first component of R_{n+1} has no preimage in the invariant ring");
    return rep;
  }
  relations.push_back(*x_rel);
  RingMap embed(generator_poly_ring(2), inv, {P(inv, "b"), P(inv, "t"), P(inv, "k")});
  PolyMatrix gn = matrix_A(2).power(n) * vector_G1(2);
  relations.push_back(embed.apply(gn.at(1, 0)));
  relations.push_back(embed.apply(gn.at(2, 0)));

  for (const auto& rel : relations)
    if (!normal_form(psi.apply(rel), tgb).is_zero())
      rep.fail("relation image not in T-ring ideal: " + format_poly(rel));

  GroebnerBasis igb = buchberger(Ideal(inv, relations));
  std::vector<int> fixed_dims = detail::map_degrees(0, max_degree, jobs, [&](int p) {
    std::vector<Monomial> basis = standard_monomials(tgb, p);
    std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
    for (std::size_t j = 0; j < basis.size(); ++j) col_of.emplace(basis[j], j);
    std::vector<std::vector<Rational>> rows;
    for (const auto& s : basis) {
      Polynomial sp = Polynomial::monomial(tring.ring, Rational(1), s);
      Polynomial proj = normal_form(Rational(1, 2) * (sp + swap.apply(sp)), tgb);
      std::vector<Rational> row(basis.size(), Rational(0));
      for (const auto& t : proj.terms()) row[col_of.at(t.mono)] = t.coeff;
      rows.push_back(std::move(row));
    }
    return rows.empty() ? 0 : exact_rank(std::move(rows));
  });
  for (int p = 0; p <= max_degree; ++p)
    rep.record_degree(p, Int(standard_monomials(igb, p).size()),
                      Int(fixed_dims[static_cast<std::size_t>(p)]));
  return rep;
}

// ---- d=1 Whitney check ---------------------------------------------------

// The moving relations for d=1 are equivalent to the degree-n and -(n+1)
// coefficients of the inverse of the total Chern class 1 + r2 t - b2 t^2.
inline bool whitney_check_d1(int n) {
  if (n < 1) throw std::invalid_argument("whitney_check_d1: n must be >= 1");
  const RingPtr r = t_poly_ring(1);
  using detail::P;
  std::vector<Polynomial> a = {P(r, "1"), P(r, "-r2")};
  for (int k = 2; k <= n + 1; ++k)
    a.push_back(-Polynomial::variable(r, "r2") * a[static_cast<std::size_t>(k - 1)] +
                Polynomial::variable(r, "b2") * a[static_cast<std::size_t>(k - 2)]);
  Ideal from_whitney(r, {a[static_cast<std::size_t>(n)], a[static_cast<std::size_t>(n + 1)]});
  PolyMatrix col = moving_relations(1, n);
  Ideal from_recursion(r, {col.at(0, 0), col.at(1, 0)});
  return ideal_equal(from_whitney, from_recursion);
}

// ---- projective-space smoke test -----------------------------------------

// The Koszul presentation of H^*(P^n): variables s_1..s_n with weight(s_k)=k
// and relations (-s_1 s_n, s_2 - s_1^2, ..., s_n - s_1 s_{n-1}); the
// quotient is C[s_1]/(s_1^{n+1}).
inline QuotientPresentation pn_koszul(int n) {
  if (n < 1 || n > PolyRing::kMaxVars)
    throw std::invalid_argument("pn_koszul: n out of range");
  std::vector<VariableSpec> vars;
  for (int k = 1; k <= n; ++k) vars.push_back({"s" + std::to_string(k), k});
  RingPtr r = PolyRing::create(std::move(vars));
  auto s = [&](int k) { return Polynomial::variable(r, "s" + std::to_string(k)); };
  std::vector<Polynomial> gens = {-(s(1) * s(n))};
  for (int k = 2; k <= n; ++k) gens.push_back(s(k) - s(1) * s(k - 1));
  return QuotientPresentation(r, Ideal(r, std::move(gens)),
                              "P^" + std::to_string(n) + " Koszul presentation");
}

inline bool pn_koszul_check(int n) {
  tpoly::TPoly num(static_cast<std::size_t>(n) + 2, Int(0));
  num[0] = 1;
  num[static_cast<std::size_t>(n) + 1] = -1;
  return hilbert_series(pn_koszul(n)) == HilbertSeries(std::move(num), {1});
}

}  // namespace smc
