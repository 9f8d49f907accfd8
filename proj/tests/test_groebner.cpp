#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "smc/groebner.hpp"
#include "smc/parser.hpp"

using namespace smc;

namespace {

RingPtr xyz_ring() {
  static RingPtr r = PolyRing::create({{"x", 1}, {"y", 1}, {"z", 1}});
  return r;
}

Polynomial random_homogeneous(const RingPtr& ring, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring, degree)) {
    int c = coeff(rng);
    if (c != 0) terms.push_back({Rational(c), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("ideal validates generators") {
  RingPtr r = xyz_ring();
  CHECK_THROWS_AS(Ideal(r, {Polynomial::zero(r)}), std::invalid_argument);
  CHECK_THROWS_AS(Ideal(r, {parse_poly("x+x^2", r)}), std::invalid_argument);
  CHECK_NOTHROW(Ideal(r, {parse_poly("x^2+y*z", r)}));
}

TEST_CASE("reduced GB of a principal ideal") {
  RingPtr r = xyz_ring();
  GroebnerBasis gb = buchberger(Ideal(r, {parse_poly("3*x", r)}));
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == parse_poly("x", r));  // monic
}

TEST_CASE("Koszul elimination example n=2") {
  RingPtr r = PolyRing::create({{"s1", 1}, {"s2", 2}});
  GroebnerBasis gb = buchberger(Ideal(r, {parse_poly("-s1*s2", r), parse_poly("s2-s1^2", r)}));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == parse_poly("s2-s1^2", r));
  CHECK(gb.elements()[1] == parse_poly("s1^3", r));
}

TEST_CASE("normal form by substitution") {
  RingPtr r = PolyRing::create({{"s1", 1}, {"s2", 2}});
  GroebnerBasis gb = buchberger(Ideal(r, {parse_poly("s2-s1^2", r), parse_poly("s1*s2", r)}));
  for (const auto& g : gb.ideal().generators()) CHECK(normal_form(g, gb).is_zero());
  CHECK(normal_form(parse_poly("s2", r), gb) == parse_poly("s1^2", r));
  CHECK(normal_form(parse_poly("s1^3", r), gb).is_zero());
  Polynomial p = parse_poly("s2^2+s1*s2+s1", r);
  CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
}

TEST_CASE("d=1 n=2 quotient has dimensions 1,1,1,0") {
  RingPtr r = PolyRing::create({{"b2", 2}, {"r2", 1}});
  GroebnerBasis gb = buchberger(Ideal(r, {parse_poly("b2*r2", r), parse_poly("b2+r2^2", r)}));
  CHECK(standard_monomials(gb, 0).size() == 1);
  CHECK(standard_monomials(gb, 1).size() == 1);
  CHECK(standard_monomials(gb, 2).size() == 1);
  CHECK(standard_monomials(gb, 3).empty());
  CHECK(standard_monomials(gb, 4).empty());
}

TEST_CASE("ideal membership") {
  RingPtr r = PolyRing::create({{"b", 1}, {"q", 2}, {"r1", 1}, {"r2", 1}});
  Ideal base(r, {parse_poly("q*(r1+r2-4*b)", r)});
  CHECK(ideal_membership(Polynomial::zero(r), base));
  CHECK(ideal_membership(parse_poly("q*(r1+r2-4*b)", r), base));
  CHECK(ideal_membership(parse_poly("(b+r1)*q*(r1+r2-4*b)", r), base));
  CHECK_FALSE(ideal_membership(parse_poly("q*r1", r), base));
}

TEST_CASE("ideal equality") {
  RingPtr r = xyz_ring();
  CHECK(ideal_equal(Ideal(r, {parse_poly("x", r), parse_poly("y", r)}),
                    Ideal(r, {parse_poly("y", r), parse_poly("x", r)})));
  CHECK_FALSE(ideal_equal(Ideal(r, {parse_poly("x^2", r)}), Ideal(r, {parse_poly("x", r)})));
  RingPtr d1 = PolyRing::create({{"b2", 2}, {"r2", 1}});
  // truncated-inverse coefficients versus the recursion column
  CHECK(ideal_equal(Ideal(d1, {parse_poly("b2+r2^2", d1), parse_poly("-(r2^3+2*r2*b2)", d1)}),
                    Ideal(d1, {parse_poly("b2*r2", d1), parse_poly("b2+r2^2", d1)})));
}

TEST_CASE("standard monomials") {
  RingPtr gen = PolyRing::create(
      {{"b", 1}, {"sigma1", 1}, {"rho", 2}, {"sigma2", 2}, {"tau", 2}, {"sigma3", 3}});
  GroebnerBasis gb = buchberger(Ideal(
      gen, {parse_poly("tau^2-rho*sigma2", gen), parse_poly("tau*sigma3", gen),
            parse_poly("rho*sigma3", gen)}));
  CHECK(standard_monomials(gb, 0).size() == 1);
  CHECK(standard_monomials(gb, 2).size() == 6);  // b^2, b*sigma1, sigma1^2, rho, sigma2, tau
}

TEST_CASE("buchberger is deterministic under generator permutation") {
  RingPtr r = xyz_ring();
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> deg(1, 3), ngens(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
      Polynomial g = random_homogeneous(r, deg(rng), rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    GroebnerBasis gb1 = buchberger(Ideal(r, gens));
    std::shuffle(gens.begin(), gens.end(), rng);
    GroebnerBasis gb2 = buchberger(Ideal(r, gens));
    REQUIRE(gb_equal(gb1, gb2));
  }
}

TEST_CASE("graded dimensions agree with brute-force linear algebra") {
  RingPtr r = xyz_ring();
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> deg(1, 3), ngens(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
      Polynomial g = random_homogeneous(r, deg(rng), rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(Ideal(r, gens));
    for (int p = 0; p <= 5; ++p) {
      // span of {monomial * generator} in degree p
      std::vector<Monomial> basis = monomials_of_degree(r, p);
      std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
      for (std::size_t j = 0; j < basis.size(); ++j) col_of.emplace(basis[j], j);
      std::vector<std::vector<Rational>> rows;
      for (const auto& g : gens) {
        int gd = *g.weighted_degree();
        if (gd > p) continue;
        for (const auto& m : monomials_of_degree(r, p - gd)) {
          Polynomial prod = Polynomial::monomial(r, Rational(1), m) * g;
          std::vector<Rational> row(basis.size(), Rational(0));
          for (const auto& t : prod.terms()) row[col_of.at(t.mono)] = t.coeff;
          rows.push_back(std::move(row));
        }
      }
      int ideal_dim = rows.empty() ? 0 : exact_rank(std::move(rows));
      REQUIRE(standard_monomials(gb, p).size() == basis.size() - ideal_dim);
    }
  }
}

TEST_CASE("normal form of homogeneous input is homogeneous of the same degree") {
  RingPtr r = xyz_ring();
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> deg(1, 3);
  GroebnerBasis gb = buchberger(Ideal(
      r, {parse_poly("x^2-y*z", r), parse_poly("x*y+z^2", r)}));
  for (int trial = 0; trial < 100; ++trial) {
    int d = deg(rng) + 1;
    Polynomial p = random_homogeneous(r, d, rng);
    Polynomial nf = normal_form(p, gb);
    if (nf.is_zero()) continue;
    REQUIRE(nf.is_homogeneous());
    REQUIRE(*nf.weighted_degree() == d);
  }
}

TEST_CASE("exact rank and linear solve") {
  std::vector<std::vector<Rational>> m = {{Rational(1), Rational(2), Rational(3)},
                                          {Rational(2), Rational(4), Rational(6)},
                                          {Rational(1), Rational(0), Rational(1)}};
  CHECK(exact_rank(m) == 2);
  std::vector<Rational> x;
  REQUIRE(solve_linear({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}},
                       {Rational(5), Rational(5)}, x));
  CHECK(x[0] == Rational(2));
  CHECK(x[1] == Rational(1));
  CHECK_FALSE(solve_linear({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                           {Rational(0), Rational(1)}, x));
}

TEST_CASE("graded image rank examples") {
  RingPtr gen = PolyRing::create({{"b", 1}, {"t", 1}, {"k", 2}});
  RingPtr tr = PolyRing::create({{"b", 1}, {"q", 2}, {"r1", 1}, {"r2", 1}});
  RingMap phi(gen, tr,
              {parse_poly("b", tr), parse_poly("r1+r2-2*b", tr),
               parse_poly("4*q-(b-r1)*(b-r2)", tr)});
  GroebnerBasis tgb = buchberger(Ideal(tr, {parse_poly("q*(r1+r2-4*b)", tr)}));
  CHECK(graded_image_rank(phi, tgb, 0) == 1);
  CHECK(graded_image_rank(phi, tgb, 2) == 4);
}
