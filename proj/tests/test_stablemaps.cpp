#include <catch2/catch_amalgamated.hpp>

#include "smc/stablemaps.hpp"

using namespace smc;

namespace {

Polynomial tp(int d, std::string_view text) { return parse_poly(text, t_poly_ring(d)); }
Polynomial gp(int d, std::string_view text) { return parse_poly(text, generator_poly_ring(d)); }

std::vector<Int> ints(std::initializer_list<int> v) {
  std::vector<Int> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

std::multiset<int> degree_multiset(const PolyMatrix& col) {
  std::multiset<int> out;
  for (int i = 0; i < col.rows(); ++i) {
    REQUIRE(col.at(i, 0).is_homogeneous());
    out.insert(*col.at(i, 0).weighted_degree());
  }
  return out;
}

}  // namespace

TEST_CASE("matrix E and seed columns") {
  PolyMatrix e1 = matrix_E(1);
  CHECK(e1.at(0, 0).is_zero());
  CHECK(e1.at(0, 1) == tp(1, "b2"));
  CHECK(e1.at(1, 1) == tp(1, "r2"));
  PolyMatrix e2 = matrix_E(2);
  CHECK(e2.at(0, 1) == tp(2, "2*q"));
  CHECK(e2.at(2, 2) == tp(2, "r2-b"));
  PolyMatrix e3 = matrix_E(3);
  CHECK(e3.at(1, 2) == tp(3, "-q2"));  // row 2, column 3 in 1-based terms
  CHECK(e3.at(0, 1) == tp(3, "q1*(q1-5*(q2+q3))"));
  CHECK(first_column(3).at(0, 0) == tp(3, "b"));
}

TEST_CASE("moving relations") {
  PolyMatrix r2 = moving_relations(2, 1);
  CHECK(r2.at(0, 0) == tp(2, "b^2+4*q"));
  CHECK(r2.at(1, 0) == tp(2, "r1"));
  CHECK(r2.at(2, 0) == tp(2, "r2"));
  PolyMatrix r1 = moving_relations(1, 2);
  CHECK(r1.at(0, 0) == tp(1, "b2*r2"));
  CHECK(r1.at(1, 0) == tp(1, "b2+r2^2"));
  PolyMatrix r3 = moving_relations(3, 1);
  CHECK(*r3.at(0, 0).weighted_degree() == 2);
  for (int i = 1; i < 4; ++i) CHECK(*r3.at(i, 0).weighted_degree() == 1);
  CHECK_THROWS_AS(moving_relations(2, 0), std::invalid_argument);
}

TEST_CASE("degree multisets of the recursion columns") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(degree_multiset(moving_relations(1, n)) == std::multiset<int>({n, n + 1}));
    CHECK(degree_multiset(moving_relations(2, n)) == std::multiset<int>({n, n, n + 1}));
    CHECK(degree_multiset(moving_relations(3, n)) == std::multiset<int>({n, n, n, n + 1}));
    CHECK(degree_multiset(matrix_A(2).power(n) * vector_G1(2)) ==
          std::multiset<int>({n, n + 1, n + 2}));
    CHECK(degree_multiset(matrix_A(3).power(n) * vector_G1(3)) ==
          std::multiset<int>({n, n + 1, n + 1, n + 2, n + 2}));
  }
}

TEST_CASE("t-ring presentations") {
  QuotientPresentation inf3 = t_ring(3, TargetDim::inf());
  REQUIRE(inf3.relations.generators().size() == 3);
  CHECK(inf3.relations.generators()[0] == tp(3, "q1*l1"));
  CHECK_THROWS_AS(t_ring(1, TargetDim::inf()), std::invalid_argument);

  HilbertSeries h21 = hilbert_series(t_ring(2, TargetDim::finite(1)));
  CHECK(h21.coefficients(4) == ints({1, 1, 1, 0, 0}));

  GroebnerBasis g11 = buchberger(t_ring(1, TargetDim::finite(1)).relations);
  CHECK(standard_monomials(g11, 0).size() == 1);
  for (int p = 1; p <= 4; ++p) CHECK(standard_monomials(g11, p).empty());
}

TEST_CASE("stabilization of t-ring dimensions towards n=inf") {
  for (int d = 2; d <= 3; ++d) {
    std::vector<Int> inf_dims =
        hilbert_series(t_ring(d, TargetDim::inf())).coefficients(5);
    for (int n = 2; n <= 6; ++n) {
      std::vector<Int> fin =
          hilbert_series(t_ring(d, TargetDim::finite(n))).coefficients(std::min(5, n - 1));
      for (int p = 0; p < n && p <= 5; ++p)
        REQUIRE(fin[static_cast<std::size_t>(p)] == inf_dims[static_cast<std::size_t>(p)]);
    }
  }
}

TEST_CASE("conjecture data A and G1") {
  CHECK(matrix_A(2).at(1, 2) == gp(2, "k"));
  CHECK(matrix_A(3).at(0, 2) == gp(3, "9*rho+1/4*(sigma2-sigma1^2)+3*tau"));
  CHECK(vector_G1(3).at(4, 0) == gp(3, "3"));
  CHECK(degree_multiset(vector_G1(3)) == std::multiset<int>({0, 1, 1, 2, 2}));
  CHECK_THROWS_AS(matrix_A(1), std::invalid_argument);
}

TEST_CASE("conjecture ring presentations") {
  QuotientPresentation c21 = conjecture_ring(2, 1);
  REQUIRE(c21.relations.generators().size() == 3);
  CHECK(c21.relations.generators()[0] == gp(2, "b^2*(2*b-t)"));
  CHECK(c21.relations.generators()[1] == gp(2, "2*b^2-b*t+2*k"));
  CHECK(c21.relations.generators()[2] == gp(2, "2*b+t"));
  CHECK(hilbert_series(c21).coefficients(3) == ints({1, 1, 1, 0}));
  QuotientPresentation cinf = conjecture_ring(3, TargetDim::inf());
  CHECK(cinf.relations.generators().size() == 3);
}

TEST_CASE("intertwiner matrix entries") {
  CHECK(matrix_H(2).at(0, 0) == tp(2, "4*b-r1-r2"));
  PolyMatrix h3 = matrix_H(3);
  CHECK(h3.at(4, 1) == tp(3, "1"));
  CHECK(h3.at(1, 1) ==
        tp(3, "3*(q1^2+q2^2+q3^2-2*(q1*q2+q1*q3+q2*q3))+l1*(q3-q2)"));
  CHECK_THROWS_AS(matrix_H(1), std::invalid_argument);
}

TEST_CASE("generator map") {
  RingMap phi3 = generator_map(3);
  CHECK(phi3.apply(gp(3, "sigma3")) == tp(3, "l1*l2*l3"));
  Ideal base(t_poly_ring(3), base_relations(3));
  for (const auto& rel : fixed_relations(3)) CHECK(ideal_membership(phi3.apply(rel), base));
  CHECK(generator_map(2).apply(gp(2, "b")) == tp(2, "b"));
  CHECK_THROWS_AS(generator_map(1), std::invalid_argument);
}

TEST_CASE("intertwiner congruences hold") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(check_intertwiner(2, n).ok);
    CHECK(check_intertwiner(3, n).ok);
  }
}

TEST_CASE("perturbed intertwiner is rejected with a witness") {
  PolyMatrix h = matrix_H(2);
  h.at(1, 0) = -h.at(1, 0);  // flip one sign
  CheckReport rep = check_intertwiner_with(2, 1, h);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("symmetry of the relation ideals") {
  CHECK(check_symmetry(3, 2));
  CHECK(check_symmetry(2, 3));
  CHECK(check_symmetry(3, TargetDim::inf()));
  // negative control: q1*l2 in place of q1*l1
  RingPtr r = t_poly_ring(3);
  Ideal bad(r, {tp(3, "q1*l2"), tp(3, "q2*l2"), tp(3, "q3*l3")});
  CHECK_FALSE(ideal_symmetric(bad, symmetry_action(3)));
}

TEST_CASE("d=2 invariant subring") {
  CheckReport rep = invariant_check_d2(1, 4);
  CHECK(rep.ok);
  // q(2b-t) maps to -q(r1+r2-4b)
  RingMap psi = invariant_map_d2();
  Polynomial img = psi.apply(parse_poly("q*(2*b-t)", invariant_poly_ring_d2()));
  CHECK(img == tp(2, "-q*(r1+r2-4*b)"));
}

TEST_CASE("d=1 Whitney equivalence") {
  for (int n = 1; n <= 4; ++n) CHECK(whitney_check_d1(n));
}

TEST_CASE("reference series") {
  CHECK(reference_series(2, 1).to_string() == "1 + t + t^2");
  CHECK(reference_series(3, TargetDim::inf()).numerator() ==
        tpoly::TPoly({Int(1), Int(1), Int(2), Int(2), Int(2)}));
  CHECK(reference_series(1, 1).to_string() == "1");
  CHECK(reference_series(3, 1).coefficients(4) == ints({1, 1, 2, 1, 1}));
  CHECK(reference_series(3, 2).coefficients(7) == ints({1, 2, 5, 7, 9, 7, 5, 2}));
  CHECK(reference_series(3, 3).coefficients(8) == ints({1, 2, 6, 10, 17, 20, 24, 20, 17}));
  CHECK(reference_series(2, TargetDim::inf()).coefficients(6) ==
        ints({1, 2, 4, 6, 9, 12, 16}));
  CHECK_THROWS_AS(reference_series(1, TargetDim::inf()), std::invalid_argument);
}

TEST_CASE("projective space Koszul presentations") {
  for (int n : {1, 3, 5}) {
    CHECK(pn_koszul_check(n));
    std::vector<Int> dims = hilbert_series(pn_koszul(n)).coefficients(n + 2);
    for (int p = 0; p <= n; ++p) CHECK(dims[static_cast<std::size_t>(p)] == 1);
    CHECK(dims[static_cast<std::size_t>(n) + 1] == 0);
  }
}

TEST_CASE("chern matrices") {
  CHECK(chern_matrix(1, 1) == matrix_E(1));
  CHECK(chern_matrix(2, 1) == matrix_E(2));
  GroebnerBasis base3 = buchberger(Ideal(t_poly_ring(3), base_relations(3)));
  CHECK(normal_form(chern_matrix(3, 1).trace() - tp(3, "4*b+l1+l2+l3"), base3).is_zero());
  // columns represent a degree-1 operator: entry (r,c) homogeneous of basis
  // degree difference + 1
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= 2; ++m) {
      PolyMatrix M = chern_matrix(d, m);
      auto basis_degree = [&](int i) { return i == 0 ? 0 : (i - 1) / d + 1; };
      for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
          if (M.at(i, j).is_zero()) continue;
          REQUIRE(M.at(i, j).is_homogeneous());
          REQUIRE(*M.at(i, j).weighted_degree() == basis_degree(j) + 1 - basis_degree(i));
        }
    }
}

TEST_CASE("chern classes match the printed formulas at small m") {
  CHECK(chern_class(1, 1, 1) == tp(1, "r2"));
  CHECK(chern_class(1, 1, 2) == tp(1, "-b2"));
  GroebnerBasis base3 = buchberger(Ideal(t_poly_ring(3), base_relations(3)));
  CHECK(normal_form(chern_class(3, 1, 1) - tp(3, "4*b+l1+l2+l3"), base3).is_zero());
  for (int d = 2; d <= 3; ++d) {
    GroebnerBasis base = buchberger(Ideal(t_poly_ring(d), base_relations(d)));
    for (int m = 1; m <= 2; ++m)
      for (int p = 1; p <= 2; ++p)
        CHECK(normal_form(chern_class(d, m, p) - chern_closed_formula(d, m, p), base)
                  .is_zero());
  }
  CHECK_THROWS_AS(chern_class(2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(chern_class(2, 1, 0), std::invalid_argument);
}

TEST_CASE("chern classes on the generators") {
  for (int d = 2; d <= 3; ++d)
    for (int m = 1; m <= 2; ++m)
      for (int p = 1; p <= 2; ++p) CHECK(chern_in_generators(d, m, p).ok);
}

TEST_CASE("chern classes are symmetry-invariant modulo the base ideal") {
  for (int d = 2; d <= 3; ++d) {
    GroebnerBasis base = buchberger(Ideal(t_poly_ring(d), base_relations(d)));
    SymmetryAction act = symmetry_action(d);
    for (int m = 1; m <= 2; ++m)
      for (int p = 1; p <= 2; ++p) {
        Polynomial c = chern_class(d, m, p);
        for (const auto& g : act.generators)
          CHECK(normal_form(g.apply(c) - c, base).is_zero());
      }
  }
}

TEST_CASE("conjecture verification at n=1 and a negative control") {
  ConjectureD3Report rep = verify_conjecture_d3(1);
  CHECK(rep.series_ok);
  CHECK(rep.image_dims_ok);
  // wrong truncation: G_2 in place of G_3 for n=2
  RingPtr gen = generator_poly_ring(3);
  std::vector<Polynomial> gens = fixed_relations(3);
  PolyMatrix wrong = matrix_A(3).power(1) * vector_G1(3);
  for (int i = 0; i < wrong.rows(); ++i) gens.push_back(wrong.at(i, 0));
  HilbertSeries h = hilbert_series(QuotientPresentation(gen, Ideal(gen, gens), "control"));
  CHECK_FALSE(h == reference_series(3, 2));
}

TEST_CASE("graded injectivity small cases") {
  CheckReport inj = graded_injectivity(2, TargetDim::finite(2), 4);
  CHECK(inj.ok);
  CheckReport inf2 = graded_injectivity(2, TargetDim::inf(), 4);
  CHECK(inf2.ok);
  REQUIRE(inf2.per_degree.size() == 5);
  CHECK(inf2.per_degree[4].expected == 9);
}

TEST_CASE("parallel degree evaluation is deterministic") {
  ConjectureD3Report seq = verify_conjecture_d3(1, 1);
  ConjectureD3Report par = verify_conjecture_d3(1, 4);
  REQUIRE(seq.detail.per_degree.size() == par.detail.per_degree.size());
  for (std::size_t i = 0; i < seq.detail.per_degree.size(); ++i) {
    CHECK(seq.detail.per_degree[i].expected == par.detail.per_degree[i].expected);
    CHECK(seq.detail.per_degree[i].actual == par.detail.per_degree[i].actual);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(TargetDim::finite(0), std::invalid_argument);
  CHECK_THROWS_AS(matrix_E(4), std::invalid_argument);
  CHECK_THROWS_AS(pn_koszul(0), std::invalid_argument);
  CHECK_THROWS_AS(whitney_check_d1(0), std::invalid_argument);
  CHECK_THROWS_AS(symmetry_action(1), std::invalid_argument);
}
