#include "doctest.h"
#include "fixtures.hpp"

#include "gibs/gibs.hpp"

using namespace gibs;

TEST_SUITE("polycore") {

TEST_CASE("combinatorial counts") {
    CHECK(count_monomials(1, 8) == 9);
    CHECK(count_monomials(2, 4) == 15);
    CHECK(count_monomials(3, 3) == 20);
    CHECK(count_monomials(3, 0) == 1);
    // number of degree-d monomials follows the binomial formula
    CHECK(count_degree(2, 2) == 3);
    CHECK(count_degree(3, 2) == 6);
    // class counts refine the degree count
    CHECK(count_class(3, 2, 1) == 3);
    CHECK(count_class(3, 2, 2) == 2);
    CHECK(count_class(3, 2, 3) == 1);
    long long sum = 0;
    for (int k = 1; k <= 3; ++k) sum += count_class(3, 4, k);
    CHECK(sum == count_degree(3, 4));
}

TEST_CASE("monomial order and class") {
    CHECK(total_degree({2, 1}) == 3);
    CHECK(mono_class({1, 0}) == 1);
    CHECK(mono_class({0, 3}) == 2);
    CHECK(mono_class({1, 1}) == 1);
    CHECK(mono_class({0, 0}) == 0); // constant: class undefined
    // degree first, then lexicographic with x1 > x2
    CHECK(mono_cmp({2, 0}, {1, 1}) > 0);
    CHECK(mono_cmp({1, 1}, {0, 2}) > 0);
    CHECK(mono_cmp({0, 2}, {1, 0}) > 0);
    CHECK(mono_cmp({1, 0}, {1, 0}) == 0);
    CHECK(mono_mul({1, 2}, {3, 0}) == Monomial{4, 2});
}

TEST_CASE("monomial basis is descending and indexable") {
    const MonomialBasis b(2, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.at(0) == Monomial{2, 0});
    CHECK(b.at(1) == Monomial{1, 1});
    CHECK(b.at(2) == Monomial{0, 2});
    CHECK(b.at(3) == Monomial{1, 0});
    CHECK(b.at(4) == Monomial{0, 1});
    CHECK(b.at(5) == Monomial{0, 0});
    for (int i = 0; i < b.size(); ++i)
        CHECK(b.index_of(b.at(i)) == i);
    CHECK_THROWS_AS((void)b.index_of(Monomial{3, 0}), argument_error);
    // trailing block of degree <= g is the basis of J^g
    CHECK(b.first_index_deg_le(2) == 0);
    CHECK(b.first_index_deg_le(1) == 3);
    CHECK(b.first_index_deg_le(0) == 5);
    CHECK(b.first_index_deg_le(-1) == b.size());
}

TEST_CASE("polynomial term bookkeeping") {
    Polynomial p;
    CHECK(p.is_zero());
    CHECK(p.degree() == 0);
    p.add_term({2, 0}, 1.5);
    p.add_term({0, 0}, -2.0);
    p.add_term({2, 0}, -1.5); // cancels exactly -> term dropped
    CHECK(p.terms().size() == 1);
    CHECK(p.degree() == 0);
    CHECK(p.coeff({0, 0}) == -2.0);
    CHECK(p.coeff({2, 0}) == 0.0);
    CHECK(p.max_abs_coeff() == 2.0);
    CHECK(p.eval({7.0, 1.0}) == -2.0);

    const Polynomial q{{Monomial{1, 1}, 3.0}, {Monomial{0, 1}, -1.0}};
    CHECK(q.nvars() == 2);
    CHECK(q.degree() == 2);
    CHECK(q.eval({2.0, 5.0}) == doctest::Approx(3.0 * 10 - 5.0));
    CHECK(mul_mono(q, {1, 0}).coeff({2, 1}) == 3.0);
}

TEST_CASE("clean drops relatively small terms") {
    const Polynomial p{{Monomial{3}, 1e-12}, {Monomial{1}, 1.0},
                       {Monomial{0}, 2e-11}};
    const Polynomial c = clean(p, 1e-10);
    CHECK(c.terms().size() == 1);
    CHECK(c.coeff({1}) == 1.0);
    CHECK(clean(Polynomial{}).is_zero());
}

TEST_CASE("normalize_monic picks the leading significant term") {
    // the x^2 coefficient sits below the significance floor, so the monic
    // division uses the y^2 term
    const Polynomial p{{Monomial{2, 0}, 1e-9}, {Monomial{0, 2}, 2.0},
                       {Monomial{0, 0}, -2.0}};
    const Polynomial m = normalize_monic(p, 1e-6);
    CHECK(m.coeff({0, 2}) == doctest::Approx(1.0));
    CHECK(m.coeff({0, 0}) == doctest::Approx(-1.0));
    CHECK(normalize_monic(Polynomial{}).is_zero());
}

TEST_CASE("system validation and degree") {
    const PolySystem P = fx::octic_pair();
    CHECK(P.nvars == 1);
    CHECK(P.degree() == 8);
    CHECK_NOTHROW(P.validate());

    PolySystem bad(2, {Polynomial{{Monomial{1}, 1.0}}});
    CHECK_THROWS_AS(bad.validate(), argument_error);

    PolySystem named(1, {Polynomial{{Monomial{1}, 1.0}}}, {"a", "b"});
    CHECK_THROWS_AS(named.validate(), argument_error);
}

TEST_CASE("window prolongation includes lower-degree multiples") {
    // P = {x}: prolonging by k keeps every multiple of degree <= 1 + k
    const PolySystem P(1, {Polynomial{{Monomial{1}, 1.0}}});
    CHECK(prolong(P, 0).size() == 1);
    CHECK(prolong(P, 1).size() == 2); // x, x^2
    CHECK(prolong(P, 2).size() == 3);

    // both octics times {1, x} at k = 1
    CHECK(prolong(fx::octic_pair(), 1).size() == 4);

    // a degree-1 member of a degree-2 system is multiplied up to the window
    const PolySystem Q(1, {Polynomial{{Monomial{1}, 1.0}},
                           Polynomial{{Monomial{2}, 1.0}}});
    CHECK(prolong(Q, 0).size() == 3); // x, x^2 (from x), x^2
}

TEST_CASE("coefficient matrix round-trips") {
    const PolySystem P = fx::two_lines();
    const CoeffMatrix cm = coefficient_matrix(P, P.degree());
    CHECK(cm.A.rows() == 2);
    CHECK(cm.A.cols() == count_monomials(2, 4));
    const auto back = polys_from_rows(cm.A, cm.basis);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == P.polys[0]);
    CHECK(back[1] == P.polys[1]);
    CHECK_THROWS_AS(coefficient_matrix(P, 3), argument_error); // d < deg(P)
}

TEST_CASE("variable substitution") {
    // x -> x + y applied to x^2 gives x^2 + 2xy + y^2
    Eigen::MatrixXd F(2, 2);
    F << 1, 1, 0, 1;
    const Polynomial p{{Monomial{2, 0}, 1.0}};
    const Polynomial q = transform(p, F);
    CHECK(q.coeff({2, 0}) == doctest::Approx(1.0));
    CHECK(q.coeff({1, 1}) == doctest::Approx(2.0));
    CHECK(q.coeff({0, 2}) == doctest::Approx(1.0));
    CHECK(q.degree() == 2);

    // an invertible change of variables preserves evaluation
    const Eigen::MatrixXd M = random_frame(2, 42);
    const Polynomial r{{Monomial{2, 1}, 1.0}, {Monomial{0, 1}, -3.0}};
    const Polynomial rt = transform(r, M);
    const Eigen::Vector2d z(0.3, -1.2);
    const Eigen::Vector2d Mz = M * z;
    CHECK(rt.eval({z(0), z(1)}) ==
          doctest::Approx(r.eval({Mz(0), Mz(1)})).epsilon(1e-9));
}

TEST_CASE("display names") {
    CHECK(display_names(2) == std::vector<std::string>{"x", "y"});
    CHECK(display_names(4) == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(display_names(5)[0] == "x1");
    CHECK(display_names(5)[4] == "x5");
    CHECK(display_names(2, {"u", "v"}) == std::vector<std::string>{"u", "v"});
}

} // TEST_SUITE
