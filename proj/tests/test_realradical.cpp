#include "doctest.h"
#include "fixtures.hpp"

#include "gibs/gibs.hpp"

#include <cmath>
#include <string>

using namespace gibs;

TEST_SUITE("realradical") {

TEST_CASE("one round suffices when the ideal is already real") {
    // {y^2 - 1}: the moment rank meets the kernel dimension immediately
    const PolySystem P(
        2,
        {Polynomial{{Monomial{0, 2}, 1.0}, {Monomial{0, 0}, -1.0}}},
        {"x", "y"});
    const RealRadicalResult res = gif_mmtx(P, 1e-8, 0);
    REQUIRE(res.trace.size() == 1);
    CHECK(res.trace[0].round == 0);
    CHECK(res.trace[0].rank == 5);
    CHECK(res.trace[0].dim == 5);
    CHECK(res.gif.k == 0);
    CHECK(res.gif.l == 0);
    REQUIRE(res.generators.size() == 1);
    const Polynomial& g = res.generators.polys[0];
    CHECK(g.coeff({0, 2}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.coeff({0, 0}) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("the octic pair contracts to x^2 - sqrt(2)") {
    const RealRadicalResult res = gif_mmtx(fx::octic_pair(), 1e-8, 0);
    REQUIRE(res.trace.size() == 2);

    const IterationRecord& r0 = res.trace[0];
    CHECK(r0.round == 0);
    CHECK(r0.k == 0);
    CHECK(r0.l == 4);
    CHECK(r0.dim == 4);
    CHECK(r0.rank == 2);
    CHECK(r0.ngens == 1);
    CHECK(r0.kernel_dim == 3);
    CHECK(r0.eps_used == 1e-8);

    const IterationRecord& r1 = res.trace[1];
    CHECK(r1.round == 1);
    CHECK(r1.k == 0);
    CHECK(r1.l == 2);
    CHECK(r1.dim == 2);
    CHECK(r1.rank == 2);
    CHECK(r1.ngens == 3); // the three moment-kernel polynomials
    CHECK(r1.kernel_dim == 1);
    // each hand-off floors the tolerance at the solver's noise estimate
    CHECK(r1.eps_used == std::max(1e-8, 3.0 * r0.noise));

    REQUIRE(res.generators.size() == 1);
    const Polynomial g = clean(res.generators.polys[0], 1e-6);
    CHECK(g.coeff({2}) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(g.coeff({0}) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-6));
    CHECK(g.terms().size() == 2);
    CHECK(res.solution.rank == 2);
    CHECK(res.gif.dim == 2);
}

TEST_CASE("the two-lines system contracts to y^2 - 1") {
    const RealRadicalResult res = gif_mmtx(fx::two_lines(), 1e-8, 0);
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0].k == 1);
    CHECK(res.trace[0].l == 0);
    CHECK(res.trace[0].dim == 15);
    CHECK(res.trace[0].rank == 11);
    CHECK(res.trace[0].ngens == 6);
    CHECK(res.trace[0].kernel_dim == 10);
    CHECK(res.trace[1].k == 0);
    CHECK(res.trace[1].l == 3);
    CHECK(res.trace[1].dim == 5);
    CHECK(res.trace[1].rank == 5);
    CHECK(res.trace[1].kernel_dim == 1);

    REQUIRE(res.generators.size() == 1);
    const Polynomial g = clean(res.generators.polys[0], 1e-5);
    CHECK(g.terms().size() == 2);
    CHECK(g.coeff({0, 2}) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(g.coeff({0, 0}) == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("the trivariate quartet surfaces the plane z = 2") {
    const RealRadicalResult res = gif_mmtx(fx::quintic_quartet(), 1e-8, 0);
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0].k == 0);
    CHECK(res.trace[0].l == 2);
    CHECK(res.trace[0].dim == 15);
    CHECK(res.trace[0].rank == 7);
    CHECK(res.trace[0].ngens == 5);
    CHECK(res.trace[0].kernel_dim == 13);
    CHECK(res.trace[1].rank == 5);
    CHECK(res.trace[1].dim == 5);
    CHECK(res.trace[1].ngens == 5);

    // five degree-2 generators spanning the same space as
    // {z-2, x(z-2), y(z-2), z(z-2), x^2 - y^2 + 3}
    REQUIRE(res.generators.size() == 5);
    for (const auto& p : res.generators.polys) CHECK(p.degree() <= 2);
    const double gap = principal_angle_gap(
        fx::span_at(res.generators, 2), fx::span_at(fx::quintic_radical_span(), 2));
    CHECK(gap < 1e-4);

    // the final involutive run sees the contracted column 7, 5, 3, 1
    CHECK(res.gif.table.entry(0, 0) == 7);
    CHECK(res.gif.table.entry(0, 1) == 5);
    CHECK(res.gif.table.entry(0, 2) == 3);
    CHECK(res.gif.table.entry(0, 3) == 1);

    // every generator vanishes on sample points of the solution set
    // (z = 2, y^2 - x^2 = 3)
    const std::vector<std::vector<double>> pts = {
        {0.0, std::sqrt(3.0), 2.0},
        {1.0, -2.0, 2.0},
        {-4.0, std::sqrt(19.0), 2.0}};
    for (const auto& p : res.generators.polys)
        for (const auto& pt : pts)
            CHECK(std::abs(p.eval(pt)) < 1e-5 * std::max(1.0, p.max_abs_coeff()));
}

TEST_CASE("round budget exhaustion throws with the full trace") {
    try {
        gif_mmtx(fx::quintic_quartet(), 1e-8, 0, /*max_rounds=*/1);
        FAIL("expected iteration_limit_error");
    } catch (const iteration_limit_error& e) {
        REQUIRE(e.trace().size() == 1);
        CHECK(e.trace()[0].rank == 7);
        CHECK(e.trace()[0].dim == 15);
        REQUIRE(e.partial_table().has_value());
        CHECK(e.partial_table()->entry(0, 2) == 15);
        CHECK(std::string(e.what()).find("1 rounds") != std::string::npos);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(gif_mmtx(fx::octic_pair(), 1e-8, 0, 0), argument_error);
    const PolySystem empty(2, {});
    CHECK_THROWS_AS(gif_mmtx(empty, 1e-8, 0), argument_error);
}

TEST_CASE("determinism across repeated runs") {
    const RealRadicalResult a = gif_mmtx(fx::two_lines(), 1e-8, 7);
    const RealRadicalResult b = gif_mmtx(fx::two_lines(), 1e-8, 7);
    REQUIRE(a.generators.size() == b.generators.size());
    const auto names = display_names(2, a.generators.varnames);
    for (std::size_t i = 0; i < a.generators.polys.size(); ++i)
        CHECK(format_poly(a.generators.polys[i], names, 17) ==
              format_poly(b.generators.polys[i], names, 17));
    CHECK((a.solution.u.array() == b.solution.u.array()).all());
}

TEST_CASE("simplification report on the contracted quartet") {
    const RealRadicalResult res = gif_mmtx(fx::quintic_quartet(), 1e-8, 0);
    const auto entries = simplify_report(res.generators, 1e-8);
    REQUIRE(entries.size() == 2);

    CHECK(entries[0].depth == 0);
    CHECK(entries[0].degree == 2);
    CHECK(entries[0].raw.size() == 5); // restates the generators

    CHECK(entries[1].depth == 1);
    CHECK(entries[1].degree == 1);
    REQUIRE(entries[1].normalized.size() == 1);
    const Polynomial& lin = entries[1].normalized.polys[0];
    CHECK(lin.coeff({0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lin.coeff({0, 0, 0}) == doctest::Approx(-2.0).epsilon(1e-6));
    // raw entries are unit-norm rows with a canonical sign
    REQUIRE(entries[1].raw.size() == 1);
    const Polynomial& raw = entries[1].raw.polys[0];
    double norm2 = 0.0;
    for (const auto& [m, c] : raw.terms()) norm2 += c * c;
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(raw.max_abs_coeff() > 0.0);

    const std::string text = format_simplify_report(entries, res.generators);
    CHECK(text.find("depth 1") != std::string::npos);
    CHECK(text.find("normalized:") != std::string::npos);
}

TEST_CASE("simplify report of an exact square restates the root") {
    // Q = {(y^2-1)^2 - (y^2-1)} has a degree-2 consequence? no  -- use the
    // direct case: a quadratic ideal with a hidden linear generator
    PolySystem Q(2,
                 {Polynomial{{Monomial{1, 0}, 1.0}, {Monomial{0, 0}, -1.0}},
                  Polynomial{{Monomial{1, 1}, 1.0}, {Monomial{0, 1}, -1.0}}},
                 {"x", "y"});
    // {x - 1, xy - y}: ker C(Q) at degree 2, depth-1 projection exposes x - 1
    const auto entries = simplify_report(Q, 1e-8);
    REQUIRE(!entries.empty());
    bool found_linear = false;
    for (const auto& e : entries) {
        if (e.depth == 1 && e.degree == 1) {
            for (const auto& p : e.normalized.polys) {
                if (std::abs(p.coeff({1, 0}) - 1.0) < 1e-9 &&
                    std::abs(p.coeff({0, 0}) + 1.0) < 1e-9)
                    found_linear = true;
            }
        }
    }
    CHECK(found_linear);

    // empty and constant-degree inputs yield empty reports
    CHECK(simplify_report(PolySystem(2, {}), 1e-8).empty());
}

} // TEST_SUITE
