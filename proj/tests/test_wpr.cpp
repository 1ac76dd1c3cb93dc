#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adic/flatness.hpp"
#include "adic/poly_parse.hpp"
#include "adic/wpr.hpp"

using namespace adic;

namespace {

RingPtr QXY = make_poly_ring(Field::rationals(), {"x", "y"});

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

// Q[x, y_1..y_m]/(y_i x^i): torsion of unbounded order against x
Ring bounded_torsion_ring(int m, RingPtr* out_poly = nullptr) {
    std::vector<std::string> vars = {"x"};
    for (int i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
    RingPtr poly = make_poly_ring(Field::rationals(), vars);
    std::vector<Polynomial> rels;
    for (int i = 1; i <= m; ++i)
        rels.push_back(parse_polynomial(
            poly, ("y" + std::to_string(i) + "*x^" + std::to_string(i)).c_str()));
    if (out_poly) *out_poly = poly;
    return Ring::quotient(poly, rels);
}

} // namespace

TEST_CASE("a regular sequence is pro-zero outright") {
    Ring r = Ring::polynomial(QXY);
    ProZeroReport rep = wpr_report(r, {P(QXY, "x"), P(QXY, "y")}, 4);
    CHECK(rep.overall == Outcome::pass);
    for (const auto& e : rep.entries) {
        CHECK(e.outcome == Outcome::pass);
        CHECK(e.trivially_zero);
        CHECK(e.witness_level == e.k);
    }
}

TEST_CASE("(x) in Q[x,y]/(xy): witnesses at the very next level") {
    Ring r = Ring::quotient(QXY, {P(QXY, "x*y")});
    ProZeroReport rep = wpr_report(r, {P(QXY, "x")}, 4);
    CHECK(rep.overall == Outcome::pass);
    for (const auto& e : rep.entries) {
        REQUIRE(e.outcome == Outcome::pass);
        CHECK(e.i == 1);
        CHECK(!e.trivially_zero);  // (0 : x^k) = (y) is nonzero
        CHECK(e.witness_level == e.k + 1);
    }
}

TEST_CASE("homology transition soundness and monotonicity for the xy-example") {
    Ring r = Ring::quotient(QXY, {P(QXY, "x*y")});
    KoszulTower tower(r, {P(QXY, "x")}, 4);
    // H^{-1}(K(A; x^k)) = (0 : x^k) = (y)A is 1-generated
    Subquotient h2, h1;
    auto mat = homology_transition(tower, 1, 2, 1, &h2, &h1);
    REQUIRE(h2.gen_reps().size() == 1);
    REQUIRE(h1.gen_reps().size() == 1);
    // the induced matrix is the zero matrix (x*y = 0 kills the class)
    for (const auto& c : mat) CHECK(r.nf(c[0]).is_zero());
    // monotonicity: all higher transitions into level 1 are zero as well
    for (int kpp = 2; kpp <= 4; ++kpp) {
        Subquotient hs, hd;
        auto m = homology_transition(tower, 1, kpp, 1, &hs, &hd);
        for (const auto& c : m) CHECK(r.nf(c[0]).is_zero());
    }
    // identity transition on homology at equal levels
    Subquotient ha, hb;
    auto id = homology_transition(tower, 1, 2, 2, &ha, &hb);
    REQUIRE(id.size() == 1);
    CHECK(id[0][0] == P(QXY, "1"));
}

TEST_CASE("bounded-torsion family: evidence against weak proregularity") {
    RingPtr poly;
    Ring r = bounded_torsion_ring(5, &poly);
    Polynomial x = parse_polynomial(poly, "x");
    ProZeroReport rep = wpr_report(r, {x}, 4);
    CHECK(rep.overall == Outcome::fail);
    // k = 1 has no witness within the bound
    bool found_k1 = false;
    for (const auto& e : rep.entries) {
        if (e.i == 1 && e.k == 1) {
            found_k1 = true;
            CHECK(e.outcome == Outcome::fail);
            CHECK(!e.surviving_class.empty());
        }
    }
    CHECK(found_k1);
    // the class of y_4 in (0 : x^4) maps to x^3 y_4, nonzero by normal form
    KoszulTower tower(r, {x}, 4);
    Subquotient h4, h1;
    homology_transition(tower, 1, 4, 1, &h4, &h1);
    Polynomial y4 = parse_polynomial(poly, "y4");
    REQUIRE(h4.contains(FreeElement({y4})));
    ComplexMap t = tower.transition(4, 1);
    FreeElement image = t.apply_at(-1, FreeElement({y4}));
    CHECK(image[0] == r.nf(parse_polynomial(poly, "x^3*y4")));
    CHECK(!h1.denominator().nf(image).is_zero());
}

TEST_CASE("flat base change heuristic: appending a variable changes nothing") {
    // A = Q[x,y]/(xy) versus B = A[z]; the report for (x) agrees levelwise
    Ring a = Ring::quotient(QXY, {P(QXY, "x*y")});
    RingPtr QXYZ = make_poly_ring(Field::rationals(), {"x", "y", "z"});
    Ring b = Ring::quotient(QXYZ, {parse_polynomial(QXYZ, "x*y")});
    ProZeroReport ra = wpr_report(a, {P(QXY, "x")}, 3);
    ProZeroReport rb = wpr_report(b, {parse_polynomial(QXYZ, "x")}, 3);
    REQUIRE(ra.entries.size() == rb.entries.size());
    for (std::size_t i = 0; i < ra.entries.size(); ++i) {
        CHECK(ra.entries[i].outcome == rb.entries[i].outcome);
        CHECK(ra.entries[i].witness_level == rb.entries[i].witness_level);
    }
    CHECK(ra.overall == rb.overall);
}

TEST_CASE("two generating sequences of the same ideal cross-check") {
    // (x, y) and (x, x + y) generate the same ideal; both report pro-zero
    Ring r = Ring::polynomial(QXY);
    ProZeroReport r1 = wpr_report(r, {P(QXY, "x"), P(QXY, "y")}, 3);
    ProZeroReport r2 = wpr_report(r, {P(QXY, "x"), P(QXY, "x + y")}, 3);
    CHECK(r1.overall == Outcome::pass);
    CHECK(r2.overall == Outcome::pass);
}
