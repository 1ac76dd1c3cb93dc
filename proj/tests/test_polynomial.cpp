#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adic/poly_parse.hpp"
#include "adic/polynomial.hpp"

using namespace adic;

namespace {

RingPtr qxy() { return make_poly_ring(Field::rationals(), {"x", "y"}); }

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

// independent schoolbook multiplication on raw term lists
Polynomial schoolbook_mul(const Polynomial& f, const Polynomial& g) {
    std::vector<Term> terms;
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial::from_terms(f.ring(), terms);
}

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int max_terms = 4,
                       int max_deg = 3) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> de(0, max_deg);
    std::uniform_int_distribution<long> co(-5, 5);
    std::vector<Term> terms;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e;
        for (std::size_t v = 0; v < r->nvars(); ++v) e.push_back(de(rng));
        terms.push_back({Monomial(e), Scalar::of_int(co(rng), r->field())});
    }
    return Polynomial::from_terms(r, terms);
}

} // namespace

TEST_CASE("cancellation and absorbing element") {
    auto r = qxy();
    CHECK(P(r, "(x + y) + (x - y)") == P(r, "2*x"));
    CHECK((P(r, "x") * Polynomial::zero(r)).is_zero());
}

TEST_CASE("expansion against the schoolbook oracle") {
    auto r = qxy();
    Polynomial f = P(r, "x + y");
    CHECK(f * f == P(r, "x^2 + 2*x*y + y^2"));
    CHECK(f * f == schoolbook_mul(f, f));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng);
        CHECK(a * b == schoolbook_mul(a, b));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (Field f : {Field::rationals(), Field::prime(13)}) {
        auto r = make_poly_ring(f, {"x", "y", "z"});
        for (int t = 0; t < 1000; ++t) {
            Polynomial a = random_poly(r, rng), b = random_poly(r, rng),
                       c = random_poly(r, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("term order axioms") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> de(0, 5);
    for (OrderKind kind : {OrderKind::lex, OrderKind::grevlex}) {
        TermOrder ord{kind};
        for (int t = 0; t < 1000; ++t) {
            auto rnd = [&] {
                std::vector<std::uint32_t> e(3);
                for (auto& x : e) x = de(rng);
                return Monomial(e);
            };
            Monomial a = rnd(), b = rnd(), c = rnd();
            // total: exactly one of <,=,> holds
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            // multiplicative
            if (ord.less(a, b)) CHECK(ord.less(a * c, b * c));
            // 1 is minimal
            Monomial one(3);
            CHECK(ord.compare(one, a) <= 0);
        }
    }
}

TEST_CASE("monomial divisibility, quotient and lcm") {
    // x^2 y | x^2 y^3 with quotient y^2
    Monomial a({2, 1}), b({2, 3});
    CHECK(a.divides(b));
    CHECK(a.quotient_of(b) == Monomial({0, 2}));
    CHECK(Monomial::lcm(Monomial({2, 0}), Monomial({0, 1})) == Monomial({2, 1}));
    CHECK(!Monomial({3, 0}).divides(Monomial({2, 0})));
    CHECK_THROWS_AS(Monomial({3, 0}).quotient_of(Monomial({2, 0})), AlgebraError);
    CHECK_THROWS_AS(Monomial({1, 1}).divides(Monomial({1, 1, 1})), AlgebraError);
}

TEST_CASE("polynomial parser handles rationals, powers, parentheses") {
    auto r = qxy();
    CHECK(P(r, "1/2*x^2 - 3*y") == P(r, "1/2*x^2 - y - 2*y"));
    CHECK(P(r, "1/2*x^2 - 3*y").str() == "1/2*x^2 - 3*y");
    CHECK(P(r, "(x+y)^2") == P(r, "x^2+2*x*y+y^2"));
    CHECK_THROWS_AS(P(r, "x + w"), PolyParseError);
    CHECK_THROWS_AS(P(r, "x +"), PolyParseError);
    CHECK_THROWS_AS(P(r, "x y"), PolyParseError);
}

TEST_CASE("printing round-trips through the parser") {
    auto r = qxy();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        Polynomial a = random_poly(r, rng);
        CHECK(parse_polynomial(r, a.str()) == a);
    }
}
