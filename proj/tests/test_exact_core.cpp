#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

using namespace darcais;

namespace {

Polynomial make_poly(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return Polynomial(std::move(c));
}

// deterministic small random polynomials for the property checks
struct PolyGen {
    std::mt19937 rng{20240517};

    Rational rational() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        return make_rational(num(rng), den(rng));
    }
    Polynomial poly(int max_degree) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = rational();
        return Polynomial(std::move(c));
    }
};

bool normalized(const Polynomial& p) {
    return p.is_zero() || sign_of(p.coefficients().back()) != 0;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("3/2")) == "3/2");
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("0.25")) == "1/4");
    CHECK(to_string(parse_rational("-1.5")) == "-3/2");
    CHECK(to_string(parse_rational("1e-6")) == "1/1000000");
    CHECK(to_string(parse_rational("2.5e2")) == "250");
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1..2"), std::invalid_argument);
}

TEST_CASE("rational invariants: canonical form") {
    Rational q = make_rational(Integer(-6), Integer(-4));
    CHECK(q.get_den() > 0);
    CHECK(to_string(q) == "3/2");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(gcd(abs(q.get_num()), q.get_den()) == 1);
}

TEST_CASE("poly_add") {
    Polynomial x = Polynomial::x();
    CHECK((x + (-x)).is_zero());

    Polynomial p2 = make_poly({"0", "3/2", "1/2"});  // (x^2+3x)/2
    CHECK(p2 + p2 == make_poly({"0", "3", "1"}));

    // P1 + P2 for g = sigma_1: x + (x^2+3x)/2 = (x^2+5x)/2
    CHECK(x + p2 == make_poly({"0", "5/2", "1/2"}));
}

TEST_CASE("poly_mul") {
    Polynomial x = Polynomial::x();
    CHECK(make_poly({"1", "1"}) * make_poly({"-1", "1"}) == make_poly({"-1", "0", "1"}));
    CHECK(x * make_poly({"3/2", "1/2"}) == make_poly({"0", "3/2", "1/2"}));
    CHECK((Polynomial() * x).is_zero());

    Polynomial a = make_poly({"2", "0", "5"});
    Polynomial b = make_poly({"-1", "7"});
    CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("poly_pow") {
    Polynomial x = Polynomial::x();
    CHECK(x.pow(3) == Polynomial::monomial(3));
    CHECK(make_poly({"5", "-2", "3"}).pow(0) == Polynomial::constant(Rational(1)));
    CHECK(Polynomial().pow(0) == Polynomial::constant(Rational(1)));
    CHECK(Polynomial().pow(4).is_zero());

    // pow(P1, 2) - P2 = Delta_1 for sigma: (x^2-3x)/2
    Polynomial p2 = make_poly({"0", "3/2", "1/2"});
    CHECK(x.pow(2) - p2 == make_poly({"0", "-3/2", "1/2"}));
}

TEST_CASE("poly_eval") {
    Polynomial p2 = make_poly({"0", "3/2", "1/2"});
    CHECK(p2.eval(Rational(1)) == Rational(2));  // p(2) = 2
    Polynomial q = make_poly({"7/3", "1", "4"});
    CHECK(q.eval(Rational(0)) == parse_rational("7/3"));
}

TEST_CASE("poly_derivative, poly_gcd, squarefree_part") {
    CHECK(make_poly({"1", "2", "3"}).derivative() == make_poly({"2", "6"}));
    CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());

    CHECK(squarefree_part(Polynomial::monomial(2)) == Polynomial::x());

    // (x-1)^2 (x+2) -> (x-1)(x+2), monic
    Polynomial p = make_poly({"-1", "1"}).pow(2) * make_poly({"2", "1"});
    CHECK(squarefree_part(p) == make_poly({"-1", "1"}) * make_poly({"2", "1"}));

    CHECK(poly_gcd(make_poly({"-1", "0", "1"}), make_poly({"-1", "1"})) == make_poly({"-1", "1"}));
    CHECK(poly_gcd(make_poly({"3", "3"}), make_poly({"2", "2"})) == make_poly({"1", "1"}));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::domain_error);
}

TEST_CASE("poly_shift") {
    CHECK(Polynomial::monomial(2).shifted_arg(Rational(1)) == make_poly({"1", "2", "1"}));

    // Delta_1^sigma shifted by its root 3 gives (x^2+3x)/2, constant term 0
    Polynomial delta1 = make_poly({"0", "-3/2", "1/2"});
    Polynomial shifted = delta1.shifted_arg(Rational(3));
    CHECK(shifted == make_poly({"0", "3/2", "1/2"}));
    CHECK(sign_of(shifted.coeff(0)) == 0);

    Polynomial p = make_poly({"4", "-1/3", "2"});
    CHECK(p.shifted_arg(Rational(0)) == p);
}

TEST_CASE("ring and shift properties on random polynomials") {
    PolyGen gen;
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial a = gen.poly(6), b = gen.poly(6), c = gen.poly(6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(normalized(a + b));
        CHECK(normalized(a * b));
        CHECK(normalized(a - a));

        Rational x = gen.rational(), s = gen.rational();
        CHECK(a.shifted_arg(s).eval(x) == a.eval(x + s));
    }
}

TEST_CASE("power laws") {
    PolyGen gen;
    for (int iter = 0; iter < 20; ++iter) {
        Polynomial a = gen.poly(4);
        std::uniform_int_distribution<unsigned long> e(0, 4);
        unsigned long m = e(gen.rng), n = e(gen.rng);
        CHECK(a.pow(m + n) == a.pow(m) * a.pow(n));
    }
}

TEST_CASE("division invariant") {
    PolyGen gen;
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial a = gen.poly(7), b = gen.poly(4);
        if (b.is_zero()) continue;
        auto [q, r] = a.divide(b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}
