#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "darcais/integer_sequences.hpp"
#include "darcais/partitions.hpp"
#include "darcais/poly_sequence.hpp"

using namespace darcais;

namespace {

Polynomial make_poly(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("recursion start") {
    for (const ArithFn& g : standard_families()) {
        CAPTURE(g.name());
        PolySequence seq(g, 1);
        CHECK(seq.poly(0) == Polynomial::constant(Rational(1)));
        CHECK(seq.poly(1) == Polynomial::x());  // forced by g(1) = 1
    }
}

TEST_CASE("second polynomial for sigma") {
    PolySequence seq(ArithFn::sigma(1), 2);
    CHECK(seq.poly(2) == make_poly({"0", "3/2", "1/2"}));
}

TEST_CASE("overpartition polynomial values (Pbar table)") {
    PolySequence seq(ArithFn::gbar(), 7);

    std::vector<Rational> at2 = seq.value_table(Rational(2));
    std::vector<std::string> expect2{"1", "2", "4", "8", "14", "24", "40", "64"};
    for (std::size_t n = 0; n < expect2.size(); ++n) CHECK(to_string(at2[n]) == expect2[n]);

    std::vector<Rational> atm2 = seq.value_table(Rational(-2));
    std::vector<std::string> expectm2{"1", "-2", "0", "0", "2", "0", "0", "0"};
    for (std::size_t n = 0; n < expectm2.size(); ++n) CHECK(to_string(atm2[n]) == expectm2[n]);

    std::vector<Rational> atm1 = seq.value_table(Rational(-1));
    std::vector<std::string> expectm1{"1", "-1", "-1/2", "-1/2", "3/8", "1/8", "3/16", "7/16"};
    for (std::size_t n = 0; n < expectm1.size(); ++n) CHECK(to_string(atm1[n]) == expectm1[n]);

    std::vector<Rational> at1 = seq.value_table(Rational(1));
    std::vector<std::string> expect1{"1", "1", "3/2", "5/2", "27/8", "39/8", "111/16", "149/16"};
    for (std::size_t n = 0; n < expect1.size(); ++n) CHECK(to_string(at1[n]) == expect1[n]);
}

TEST_CASE("partition number values at x=1") {
    PolySequence seq(ArithFn::sigma(1), 10);
    std::vector<Rational> table = seq.value_table(Rational(1));
    std::vector<long> expect{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t n = 0; n < expect.size(); ++n) CHECK(table[n] == Rational(expect[n]));
}

TEST_CASE("structural invariants across families") {
    for (const ArithFn& g : standard_families()) {
        CAPTURE(g.name());
        PolySequence seq(g, 60);
        for (long n = 0; n <= 60; ++n) {
            const Polynomial& p = seq.poly(n);
            CHECK(p.degree() == n);
            if (n >= 1) {
                CHECK(sign_of(p.coeff(0)) == 0);
                // leading coefficient 1/n!
                CHECK(p.leading() == make_rational(Integer(1), factorial(static_cast<unsigned long>(n))));
                // positive g forces positive coefficients in degrees 1..n
                for (long k = 1; k <= n; ++k) CHECK(sign_of(p.coeff(static_cast<std::size_t>(k))) > 0);
            }
            // n! P_n has integer coefficients (the scaled form *is* that statement)
            CHECK(Polynomial::from_scaled(seq.scaled(n), factorial(static_cast<unsigned long>(n))) == p);
        }
    }
}

TEST_CASE("value evaluation against direct polynomial evaluation") {
    PolySequence seq(ArithFn::sigma(2), 30);
    for (long n = 0; n <= 30; n += 5) {
        Rational x = parse_rational("-7/3");
        CHECK(seq.value(n, x) == seq.poly(n).eval(x));
    }
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0).front().empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK_THROWS_AS(enumerate_partitions(41), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);

    // lexicographically decreasing
    auto parts = enumerate_partitions(4);
    std::vector<Partition> expect{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(parts == expect);
}

TEST_CASE("partition count matches p(n)") {
    IntegerSequence p = partition_numbers(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(Integer(static_cast<long>(enumerate_partitions(n).size())) == p.at(n));
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths({1}) == std::vector<int>{1});
    CHECK(hook_lengths({2}) == std::vector<int>({2, 1}));
    CHECK(hook_lengths({2, 1}) == std::vector<int>({3, 1, 1}));
    CHECK(hook_lengths({3, 2}) == std::vector<int>({4, 3, 2, 1, 1}));
    CHECK(hook_lengths({}) == std::vector<int>{});
    CHECK_THROWS_AS(hook_lengths({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(hook_lengths({2, 0}), std::invalid_argument);

    // one hook per cell
    for (const auto& lambda : enumerate_partitions(8)) {
        int weight = 0;
        for (int part : lambda) weight += part;
        CHECK(static_cast<int>(hook_lengths(lambda).size()) == weight);
    }
}

TEST_CASE("hook length product oracle") {
    CHECK(nekrasov_okounkov_oracle(0) == Polynomial::constant(Rational(1)));
    CHECK(nekrasov_okounkov_oracle(1) == Polynomial::x());
    CHECK(nekrasov_okounkov_oracle(2) == make_poly({"0", "3/2", "1/2"}));
    CHECK_THROWS_AS(nekrasov_okounkov_oracle(16), std::invalid_argument);

    PolySequence seq(ArithFn::sigma(1), 12);
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(nekrasov_okounkov_oracle(n) == seq.poly(n));
    }
}

TEST_CASE("special value ties against the sequence module") {
    const long N = 200;
    PolySequence sigma1(ArithFn::sigma(1), N);
    PolySequence sigma2(ArithFn::sigma(2), N);
    PolySequence gbar(ArithFn::gbar(), N);
    IntegerSequence p = partition_numbers(N);
    IntegerSequence pp = plane_partitions(N);
    IntegerSequence pbar = overpartitions(N);

    for (long n = 0; n <= N; ++n) {
        CHECK(sigma1.value(n, Rational(1)) == Rational(p.at(n)));
        CHECK(sigma2.value(n, Rational(1)) == Rational(pp.at(n)));
        CHECK(gbar.value(n, Rational(2)) == Rational(pbar.at(n)));
    }

    // p_k two-path agreement: scaled recursion vs polynomial evaluation at k
    for (long k = 1; k <= 10; ++k) {
        IntegerSequence pk = colored_partitions(k, N);
        for (long n = 0; n <= N; ++n) CHECK(sigma1.value(n, Rational(k)) == Rational(pk.at(n)));
    }
}

TEST_CASE("nonnegative coefficients make P_n monotone for x >= 0") {
    PolySequence seq(ArithFn::gell(3), 25);
    for (long n = 1; n <= 25; n += 6) {
        Rational prev = seq.value(n, Rational(0));
        for (long step = 1; step <= 8; ++step) {
            Rational x = make_rational(step, 2);
            Rational cur = seq.value(n, x);
            CHECK(cmp(cur, prev) >= 0);
            prev = cur;
        }
    }
}

TEST_CASE("generation bounds and errors") {
    PolySequence seq(ArithFn::psi(1), 3);
    CHECK(seq.max_index() == 3);
    CHECK_THROWS_AS(seq.poly(4), std::out_of_range);
    CHECK_THROWS_AS(seq.poly(-1), std::out_of_range);
    CHECK_THROWS_AS(PolySequence(ArithFn::psi(1), -1), std::invalid_argument);
}
