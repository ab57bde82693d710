#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "darcais/integer_sequences.hpp"

using namespace darcais;

namespace {

std::vector<long> prefix(const IntegerSequence& s, long upto) {
    std::vector<long> out;
    for (long n = 0; n <= upto; ++n) out.push_back(s.at(n).get_si());
    return out;
}

}  // namespace

TEST_CASE("Wohlfahrt rows N2, N3, N4") {
    CHECK(prefix(commuting_tuple_numbers(2, 10), 10) ==
          std::vector<long>({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    CHECK(prefix(commuting_tuple_numbers(3, 10), 10) ==
          std::vector<long>({1, 1, 4, 8, 21, 39, 92, 170, 360, 667, 1316}));
    CHECK(prefix(commuting_tuple_numbers(4, 10), 10) ==
          std::vector<long>({1, 1, 8, 21, 84, 206, 717, 1810, 5462, 13859, 38497}));
}

TEST_CASE("partition, plane partition, overpartition values") {
    CHECK(prefix(partition_numbers(10), 10) == std::vector<long>({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    CHECK(prefix(plane_partitions(10), 10) ==
          std::vector<long>({1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500}));
    CHECK(prefix(overpartitions(7), 7) == std::vector<long>({1, 2, 4, 8, 14, 24, 40, 64}));
}

TEST_CASE("colored partitions") {
    IntegerSequence p1 = colored_partitions(1, 10);
    IntegerSequence p = partition_numbers(10);
    for (long n = 0; n <= 10; ++n) CHECK(p1.at(n) == p.at(n));

    IntegerSequence p2 = colored_partitions(2, 4);
    CHECK(prefix(p2, 4) == std::vector<long>({1, 2, 5, 10, 20}));
    CHECK(ipow(p2.at(1), 2) < p2.at(2));  // 4 < 5: the k=2, n=1 opposite inequality

    IntegerSequence p3 = colored_partitions(3, 2);
    CHECK(prefix(p3, 2) == std::vector<long>({1, 3, 9}));
    CHECK(ipow(p3.at(1), 2) == p3.at(2));  // 9 = 9: the k=3, n=1 equality

    CHECK_THROWS_AS(colored_partitions(0, 5), std::invalid_argument);
}

TEST_CASE("wohlfahrt integrality is enforced") {
    // weight 1 at k=1, 0 otherwise: a(2) = a(1)/2 is not integral
    auto weight = [](long k) -> Integer { return Integer(k == 1 ? 1 : 0); };
    CHECK_THROWS_AS(value_recursion("broken", weight, 4), std::domain_error);
}

TEST_CASE("root_decreasing_check") {
    IntegerSequence p = partition_numbers(10);
    CHECK(root_decreasing_check(p, 6));
    CHECK(!root_decreasing_check(p, 5));  // 7^6 < 11^5
    CHECK(root_decreasing_check(p, 4));   // 5^5 > 7^4

    IntegerSequence pbar = overpartitions(5);
    CHECK(!root_decreasing_check(pbar, 1));
    CHECK(!root_decreasing_check(pbar, 2));  // equalities, strict check fails
    CHECK(root_compare(pbar, 1) == 0);
    CHECK(root_compare(pbar, 2) == 0);
    CHECK(root_decreasing_check(pbar, 3));
}

TEST_CASE("log-concavity scans") {
    IntegerSequence p = partition_numbers(501);
    CHECK(log_concavity_scan(p, 26, 500).empty());
    std::vector<long> low = log_concavity_scan(p, 2, 25);
    CHECK(!low.empty());
    // p(n)^2 < p(n-1) p(n+1) exactly at odd n below 26
    CHECK(low == std::vector<long>({3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25}));

    IntegerSequence pp = plane_partitions(501);
    CHECK(log_concavity_scan(pp, 12, 500).empty());

    IntegerSequence pbar = overpartitions(501);
    CHECK(log_concavity_scan(pbar, 1, 500).empty());

    CHECK_THROWS_AS(log_concavity_scan(p, 0, 10), std::out_of_range);
    CHECK_THROWS_AS(log_concavity_scan(p, 1, 501), std::out_of_range);
}

TEST_CASE("three-way equivalence") {
    IntegerSequence p = partition_numbers(301);
    IntegerSequence pp = plane_partitions(301);
    for (long n = 1; n <= 300; ++n) {
        CHECK(equivalence_property(p, n));
        CHECK(equivalence_property(pp, n));
    }
    IntegerSequence constant{"const", std::vector<Integer>(20, Integer(4))};
    for (long n = 1; n <= 18; ++n) CHECK(equivalence_property(constant, n));
}

TEST_CASE("monotone_root_verify: partitions") {
    IntegerSequence p = partition_numbers(501);
    MonotoneRootReport rep = monotone_root_verify(p, 26, 500);
    CHECK(rep.logconcave_ok);
    CHECK(rep.initial_cmp > 0);
    CHECK(rep.induction_start == 26);
    CHECK(rep.induction_ok);
    CHECK(rep.routes_agree);
    CHECK(rep.ok());
    CHECK(rep.direct_decreasing_from == 6);
    // direct checks fill 6 <= n <= 25
    for (long n = 6; n <= 25; ++n) CHECK(root_decreasing_check(p, n));
}

TEST_CASE("monotone_root_verify: plane partitions") {
    IntegerSequence pp = plane_partitions(501);
    MonotoneRootReport rep = monotone_root_verify(pp, 12, 500);
    CHECK(rep.ok());
    CHECK(rep.direct_decreasing_from == 6);
    for (long n = 6; n <= 11; ++n) CHECK(root_decreasing_check(pp, n));
}

TEST_CASE("monotone_root_verify: overpartitions slide past the equalities") {
    IntegerSequence pbar = overpartitions(501);
    MonotoneRootReport rep = monotone_root_verify(pbar, 3, 500);
    CHECK(rep.logconcave_ok);
    CHECK(rep.initial_cmp == 0);  // R(2) = R(3) = 2 exactly
    CHECK(rep.induction_start == 4);
    CHECK(rep.induction_ok);
    CHECK(rep.routes_agree);
    CHECK(rep.direct_decreasing_from == 3);
    CHECK(rep.equal_indices == std::vector<long>({1, 2}));
}

TEST_CASE("nth_root_display matches the pinned decimal tables") {
    IntegerSequence p = partition_numbers(7);
    std::vector<std::string> roots_2dp{"1.00", "1.41", "1.44", "1.50", "1.48", "1.49", "1.47"};
    for (long n = 1; n <= 7; ++n) CHECK(nth_root_display(p.at(n), n, 2) == roots_2dp[static_cast<std::size_t>(n - 1)]);

    IntegerSequence pp = plane_partitions(10);
    std::vector<std::string> roots_3dp{"1.000", "1.732", "1.817", "1.899", "1.888",
                                     "1.906", "1.890", "1.886", "1.872", "1.862"};
    for (long n = 1; n <= 10; ++n)
        CHECK(nth_root_display(pp.at(n), n, 3) == roots_3dp[static_cast<std::size_t>(n - 1)]);

    CHECK(nth_root_display(Integer(4), 2, 3) == "2.000");  // exact root
    CHECK(nth_root_display(Integer(1000), 1, 0) == "1000");
    CHECK_THROWS_AS(nth_root_display(Integer(0), 2, 3), std::invalid_argument);
}

TEST_CASE("nth root display trend toward 1") {
    IntegerSequence p = partition_numbers(501);
    std::string r10 = nth_root_display(p.at(10), 10, 6);
    std::string r100 = nth_root_display(p.at(100), 100, 6);
    std::string r500 = nth_root_display(p.at(500), 500, 6);
    CHECK(r10 > r100);   // fixed-width decimal strings with equal integer part
    CHECK(r100 > r500);
    CHECK(r500 > "1.000000");
}

TEST_CASE("root_quotient_report") {
    IntegerSequence pp = plane_partitions(10);
    RootQuotientReport rep = root_quotient_report(pp, 2, 3);
    CHECK(rep.n == 2);
    CHECK(rep.display_root == "1.732");
    CHECK(rep.logconcave);
    CHECK(!rep.root_decreasing);  // 3^3 = 27 < 6^2 = 36
}

TEST_CASE("cross-module tie: wohlfahrt(sigma_1) values") {
    IntegerSequence w = wohlfahrt_sequence(ArithFn::sigma(1), 50);
    IntegerSequence p = partition_numbers(50);
    for (long n = 0; n <= 50; ++n) CHECK(w.at(n) == p.at(n));
}
