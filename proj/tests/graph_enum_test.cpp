#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "bosonkit/egf.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/graph_enum.hpp"
#include "bosonkit/sequences.hpp"
#include "test_support.hpp"

using namespace bosonkit;
using namespace bosonkit::testing;

TEST_CASE("set partitions in lexicographic restricted-growth order")
{
    std::vector<std::string> three;
    for (const auto& p : set_partitions(3)) {
        three.push_back(p.str());
    }
    CHECK(three == std::vector<std::string>{"000", "001", "010", "011", "012"});

    const auto empty = set_partitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);
    CHECK(empty[0].block_count() == 0);

    std::uint64_t twelve = 0;
    for_each_set_partition(12, [&](const SetPartition&) { ++twelve; });
    CHECK(twelve == 4213597);

    CHECK(error_code_of([] { (void)set_partitions(15); }) == ErrorCode::resource_cap);
}

TEST_CASE("partition enumeration is sound and repeatable")
{
    for (unsigned n = 0; n <= 8; ++n) {
        std::set<std::string> seen;
        std::vector<std::string> first_run;
        for (const auto& p : set_partitions(n)) {
            CHECK(p == SetPartition(p.rgs())); // restricted growth holds
            CHECK(p.block_count() == (n == 0 ? 0u : 1u + *std::max_element(p.rgs().begin(), p.rgs().end())));
            seen.insert(p.str());
            first_run.push_back(p.str());
        }
        CHECK(seen.size() == first_run.size());
        CHECK(BigInt(seen.size()) == bell(n));
        CHECK(std::is_sorted(first_run.begin(), first_run.end()));

        std::vector<std::string> second_run;
        for (const auto& p : set_partitions(n)) {
            second_run.push_back(p.str());
        }
        CHECK(first_run == second_run);
    }
}

TEST_CASE("restricted-growth strings")
{
    CHECK(SetPartition::parse("0102").block_sizes() == std::vector<unsigned>{2, 1, 1});
    CHECK(SetPartition::parse("0123456789abcd").str() == "0123456789abcd");
    CHECK(SetPartition::parse("0123456789abcd").block_count() == 14);
    CHECK(error_code_of([] { (void)SetPartition::parse("02"); }) == ErrorCode::invalid_args);
    CHECK(error_code_of([] { (void)SetPartition::parse("1"); }) == ErrorCode::invalid_args);
    CHECK(error_code_of([] { (void)SetPartition::parse("0-"); }) == ErrorCode::invalid_args);
}

TEST_CASE("arrow graph counts")
{
    const ArrowGraphCounts four = arrow_graph_counts(4);
    CHECK(four.total == 15);
    CHECK(four.by_block_count == std::map<unsigned, BigInt>{{1, 1}, {2, 7}, {3, 6}, {4, 1}});
    CHECK(arrow_graph_counts(1).total == 1);
    CHECK(arrow_graph_counts(7).total == 877);

    const StirlingTable table = stirling_table(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const ArrowGraphCounts c = arrow_graph_counts(n);
        CHECK(c.total == bell(n));
        for (const auto& [k, v] : c.by_block_count) {
            CHECK(v == table.at(n, k));
        }
    }
}

TEST_CASE("weight spec text format")
{
    const WeightSpec w = WeightSpec::parse("1:1; 2:1/2 ;default:0");
    CHECK(w.weight(1) == 1);
    CHECK(w.weight(2) == Q(1, 2));
    CHECK(w.weight(9) == 0);
    CHECK(w.str() == "1:1;2:1/2;default:0");
    CHECK(WeightSpec::parse("default:-3/4").weight(5) == Q(-3, 4));

    for (const char* bad : {"1:1", "default:1;default:2", "0:1;default:1", "x:1;default:0", "1:;default:0",
                            "1:1/0;default:0", "1;default:0", "2:1;2:3;default:0"}) {
        CAPTURE(bad);
        CHECK(error_code_of([&] { (void)WeightSpec::parse(bad); }) == ErrorCode::malformed_weight_spec);
    }
}

TEST_CASE("weighted partition sums")
{
    const WeightSpec ones = WeightSpec::constant(1);
    for (unsigned n = 0; n <= 9; ++n) {
        CHECK(weighted_partition_sum(n, ones) == Rational(bell(n)));
    }
    CHECK(weighted_partition_sum(4, WeightSpec::parse("1:1;2:1;default:0")) == 10);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(weighted_partition_sum(n, WeightSpec::parse("1:1;default:0")) == 1);
    }
    // sum over partitions of 2^{#blocks} is the Touchard polynomial at 2
    CHECK(weighted_partition_sum(3, WeightSpec::constant(2)) == 2 + 3 * 4 + 8);
}

TEST_CASE("bender counts")
{
    const WeightSpec singletons = WeightSpec::parse("1:1;default:0");
    const WeightSpec ones = WeightSpec::constant(1);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(bender_count(n, ones, singletons) == Rational(bell(n)));
        CHECK(bender_count(n, ones, ones) == Rational(bell(n) * bell(n)));
    }
    CHECK(bender_count(4, WeightSpec::parse("1:1;2:1;default:0"), ones) == 150);
}

TEST_CASE("bender count equals enumeration over ordered pairs of partitions")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        const WeightSpec v = random_small_weights(rng);
        const WeightSpec l = random_small_weights(rng);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(bender_count(n, v, l) == paired_partition_count(n, v, l));
        }
    }
}

TEST_CASE("model series bridges the generating function and enumeration")
{
    const WeightSpec singletons = WeightSpec::parse("1:1;default:0");
    const WeightSpec ones = WeightSpec::constant(1);

    CHECK(model_series(ones, singletons, 7).counting_terms() == rationals(ints({1, 1, 2, 5, 15, 52, 203, 877})));
    CHECK(model_series(WeightSpec::constant(0), ones, 6) == constant_series(1, 6));
    CHECK(model_series(WeightSpec::constant(0), WeightSpec::constant(Q(-7, 3)), 6) == constant_series(1, 6));

    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightSpec v = random_small_weights(rng);
        const WeightSpec l = random_small_weights(rng);
        const auto terms = model_series(v, l, 8).counting_terms();
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(terms[n] == bender_count(n, v, l));
        }
    }
    CHECK(error_code_of([&] { (void)model_series(ones, ones, 15); }) == ErrorCode::resource_cap);
}

TEST_CASE("B(n)B(n+1) needs weight 2 on single-line vertices")
{
    const WeightSpec ones = WeightSpec::constant(1);
    const WeightSpec corrected = WeightSpec::parse("1:2;default:1");
    const auto terms = model_series(corrected, ones, 8).counting_terms();
    const auto diamond = diamond_product(bell_series(9), derivative(bell_series(9))).counting_terms();
    for (unsigned n = 0; n <= 8; ++n) {
        const Rational want(bell(n) * bell(n + 1));
        CHECK(terms[n] == want);
        CHECK(diamond[n] == want);
        CHECK(weighted_partition_sum(n, corrected) == Rational(bell(n + 1)));
    }
    CHECK(model_series(corrected, ones, 4).counting_terms() == rationals(ints({1, 2, 10, 75, 780})));

    // Weight 2 on two-line vertices instead gives 3 at n = 2, not B(3) = 5.
    CHECK(weighted_partition_sum(2, WeightSpec::parse("2:2;default:1")) == 3);
}

TEST_CASE("B(n)I(n) from vertices of at most two lines")
{
    const WeightSpec ones = WeightSpec::constant(1);
    const WeightSpec pairs = WeightSpec::parse("1:1;2:1;default:0");
    const auto terms = model_series(pairs, ones, 8).counting_terms();
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(terms[n] == Rational(bell(n) * involution(n)));
    }
}
