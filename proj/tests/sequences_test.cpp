#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "bosonkit/egf.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/sequences.hpp"
#include "test_support.hpp"

using namespace bosonkit;
using namespace bosonkit::testing;

namespace {

Rational ten_to_minus(int e)
{
    BigInt p = 1;
    for (int i = 0; i < e; ++i) {
        p *= 10;
    }
    return Rational(BigInt(1), p);
}

// Brute force: count permutations that are their own inverse.
unsigned long count_involutions(unsigned n)
{
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    unsigned long count = 0;
    do {
        bool self_inverse = true;
        for (unsigned i = 0; i < n && self_inverse; ++i) {
            self_inverse = p[p[i]] == i;
        }
        count += self_inverse ? 1 : 0;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace

TEST_CASE("Bell numbers by the binomial recurrence")
{
    CHECK(bell(0) == 1);
    CHECK(bell_numbers(7) == ints({1, 1, 2, 5, 15, 52, 203, 877}));
    CHECK(bell(10) == 115975);
    CHECK(bell(15) == 1382958545);

    const StirlingTable t = stirling_table(20);
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(bell(n) == t.row_sum(n));
    }
}

TEST_CASE("Stirling table")
{
    const StirlingTable t = stirling_table(12);
    CHECK(t.at(4, 1) == 1);
    CHECK(t.at(4, 2) == 7);
    CHECK(t.at(4, 3) == 6);
    CHECK(t.at(4, 4) == 1);
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(t.at(n, 1) == 1);
        CHECK(t.at(n, n) == 1);
        CHECK(t.at(n, 0) == 0);
    }
    CHECK(error_code_of([&] { (void)t.at(13, 1); }) == ErrorCode::out_of_range);
    CHECK(error_code_of([&] { (void)t.at(3, 4); }) == ErrorCode::out_of_range);
}

TEST_CASE("involution numbers")
{
    CHECK(involution(0) == 1);
    std::vector<BigInt> first;
    for (unsigned n = 1; n <= 6; ++n) {
        first.push_back(involution(n));
    }
    CHECK(first == ints({1, 2, 4, 10, 26, 76}));
    CHECK(involution(8) == 764);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(involution(n) == BigInt(count_involutions(n)));
    }
    // EGF exp(x + x^2/2)
    TruncatedEgf inner(12);
    inner.set_coeff(1, 1);
    inner.set_coeff(2, Q(1, 2));
    const auto terms = exp_series(inner).counting_terms();
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(terms[n] == Rational(involution(n)));
    }
}

TEST_CASE("Hermite polynomials")
{
    CHECK(hermite(0).coeffs == ints({1}));
    CHECK(hermite(1).coeffs == ints({0, 2}));
    CHECK(hermite(2).coeffs == ints({-2, 0, 4}));
    CHECK(hermite(4).coeffs == ints({12, 0, -48, 0, 16}));
    for (unsigned n = 1; n < 30; ++n) {
        CHECK(hermite_recurrence_holds(hermite(n + 1), hermite(n), hermite(n - 1)));
    }
    HermitePoly broken = hermite(5);
    broken.coeffs[1] += 1;
    CHECK_FALSE(hermite_recurrence_holds(broken, hermite(4), hermite(3)));
}

TEST_CASE("involution numbers as Hermite special values")
{
    CHECK(involution_from_hermite(4) == 10);
    CHECK(involution_from_hermite(0) == 1);
    CHECK(involution_from_hermite(10) == 9496);
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(involution_from_hermite(n) == involution(n));
    }
}

TEST_CASE("Dobinski sums enclose the Bell numbers")
{
    const NumericResult b7 = dobinski(7, 100, 256);
    CHECK(b7.prec_bits() == 256);
    CHECK(b7.encloses_within(Rational(877), ten_to_minus(30)));

    const NumericResult b0 = dobinski(0, 100, 256);
    CHECK(b0.encloses(Rational(1)));

    const NumericResult b15 = dobinski(15, 100, 256);
    CHECK(b15.encloses_within(Rational(1382958545), ten_to_minus(20)));

    for (unsigned n = 0; n <= 15; ++n) {
        const NumericResult d = dobinski(n, 100, 256);
        CHECK(d.encloses_within(Rational(bell(n)), ten_to_minus(20)));
        CHECK_FALSE(d.encloses(Rational(bell(n)) + Q(1, 1000)));
    }
}

TEST_CASE("Dobinski argument checks")
{
    CHECK(error_code_of([] { (void)dobinski(3, 100, 32); }) == ErrorCode::precision_too_low);
    CHECK(error_code_of([] { (void)dobinski(3, 0, 256); }) == ErrorCode::invalid_args);
    // Too few terms to isolate an integer.
    CHECK(error_code_of([] { (void)dobinski(15, 5, 256); }) == ErrorCode::precision_too_low);
}

TEST_CASE("G1 coefficients converge to B(n) B(n+1)")
{
    CHECK(g1_coefficient(0, 80, 256).encloses_within(Rational(1), ten_to_minus(20)));
    CHECK(g1_coefficient(1, 80, 256).encloses_within(Rational(2), ten_to_minus(20)));
    CHECK(g1_coefficient(4, 80, 256).encloses_within(Rational(780), ten_to_minus(25)));
    for (unsigned n = 0; n <= 10; ++n) {
        const NumericResult g = g1_coefficient(n, 80, 256);
        CHECK(g.encloses_within(Rational(bell(n) * bell(n + 1)), ten_to_minus(20)));
    }
    // Few terms: the enclosure widens but stays honest.
    const NumericResult rough = g1_coefficient(3, 6, 128);
    CHECK(rough.encloses(Rational(75)));
}

TEST_CASE("G2 coefficients converge to B(n) I(n)")
{
    CHECK(g2_coefficient(0, 80, 256).encloses_within(Rational(1), ten_to_minus(20)));
    CHECK(g2_coefficient(2, 80, 256).encloses_within(Rational(4), ten_to_minus(25)));
    CHECK(g2_coefficient(4, 80, 256).encloses_within(Rational(150), ten_to_minus(25)));
    for (unsigned n = 0; n <= 10; ++n) {
        const NumericResult g = g2_coefficient(n, 80, 256);
        CHECK(g.encloses_within(Rational(bell(n) * involution(n)), ten_to_minus(20)));
    }
    const NumericResult rough = g2_coefficient(4, 8, 128);
    CHECK(rough.encloses(Rational(150)));
}

TEST_CASE("numeric result JSON")
{
    const nlohmann::json j = to_json(dobinski(7, 100, 256));
    CHECK(j["prec_bits"] == 256);
    const std::string value = j["value"];
    CHECK((value.rfind("877", 0) == 0 || value.rfind("876.99999999", 0) == 0));
    CHECK(j["tail_bound"].is_string());
}
