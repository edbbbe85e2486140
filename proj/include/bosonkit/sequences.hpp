#ifndef BOSONKIT_SEQUENCES_HPP
#define BOSONKIT_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "bosonkit/bigfloat.hpp"
#include "bosonkit/rational.hpp"

namespace bosonkit {

// Reference values computed by recurrences that share no code with the
// rewriting engine, the series engine, or the enumerators.

// B(n) by B(n+1) = sum_k C(n,k) B(k), B(0) = 1.
BigInt bell(unsigned n);
std::vector<BigInt> bell_numbers(unsigned n_max);

// rows[n][k] = S(n,k) for 0 <= k <= n <= n_max, via S(n,k) = k S(n-1,k) + S(n-1,k-1).
struct StirlingTable {
    std::vector<std::vector<BigInt>> rows;

    [[nodiscard]] const BigInt& at(unsigned n, unsigned k) const;
    [[nodiscard]] BigInt row_sum(unsigned n) const;
};
StirlingTable stirling_table(unsigned n_max);

// I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1.
BigInt involution(unsigned n);

// Physicists' Hermite polynomial, coeffs[j] multiplies x^j.
struct HermitePoly {
    unsigned n = 0;
    std::vector<BigInt> coeffs;

    friend bool operator==(const HermitePoly&, const HermitePoly&) = default;
};
HermitePoly hermite(unsigned n);
// H_{n+1} = 2x H_n - 2n H_{n-1}
bool hermite_recurrence_holds(const HermitePoly& next, const HermitePoly& current, const HermitePoly& previous);

// H_n(1/(sqrt(2) i)) / (-sqrt(2) i)^n, evaluated exactly from the coefficients of H_n.
BigInt involution_from_hermite(unsigned n);

// A numeric value with a rigorous enclosure: |value - exact| <= tail_bound.
// tail_bound covers the truncated tail of the series and all rounding.
struct NumericResult {
    BigFloat value;
    BigFloat tail_bound;

    [[nodiscard]] mpfr_prec_t prec_bits() const noexcept { return value.precision(); }
    // Exact comparison of |value - exact| against tail_bound.
    [[nodiscard]] bool encloses(const Rational& exact) const;
    // Same, against min(tail_bound, tolerance).
    [[nodiscard]] bool encloses_within(const Rational& exact, const Rational& tolerance) const;
};

inline constexpr mpfr_prec_t min_precision_bits = 64;

// e^{-1} sum_{k=0}^{K} k^n / k!
NumericResult dobinski(unsigned n, unsigned truncation, mpfr_prec_t prec_bits);

// n-th counting term of sum_{k=0}^{K} (1/k!) exp(exp((k+1)x) - 2); tends to B(n) B(n+1).
NumericResult g1_coefficient(unsigned n, unsigned truncation, mpfr_prec_t prec_bits);

// n-th counting term of sum_{k=0}^{K} (1/k!) exp(kx(1 + kx/2) - 1); tends to B(n) I(n).
NumericResult g2_coefficient(unsigned n, unsigned truncation, mpfr_prec_t prec_bits);

// {"value":"...","prec_bits":256,"tail_bound":"..."}
nlohmann::json to_json(const NumericResult& r);

} // namespace bosonkit

#endif
