#ifndef BOSONKIT_EGF_HPP
#define BOSONKIT_EGF_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

#include "bosonkit/rational.hpp"

namespace bosonkit {

// Prefix a_0..a_N of an exponential generating function G(x) = sum g(n) x^n / n!.
// Coefficients are the ordinary Taylor coefficients a_n; the counting view is
// g(n) = n! a_n. Every binary operation truncates to the smaller order.
class TruncatedEgf {
public:
    // The zero series of the given order.
    explicit TruncatedEgf(std::size_t order = 0);
    explicit TruncatedEgf(std::vector<Rational> coeffs);

    static TruncatedEgf from_counting_sequence(std::span<const Rational> counts, std::size_t order);
    static TruncatedEgf from_counting_sequence(std::span<const BigInt> counts, std::size_t order);

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& coeff(std::size_t n) const;
    [[nodiscard]] Rational counting_term(std::size_t n) const;
    [[nodiscard]] std::vector<Rational> counting_terms() const;
    [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    void set_coeff(std::size_t n, Rational value);
    [[nodiscard]] TruncatedEgf truncated(std::size_t order) const;

    friend bool operator==(const TruncatedEgf&, const TruncatedEgf&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Named series used throughout.
TruncatedEgf constant_series(const Rational& c, std::size_t order);
TruncatedEgf identity_series(std::size_t order);       // x
TruncatedEgf exp_x_series(std::size_t order);          // e^x, counting terms all 1
TruncatedEgf exp_x_minus_one_series(std::size_t order); // e^x - 1
TruncatedEgf bell_series(std::size_t order);           // exp(e^x - 1)

TruncatedEgf add(const TruncatedEgf& f, const TruncatedEgf& g);
TruncatedEgf sub(const TruncatedEgf& f, const TruncatedEgf& g);
TruncatedEgf mul(const TruncatedEgf& f, const TruncatedEgf& g);
TruncatedEgf scale(const TruncatedEgf& f, const Rational& c);

TruncatedEgf derivative(const TruncatedEgf& f);

// F(G(x)); requires G(0) = 0.
TruncatedEgf compose(const TruncatedEgf& outer, const TruncatedEgf& inner);

// Connected-graph map: all-graph EGF from a connected-graph EGF (f(0) = 0).
TruncatedEgf exp_series(const TruncatedEgf& f);
// Inverse map; requires F(0) = 1.
TruncatedEgf log_series(const TruncatedEgf& f);

// Pointwise product of counting sequences: g3(n) = g1(n) g2(n).
TruncatedEgf diamond_product(const TruncatedEgf& a1, const TruncatedEgf& a2);

// Literal evaluation of A1(x d/dy) A2(y) at y = 0: sum_n [x^n]A1 * x^n * A2^(n)(0).
// Agrees with diamond_product; the two are computed along unrelated paths.
TruncatedEgf apply_diff_operator(const TruncatedEgf& a1, const TruncatedEgf& a2);

// {"order": N, "coeffs": [["num","den"], ...]}
nlohmann::json to_json(const TruncatedEgf& f);
TruncatedEgf egf_from_json(const nlohmann::json& j);

} // namespace bosonkit

#endif
