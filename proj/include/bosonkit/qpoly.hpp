#ifndef BOSONKIT_QPOLY_HPP
#define BOSONKIT_QPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bosonkit/rational.hpp"

namespace bosonkit {

// Polynomial in the formal symbol q with integer coefficients, stored densely
// from degree 0 with no trailing zeros (the zero polynomial is empty).
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    QPoly(BigInt c);
    explicit QPoly(std::vector<BigInt> coeffs);

    static QPoly q_power(std::size_t k);
    // [m]_q = 1 + q + ... + q^{m-1}
    static QPoly q_integer(std::size_t m);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] BigInt coeff(std::size_t k) const;

    [[nodiscard]] BigInt evaluate(const BigInt& q) const;
    [[nodiscard]] BigInt at_one() const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    // Multiply by q^k.
    [[nodiscard]] QPoly shifted(std::size_t k) const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    // Human form, e.g. "q^2 + 3q + 1".
    [[nodiscard]] std::string str() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

} // namespace bosonkit

#endif
