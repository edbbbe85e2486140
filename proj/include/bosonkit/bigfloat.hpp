#ifndef BOSONKIT_BIGFLOAT_HPP
#define BOSONKIT_BIGFLOAT_HPP

#include <string>

#include <mpfr.h>

#include "bosonkit/rational.hpp"

namespace bosonkit {

// Owning handle to an MPFR value with an explicit binary precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits);
    BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rounding = MPFR_RNDN);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(BigFloat other) noexcept;
    ~BigFloat();

    static BigFloat inverse_e(mpfr_prec_t bits);
    static BigFloat infinity(mpfr_prec_t bits);

    [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    [[nodiscard]] bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

    // Exact: every finite binary float is a dyadic rational.
    [[nodiscard]] Rational to_rational() const;
    [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    // Round-to-nearest product at this value's precision.
    [[nodiscard]] BigFloat operator*(const BigFloat& other) const;

    // Decimal string with the given number of significant digits.
    [[nodiscard]] std::string str(int digits, mpfr_rnd_t rounding = MPFR_RNDN) const;

    [[nodiscard]] mpfr_srcptr get() const noexcept { return value_; }

    friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.value_, b.value_); }

private:
    mpfr_t value_;
};

} // namespace bosonkit

#endif
