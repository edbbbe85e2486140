#include "bosonkit/bigfloat.hpp"

#include <cstdio>
#include <memory>

namespace bosonkit {

BigFloat::BigFloat(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rounding)
{
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.backend().data(), rounding);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept
{
    swap(*this, other);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

BigFloat BigFloat::inverse_e(mpfr_prec_t bits)
{
    BigFloat out(bits);
    mpfr_set_si(out.value_, -1, MPFR_RNDN);
    mpfr_exp(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::infinity(mpfr_prec_t bits)
{
    BigFloat out(bits);
    mpfr_set_inf(out.value_, 1);
    return out;
}

Rational BigFloat::to_rational() const
{
    Rational out;
    mpfr_get_q(out.backend().data(), value_);
    return out;
}

BigFloat BigFloat::operator*(const BigFloat& other) const
{
    BigFloat out(precision());
    mpfr_mul(out.value_, value_, other.value_, MPFR_RNDN);
    return out;
}

std::string BigFloat::str(int digits, mpfr_rnd_t rounding) const
{
    char* raw = nullptr;
    const char* fmt = "%.*RNg";
    switch (rounding) {
    case MPFR_RNDU: fmt = "%.*RUg"; break;
    case MPFR_RNDD: fmt = "%.*RDg"; break;
    default: break;
    }
    if (mpfr_asprintf(&raw, fmt, digits, value_) < 0) {
        return "nan";
    }
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
    return std::string(raw);
}

} // namespace bosonkit
