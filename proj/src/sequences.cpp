#include "bosonkit/sequences.hpp"

#include <optional>
#include <string>

#include "bosonkit/egf.hpp"
#include "bosonkit/error.hpp"

namespace bosonkit {

std::vector<BigInt> bell_numbers(unsigned n_max)
{
    std::vector<BigInt> b{BigInt(1)};
    b.reserve(n_max + 1);
    for (unsigned n = 0; n < n_max; ++n) {
        BigInt next = 0;
        for (unsigned k = 0; k <= n; ++k) {
            next += binomial(n, k) * b[k];
        }
        b.push_back(std::move(next));
    }
    return b;
}

BigInt bell(unsigned n)
{
    return bell_numbers(n).back();
}

const BigInt& StirlingTable::at(unsigned n, unsigned k) const
{
    if (n >= rows.size() || k > n) {
        throw Error(ErrorCode::out_of_range, "Stirling table has no entry (" + std::to_string(n) + ","
                                                 + std::to_string(k) + ")");
    }
    return rows[n][k];
}

BigInt StirlingTable::row_sum(unsigned n) const
{
    BigInt s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        s += at(n, k);
    }
    return s;
}

StirlingTable stirling_table(unsigned n_max)
{
    StirlingTable t;
    t.rows.reserve(n_max + 1);
    t.rows.push_back({BigInt(1)}); // S(0,0) = 1
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto& prev = t.rows.back();
        std::vector<BigInt> row(n + 1);
        for (unsigned k = 1; k <= n; ++k) {
            const BigInt stay = k < n ? BigInt(k) * prev[k] : BigInt(0);
            row[k] = stay + prev[k - 1];
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

BigInt involution(unsigned n)
{
    BigInt prev = 1; // I(0)
    BigInt cur = 1;  // I(1)
    if (n == 0) {
        return prev;
    }
    for (unsigned m = 2; m <= n; ++m) {
        BigInt next = cur + BigInt(m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

HermitePoly hermite(unsigned n)
{
    HermitePoly prev{0, {BigInt(1)}};
    if (n == 0) {
        return prev;
    }
    HermitePoly cur{1, {BigInt(0), BigInt(2)}};
    for (unsigned m = 1; m < n; ++m) {
        HermitePoly next{m + 1, std::vector<BigInt>(m + 2)};
        for (unsigned j = 0; j <= m; ++j) {
            next.coeffs[j + 1] += 2 * cur.coeffs[j];
        }
        for (unsigned j = 0; j + 1 <= m; ++j) {
            next.coeffs[j] -= BigInt(2 * m) * prev.coeffs[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool hermite_recurrence_holds(const HermitePoly& next, const HermitePoly& current, const HermitePoly& previous)
{
    if (next.n != current.n + 1 || previous.n + 1 != current.n) {
        return false;
    }
    auto at = [](const HermitePoly& h, std::size_t j) {
        return j < h.coeffs.size() ? h.coeffs[j] : BigInt(0);
    };
    const std::size_t width = next.coeffs.size();
    if (width != next.n + 1u || at(next, next.n) == 0) {
        return false;
    }
    for (std::size_t j = 0; j < width; ++j) {
        BigInt rhs = -BigInt(2 * current.n) * at(previous, j);
        if (j > 0) {
            rhs += 2 * at(current, j - 1);
        }
        if (at(next, j) != rhs) {
            return false;
        }
    }
    return true;
}

BigInt involution_from_hermite(unsigned n)
{
    // With x = 1/(sqrt2 i):  x^j / (-sqrt2 i)^n = (-1)^n (sqrt2 i)^{-(n+j)},
    // and (sqrt2 i)^2 = -2, so only j = n (mod 2) survive and each is rational.
    const HermitePoly h = hermite(n);
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        const BigInt& c = h.coeffs[j];
        if (c == 0) {
            continue;
        }
        if ((n + j) % 2 != 0) {
            throw Error(ErrorCode::structure_violation, "Hermite polynomial lost its parity");
        }
        const unsigned t = (n + j) / 2;
        BigInt power = 1;
        for (unsigned i = 0; i < t; ++i) {
            power *= -2;
        }
        sum += Rational(c, power);
    }
    if (n % 2 != 0) {
        sum = -sum;
    }
    if (!is_integer(sum)) {
        throw Error(ErrorCode::structure_violation, "Hermite special value is not an integer: " + to_string(sum));
    }
    return numerator_of(sum);
}

namespace {

void require_numeric_args(unsigned truncation, mpfr_prec_t prec_bits)
{
    if (truncation < 1) {
        throw Error(ErrorCode::invalid_args, "series truncation K must be at least 1");
    }
    if (prec_bits < min_precision_bits) {
        throw Error(ErrorCode::precision_too_low, "precision must be at least "
                                                      + std::to_string(min_precision_bits) + " bits, got "
                                                      + std::to_string(prec_bits));
    }
}

BigInt pow_ui(const BigInt& base, unsigned e)
{
    BigInt out;
    mpz_pow_ui(out.backend().data(), base.backend().data(), e);
    return out;
}

// Upper bound on sum_{k > K} (k + shift)^n / k!. The term ratio
// ((k+1+shift)/(k+shift))^n / (k+1) decreases in k, so the tail is dominated
// by a geometric series once that ratio drops below 1.
std::optional<Rational> tail_sum_bound(unsigned n, unsigned shift, unsigned truncation)
{
    const unsigned first = truncation + 1;
    const Rational t = Rational(pow_ui(BigInt(first + shift), n), factorial(first));
    const Rational ratio = Rational(pow_ui(BigInt(first + 1 + shift), n), pow_ui(BigInt(first + shift), n))
                           / Rational(first + 1);
    if (ratio >= 1) {
        return std::nullopt;
    }
    return t / (1 - ratio);
}

// e^{-1} < 3/8
const Rational& inverse_e_upper()
{
    static const Rational r(3, 8);
    return r;
}

// value = RN(RN(exact_sum) * RN(1/e)); the relative error of three roundings
// stays below 8 ulps of the result.
NumericResult finish(const Rational& exact_sum, const std::optional<Rational>& tail_factor, mpfr_prec_t prec_bits)
{
    const BigFloat sum(exact_sum, prec_bits);
    BigFloat value = sum * BigFloat::inverse_e(prec_bits);
    if (!tail_factor) {
        return NumericResult{std::move(value), BigFloat::infinity(prec_bits)};
    }
    Rational rounding = abs(value.to_rational());
    mpq_div_2exp(rounding.backend().data(), rounding.backend().data(), static_cast<unsigned long>(prec_bits - 3));
    const Rational bound = rounding + inverse_e_upper() * *tail_factor;
    return NumericResult{std::move(value), BigFloat(bound, prec_bits, MPFR_RNDU)};
}

Rational counting_term_of_exp(const TruncatedEgf& inner, unsigned n)
{
    return exp_series(inner).counting_term(n);
}

} // namespace

bool NumericResult::encloses(const Rational& exact) const
{
    if (!tail_bound.is_finite()) {
        return false;
    }
    return abs(value.to_rational() - exact) <= tail_bound.to_rational();
}

bool NumericResult::encloses_within(const Rational& exact, const Rational& tolerance) const
{
    return encloses(exact) && tail_bound.to_rational() <= tolerance;
}

NumericResult dobinski(unsigned n, unsigned truncation, mpfr_prec_t prec_bits)
{
    require_numeric_args(truncation, prec_bits);
    Rational sum = 0;
    BigInt fact = 1;
    for (unsigned k = 0; k <= truncation; ++k) {
        if (k > 1) {
            fact *= k;
        }
        sum += Rational(pow_ui(BigInt(k), n), fact); // 0^0 = 1
    }
    NumericResult r = finish(sum, tail_sum_bound(n, 0, truncation), prec_bits);
    if (!r.tail_bound.is_finite() || r.tail_bound.to_rational() >= Rational(1, 2)) {
        throw Error(ErrorCode::precision_too_low,
                    "Dobinski tail bound " + r.tail_bound.str(6, MPFR_RNDU) + " cannot isolate B("
                        + std::to_string(n) + "); raise K above " + std::to_string(truncation));
    }
    return r;
}

NumericResult g1_coefficient(unsigned n, unsigned truncation, mpfr_prec_t prec_bits)
{
    require_numeric_args(truncation, prec_bits);
    // exp(exp((k+1)x) - 2) = e^{-1} exp(exp((k+1)x) - 1); the k-th coefficient is exact.
    Rational sum = 0;
    Rational c0 = 0;
    BigInt fact = 1;
    for (unsigned k = 0; k <= truncation; ++k) {
        if (k > 1) {
            fact *= k;
        }
        std::vector<BigInt> counts(n + 1);
        for (unsigned m = 1; m <= n; ++m) {
            counts[m] = pow_ui(BigInt(k + 1), m);
        }
        const Rational ck = counting_term_of_exp(TruncatedEgf::from_counting_sequence(std::span<const BigInt>(counts), n), n);
        if (k == 0) {
            c0 = ck;
        }
        sum += ck / Rational(fact);
    }
    // Substituting x -> (k+1)x scales the n-th counting term by (k+1)^n, so c_k = (k+1)^n c_0.
    std::optional<Rational> tail = tail_sum_bound(n, 1, truncation);
    if (tail) {
        *tail *= abs(c0);
    }
    return finish(sum, tail, prec_bits);
}

NumericResult g2_coefficient(unsigned n, unsigned truncation, mpfr_prec_t prec_bits)
{
    require_numeric_args(truncation, prec_bits);
    // exp(kx(1 + kx/2) - 1) = e^{-1} exp(kx + k^2 x^2 / 2).
    Rational sum = 0;
    Rational c1 = 0;
    BigInt fact = 1;
    for (unsigned k = 0; k <= truncation; ++k) {
        if (k > 1) {
            fact *= k;
        }
        TruncatedEgf inner(n);
        if (n >= 1) {
            inner.set_coeff(1, Rational(k));
        }
        if (n >= 2) {
            inner.set_coeff(2, Rational(BigInt(k) * k, 2));
        }
        const Rational ck = counting_term_of_exp(inner, n);
        if (k == 1) {
            c1 = ck;
        }
        sum += ck / Rational(fact);
    }
    // Substituting y = kx: c_k = k^n c_1.
    std::optional<Rational> tail = tail_sum_bound(n, 0, truncation);
    if (tail) {
        *tail *= abs(c1);
    }
    return finish(sum, tail, prec_bits);
}

nlohmann::json to_json(const NumericResult& r)
{
    // Enough significant digits to pin every bit of the value.
    const int digits = static_cast<int>(r.prec_bits() * 30103 / 100000) + 2;
    return {{"value", r.value.str(digits)},
            {"prec_bits", r.prec_bits()},
            {"tail_bound", r.tail_bound.str(6, MPFR_RNDU)}};
}

} // namespace bosonkit
