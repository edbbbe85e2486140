#include "bosonkit/rational.hpp"

#include <cctype>

#include "bosonkit/error.hpp"

namespace bosonkit {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::insufficient_terms: return "insufficient-terms";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::order_zero: return "order-zero";
    case ErrorCode::nonzero_constant_term: return "nonzero-constant-term";
    case ErrorCode::constant_term_violation: return "constant-term-violation";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::exponent_zero: return "exponent-zero";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::invalid_args: return "invalid-args";
    case ErrorCode::structure_violation: return "structure-violation";
    case ErrorCode::resource_cap: return "resource-cap";
    case ErrorCode::precision_too_low: return "precision-too-low";
    case ErrorCode::malformed_weight_spec: return "malformed-weight-spec";
    }
    return "unknown";
}

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.backend().data(), n, k);
    return result;
}

bool is_integer(const Rational& r)
{
    return denominator_of(r) == 1;
}

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    if (!is_decimal_integer(text)) {
        throw Error(ErrorCode::invalid_args, "not an integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
        throw Error(ErrorCode::invalid_args, "bad denominator in '" + std::string(text) + "'");
    }
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(den_text);
    if (den == 0) {
        throw Error(ErrorCode::invalid_args, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const BigInt& z)
{
    return z.str();
}

std::string to_string(const Rational& r)
{
    if (is_integer(r)) {
        return numerator_of(r).str();
    }
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

} // namespace bosonkit
