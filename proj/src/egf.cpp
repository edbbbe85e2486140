#include "bosonkit/egf.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bosonkit/error.hpp"

namespace bosonkit {

TruncatedEgf::TruncatedEgf(std::size_t order) : coeffs_(order + 1) {}

TruncatedEgf::TruncatedEgf(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw Error(ErrorCode::insufficient_terms, "a truncated series needs at least one coefficient");
    }
}

namespace {

template <typename T>
TruncatedEgf from_counts(std::span<const T> counts, std::size_t order)
{
    if (counts.size() < order + 1) {
        throw Error(ErrorCode::insufficient_terms,
                    "counting sequence has " + std::to_string(counts.size()) + " terms, order "
                        + std::to_string(order) + " needs " + std::to_string(order + 1));
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(order + 1);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 1) {
            fact *= n;
        }
        coeffs.emplace_back(Rational(counts[n]) / Rational(fact));
    }
    return TruncatedEgf(std::move(coeffs));
}

std::size_t shared_order(const TruncatedEgf& f, const TruncatedEgf& g)
{
    return std::min(f.order(), g.order());
}

} // namespace

TruncatedEgf TruncatedEgf::from_counting_sequence(std::span<const Rational> counts, std::size_t order)
{
    return from_counts(counts, order);
}

TruncatedEgf TruncatedEgf::from_counting_sequence(std::span<const BigInt> counts, std::size_t order)
{
    return from_counts(counts, order);
}

const Rational& TruncatedEgf::coeff(std::size_t n) const
{
    if (n > order()) {
        throw Error(ErrorCode::index_out_of_range,
                    "index " + std::to_string(n) + " exceeds series order " + std::to_string(order()));
    }
    return coeffs_[n];
}

Rational TruncatedEgf::counting_term(std::size_t n) const
{
    return coeff(n) * Rational(factorial(static_cast<unsigned>(n)));
}

std::vector<Rational> TruncatedEgf::counting_terms() const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (n > 1) {
            fact *= n;
        }
        out.emplace_back(coeffs_[n] * Rational(fact));
    }
    return out;
}

void TruncatedEgf::set_coeff(std::size_t n, Rational value)
{
    if (n > order()) {
        throw Error(ErrorCode::index_out_of_range,
                    "index " + std::to_string(n) + " exceeds series order " + std::to_string(order()));
    }
    coeffs_[n] = std::move(value);
}

TruncatedEgf TruncatedEgf::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw Error(ErrorCode::index_out_of_range, "cannot extend a truncated series");
    }
    return TruncatedEgf(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedEgf constant_series(const Rational& c, std::size_t order)
{
    TruncatedEgf f(order);
    f.set_coeff(0, c);
    return f;
}

TruncatedEgf identity_series(std::size_t order)
{
    TruncatedEgf f(order);
    if (order >= 1) {
        f.set_coeff(1, 1);
    }
    return f;
}

TruncatedEgf exp_x_series(std::size_t order)
{
    std::vector<BigInt> ones(order + 1, BigInt(1));
    return TruncatedEgf::from_counting_sequence(ones, order);
}

TruncatedEgf exp_x_minus_one_series(std::size_t order)
{
    TruncatedEgf f = exp_x_series(order);
    f.set_coeff(0, 0);
    return f;
}

TruncatedEgf bell_series(std::size_t order)
{
    return exp_series(exp_x_minus_one_series(order));
}

TruncatedEgf add(const TruncatedEgf& f, const TruncatedEgf& g)
{
    TruncatedEgf out(shared_order(f, g));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        out.set_coeff(n, f.coeff(n) + g.coeff(n));
    }
    return out;
}

TruncatedEgf sub(const TruncatedEgf& f, const TruncatedEgf& g)
{
    TruncatedEgf out(shared_order(f, g));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        out.set_coeff(n, f.coeff(n) - g.coeff(n));
    }
    return out;
}

TruncatedEgf mul(const TruncatedEgf& f, const TruncatedEgf& g)
{
    const std::size_t order = shared_order(f, g);
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (f.coeff(i) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] += f.coeff(i) * g.coeff(j);
        }
    }
    return TruncatedEgf(std::move(out));
}

TruncatedEgf scale(const TruncatedEgf& f, const Rational& c)
{
    TruncatedEgf out(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        out.set_coeff(n, f.coeff(n) * c);
    }
    return out;
}

TruncatedEgf derivative(const TruncatedEgf& f)
{
    if (f.order() == 0) {
        throw Error(ErrorCode::order_zero, "cannot differentiate an order-0 truncation");
    }
    TruncatedEgf out(f.order() - 1);
    for (std::size_t n = 0; n < f.order(); ++n) {
        out.set_coeff(n, f.coeff(n + 1) * Rational(n + 1));
    }
    return out;
}

TruncatedEgf compose(const TruncatedEgf& outer, const TruncatedEgf& inner)
{
    if (inner.coeff(0) != 0) {
        throw Error(ErrorCode::nonzero_constant_term,
                    "inner series of a composition must vanish at 0, got " + to_string(inner.coeff(0)));
    }
    const std::size_t order = shared_order(outer, inner);
    const TruncatedEgf g = inner.truncated(order);
    // Horner: (((F_N) G + F_{N-1}) G + ...) G + F_0
    TruncatedEgf acc = constant_series(outer.coeff(order), order);
    for (std::size_t i = order; i-- > 0;) {
        acc = mul(acc, g);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(i));
    }
    return acc;
}

TruncatedEgf exp_series(const TruncatedEgf& f)
{
    if (f.coeff(0) != 0) {
        throw Error(ErrorCode::constant_term_violation,
                    "exp_series needs f(0) = 0 (a connected-graph series), got " + to_string(f.coeff(0)));
    }
    // B = exp(f)  =>  B' = f' B  =>  n b_n = sum_{k=1..n} k f_k b_{n-k}
    const std::size_t order = f.order();
    std::vector<Rational> b(order + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f.coeff(k) != 0) {
                acc += Rational(k) * f.coeff(k) * b[n - k];
            }
        }
        b[n] = acc / Rational(n);
    }
    return TruncatedEgf(std::move(b));
}

TruncatedEgf log_series(const TruncatedEgf& f)
{
    if (f.coeff(0) != 1) {
        throw Error(ErrorCode::constant_term_violation,
                    "log_series needs F(0) = 1 (an all-graph series), got " + to_string(f.coeff(0)));
    }
    // g = log F  =>  F' = g' F  =>  n g_n = n F_n - sum_{k=1..n-1} k g_k F_{n-k}
    const std::size_t order = f.order();
    std::vector<Rational> g(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = Rational(n) * f.coeff(n);
        for (std::size_t k = 1; k < n; ++k) {
            acc -= Rational(k) * g[k] * f.coeff(n - k);
        }
        g[n] = acc / Rational(n);
    }
    return TruncatedEgf(std::move(g));
}

TruncatedEgf diamond_product(const TruncatedEgf& a1, const TruncatedEgf& a2)
{
    const std::size_t order = shared_order(a1, a2);
    const auto g1 = a1.counting_terms();
    const auto g2 = a2.counting_terms();
    std::vector<Rational> g3(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        g3[n] = g1[n] * g2[n];
    }
    return TruncatedEgf::from_counting_sequence(std::span<const Rational>(g3), order);
}

TruncatedEgf apply_diff_operator(const TruncatedEgf& a1, const TruncatedEgf& a2)
{
    const std::size_t order = shared_order(a1, a2);
    TruncatedEgf out(order);
    TruncatedEgf d = a2; // d = A2^(n), evaluated at y = 0 through its constant term
    for (std::size_t n = 0; n <= order; ++n) {
        out.set_coeff(n, a1.coeff(n) * d.coeff(0));
        if (n < order) {
            d = derivative(d);
        }
    }
    return out;
}

nlohmann::json to_json(const TruncatedEgf& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back({numerator_of(c).str(), denominator_of(c).str()});
    }
    return {{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedEgf egf_from_json(const nlohmann::json& j)
{
    const auto order = j.at("order").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != order + 1) {
        throw Error(ErrorCode::insufficient_terms, "coeffs must hold exactly order+1 entries");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw Error(ErrorCode::invalid_args, "each coefficient must be a [num, den] pair");
        }
        const BigInt num = parse_bigint(pair[0].get<std::string>());
        const BigInt den = parse_bigint(pair[1].get<std::string>());
        if (den <= 0) {
            throw Error(ErrorCode::invalid_args, "denominator must be positive");
        }
        coeffs.emplace_back(num, den);
    }
    return TruncatedEgf(std::move(coeffs));
}

} // namespace bosonkit
