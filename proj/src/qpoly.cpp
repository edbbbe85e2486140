#include "bosonkit/qpoly.hpp"

#include <algorithm>
#include <utility>

namespace bosonkit {

QPoly::QPoly(long c) : QPoly(BigInt(c)) {}

QPoly::QPoly(BigInt c)
{
    if (c != 0) {
        coeffs_.push_back(std::move(c));
    }
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::q_power(std::size_t k)
{
    std::vector<BigInt> c(k + 1);
    c[k] = 1;
    return QPoly(std::move(c));
}

QPoly QPoly::q_integer(std::size_t m)
{
    return QPoly(std::vector<BigInt>(m, BigInt(1)));
}

BigInt QPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt QPoly::evaluate(const BigInt& q) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

BigInt QPoly::at_one() const
{
    BigInt acc = 0;
    for (const auto& c : coeffs_) {
        acc += c;
    }
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly QPoly::shifted(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<BigInt> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(c));
}

std::string QPoly::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) {
            out += mag.str();
        }
        if (i >= 1) {
            out += "q";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

} // namespace bosonkit
