#ifndef BOSONKIT_ERROR_HPP
#define BOSONKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bosonkit {

enum class ErrorCode {
    insufficient_terms,
    index_out_of_range,
    order_zero,
    nonzero_constant_term,
    constant_term_violation,
    syntax_error,
    exponent_zero,
    out_of_range,
    invalid_args,
    structure_violation,
    resource_cap,
    precision_too_low,
    malformed_weight_spec,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(ErrorCode code, std::size_t position, const std::string& what)
        : Error(code, what + " at position " + std::to_string(position)),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace bosonkit

#endif
