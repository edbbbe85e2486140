#ifndef BOSONKIT_VERIFY_HPP
#define BOSONKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <mpfr.h>

#include "bosonkit/boson.hpp"
#include "bosonkit/graph_enum.hpp"

namespace bosonkit {

struct VerifyOptions {
    unsigned max_n = 8;
    mpfr_prec_t prec_bits = 256;
    unsigned truncation = 80;          // K for the G1/G2 coefficient sums
    unsigned dobinski_truncation = 100;
    std::uint64_t seed = 20050101;
    std::size_t word_cap = default_word_cap;
    unsigned partition_cap = default_partition_cap;

    // Test hook: perturb one entry of the recurrence Stirling table so the
    // Stirling consistency identity must fail.
    bool corrupt_stirling_table = false;
};

struct IdentityResult {
    std::string name;      // short id, e.g. "stirling-consistency"
    std::string statement; // the identity being checked
    bool passed = false;
    std::string detail;    // first mismatch, or a summary of what was checked
};

std::vector<IdentityResult> run_verification(const VerifyOptions& options);

} // namespace bosonkit

#endif
