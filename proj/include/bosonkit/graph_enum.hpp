#ifndef BOSONKIT_GRAPH_ENUM_HPP
#define BOSONKIT_GRAPH_ENUM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bosonkit/egf.hpp"
#include "bosonkit/rational.hpp"

namespace bosonkit {

// Exhaustive runs above this size take desk-scale minutes; callers may pass a larger cap.
inline constexpr unsigned default_partition_cap = 14;

// Partition of the labeled lines {1..n}, encoded as a restricted-growth string:
// rgs[0] = 0 and rgs[i+1] <= 1 + max(rgs[0..i]). Block b holds the lines i with rgs[i] == b.
class SetPartition {
public:
    SetPartition() = default;
    // Throws invalid_args unless rgs is a restricted-growth string.
    explicit SetPartition(std::vector<std::uint8_t> rgs);

    [[nodiscard]] std::size_t size() const noexcept { return rgs_.size(); }
    [[nodiscard]] unsigned block_count() const noexcept { return blocks_; }
    [[nodiscard]] const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }
    [[nodiscard]] std::vector<unsigned> block_sizes() const;

    // One character per line: 0-9 then a-z for blocks 10 and up.
    [[nodiscard]] std::string str() const;
    static SetPartition parse(std::string_view text);

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    friend class SetPartitionStream;

    std::vector<std::uint8_t> rgs_;
    unsigned blocks_ = 0;
};

// Yields every partition of {1..n} once, in lexicographic rgs order.
//
//     SetPartitionStream s(4);
//     while (s.next()) use(s.current());
class SetPartitionStream {
public:
    explicit SetPartitionStream(unsigned n, unsigned cap = default_partition_cap);

    bool next();
    [[nodiscard]] const SetPartition& current() const noexcept { return current_; }

private:
    SetPartition current_;
    // prefix_max_[i] = max(rgs[0..i])
    std::vector<std::uint8_t> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<SetPartition> set_partitions(unsigned n, unsigned cap = default_partition_cap);

template <typename Visitor>
void for_each_set_partition(unsigned n, Visitor&& visit, unsigned cap = default_partition_cap)
{
    SetPartitionStream s(n, cap);
    while (s.next()) {
        visit(s.current());
    }
}

struct ArrowGraphCounts {
    BigInt total;
    std::map<unsigned, BigInt> by_block_count;
};

// n labeled arrows concatenated into lines: every partition is one arrow graph,
// and the block count is the number of lines.
ArrowGraphCounts arrow_graph_counts(unsigned n, unsigned cap = default_partition_cap);

// Block-size weights, e.g. V_s or L_m, with a default for unlisted sizes.
// The reference cases use 0/1 multipliers; any rational is accepted.
class WeightSpec {
public:
    explicit WeightSpec(Rational default_weight = 0, std::map<unsigned, Rational> explicit_weights = {});

    static WeightSpec constant(const Rational& w) { return WeightSpec(w); }

    // "1:1;2:1;default:0": semicolon-separated size:value pairs, default mandatory.
    static WeightSpec parse(std::string_view text);

    [[nodiscard]] const Rational& weight(unsigned size) const;
    [[nodiscard]] const Rational& default_weight() const noexcept { return default_; }
    [[nodiscard]] const std::map<unsigned, Rational>& explicit_weights() const noexcept { return explicit_; }
    [[nodiscard]] std::string str() const;

private:
    Rational default_;
    std::map<unsigned, Rational> explicit_;
};

// sum over partitions of {1..n} of the product of w(|block|) over blocks.
Rational weighted_partition_sum(unsigned n, const WeightSpec& w, unsigned cap = default_partition_cap);

// Graphs on n labeled lines: origin-side grouping weighted by L times vertex-side grouping weighted by V.
Rational bender_count(unsigned n, const WeightSpec& vertex, const WeightSpec& origin,
                      unsigned cap = default_partition_cap);

// The same count by brute force over ordered pairs (origin partition, vertex partition).
Rational paired_partition_count(unsigned n, const WeightSpec& vertex, const WeightSpec& origin,
                                unsigned cap = default_partition_cap);

// exp(sum_s w_s x^s / s!) truncated to order: counting terms are weighted_partition_sum.
TruncatedEgf weight_exponential(const WeightSpec& w, std::size_t order);

// exp(sum L_m x^m/m! d^m/dy^m) exp(sum V_s y^s/s!) at y = 0.
TruncatedEgf model_series(const WeightSpec& vertex, const WeightSpec& origin, std::size_t order,
                          unsigned cap = default_partition_cap);

} // namespace bosonkit

#endif
