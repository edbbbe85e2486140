#include "bosonkit/graph_enum.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "bosonkit/error.hpp"

namespace bosonkit {

namespace {

void require_cap(unsigned n, unsigned cap)
{
    if (n > cap) {
        throw Error(ErrorCode::resource_cap, "n = " + std::to_string(n) + " exceeds the enumeration cap of "
                                                 + std::to_string(cap) + " (override the cap explicitly)");
    }
}

char block_char(unsigned b)
{
    return b < 10 ? static_cast<char>('0' + b) : static_cast<char>('a' + (b - 10));
}

} // namespace

SetPartition::SetPartition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs))
{
    int max_seen = -1;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        if (rgs_[i] > max_seen + 1) {
            throw Error(ErrorCode::invalid_args, "not a restricted-growth string at position " + std::to_string(i));
        }
        max_seen = std::max(max_seen, static_cast<int>(rgs_[i]));
    }
    blocks_ = static_cast<unsigned>(max_seen + 1);
}

std::vector<unsigned> SetPartition::block_sizes() const
{
    std::vector<unsigned> sizes(blocks_);
    for (auto b : rgs_) {
        ++sizes[b];
    }
    return sizes;
}

std::string SetPartition::str() const
{
    std::string out;
    out.reserve(rgs_.size());
    for (auto b : rgs_) {
        out += block_char(b);
    }
    return out;
}

SetPartition SetPartition::parse(std::string_view text)
{
    std::vector<std::uint8_t> rgs;
    rgs.reserve(text.size());
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            rgs.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c >= 'a' && c <= 'z') {
            rgs.push_back(static_cast<std::uint8_t>(c - 'a' + 10));
        } else {
            throw Error(ErrorCode::invalid_args, std::string("bad block symbol '") + c + "'");
        }
    }
    return SetPartition(std::move(rgs));
}

SetPartitionStream::SetPartitionStream(unsigned n, unsigned cap)
{
    require_cap(n, cap);
    if (n > 36) {
        throw Error(ErrorCode::resource_cap, "partitions of more than 36 lines cannot be printed");
    }
    current_.rgs_.assign(n, 0);
    current_.blocks_ = n > 0 ? 1 : 0;
    prefix_max_.assign(n, 0);
}

bool SetPartitionStream::next()
{
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        return true;
    }
    auto& rgs = current_.rgs_;
    // Rightmost position that may still grow.
    std::size_t i = rgs.size();
    while (i-- > 1) {
        if (rgs[i] <= prefix_max_[i - 1]) {
            ++rgs[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs[i]);
            for (std::size_t j = i + 1; j < rgs.size(); ++j) {
                rgs[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            current_.blocks_ = static_cast<unsigned>(prefix_max_.back()) + 1;
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<SetPartition> set_partitions(unsigned n, unsigned cap)
{
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
    return out;
}

ArrowGraphCounts arrow_graph_counts(unsigned n, unsigned cap)
{
    std::vector<std::uint64_t> by_blocks(n + 1);
    for_each_set_partition(n, [&](const SetPartition& p) { ++by_blocks[p.block_count()]; }, cap);

    ArrowGraphCounts out;
    out.total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        if (by_blocks[k] != 0) {
            out.by_block_count.emplace(k, BigInt(by_blocks[k]));
            out.total += by_blocks[k];
        }
    }
    return out;
}

WeightSpec::WeightSpec(Rational default_weight, std::map<unsigned, Rational> explicit_weights)
    : default_(std::move(default_weight)), explicit_(std::move(explicit_weights))
{
    if (explicit_.count(0) != 0) {
        throw Error(ErrorCode::malformed_weight_spec, "block sizes start at 1");
    }
}

const Rational& WeightSpec::weight(unsigned size) const
{
    const auto it = explicit_.find(size);
    return it == explicit_.end() ? default_ : it->second;
}

namespace {

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

WeightSpec WeightSpec::parse(std::string_view text)
{
    auto fail = [&](const std::string& why) -> Error {
        return Error(ErrorCode::malformed_weight_spec, "weight spec '" + std::string(text) + "': " + why);
    };
    std::map<unsigned, Rational> weights;
    std::optional<Rational> fallback;
    std::string_view rest = text;
    while (true) {
        const auto semi = rest.find(';');
        const std::string_view item = strip(rest.substr(0, semi));
        if (!item.empty()) {
            const auto colon = item.find(':');
            if (colon == std::string_view::npos) {
                throw fail("expected size:value in '" + std::string(item) + "'");
            }
            const auto key = strip(item.substr(0, colon));
            const auto value_text = strip(item.substr(colon + 1));
            Rational value;
            try {
                value = parse_rational(value_text);
            } catch (const Error&) {
                throw fail("bad weight '" + std::string(value_text) + "'");
            }
            if (key == "default") {
                if (fallback) {
                    throw fail("default given twice");
                }
                fallback = value;
            } else {
                if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })
                    || key.size() > 6) {
                    throw fail("bad block size '" + std::string(key) + "'");
                }
                const auto size = static_cast<unsigned>(std::stoul(std::string(key)));
                if (size == 0) {
                    throw fail("block sizes start at 1");
                }
                if (!weights.emplace(size, value).second) {
                    throw fail("size " + std::to_string(size) + " given twice");
                }
            }
        }
        if (semi == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(semi + 1);
    }
    if (!fallback) {
        throw fail("missing default:value");
    }
    return WeightSpec(*fallback, std::move(weights));
}

std::string WeightSpec::str() const
{
    std::string out;
    for (const auto& [size, w] : explicit_) {
        out += std::to_string(size) + ":" + to_string(w) + ";";
    }
    return out + "default:" + to_string(default_);
}

namespace {

Rational partition_weight(const SetPartition& p, const WeightSpec& w)
{
    Rational prod = 1;
    for (unsigned size : p.block_sizes()) {
        prod *= w.weight(size);
        if (prod == 0) {
            break;
        }
    }
    return prod;
}

} // namespace

Rational weighted_partition_sum(unsigned n, const WeightSpec& w, unsigned cap)
{
    // Partitions with the same multiset of block sizes share a weight; tally those first.
    std::map<std::vector<unsigned>, std::uint64_t> by_shape;
    for_each_set_partition(
        n,
        [&](const SetPartition& p) {
            auto sizes = p.block_sizes();
            std::sort(sizes.begin(), sizes.end());
            ++by_shape[sizes];
        },
        cap);

    Rational total = 0;
    for (const auto& [sizes, count] : by_shape) {
        Rational prod = Rational(BigInt(count));
        for (unsigned s : sizes) {
            prod *= w.weight(s);
        }
        total += prod;
    }
    return total;
}

Rational bender_count(unsigned n, const WeightSpec& vertex, const WeightSpec& origin, unsigned cap)
{
    return weighted_partition_sum(n, origin, cap) * weighted_partition_sum(n, vertex, cap);
}

Rational paired_partition_count(unsigned n, const WeightSpec& vertex, const WeightSpec& origin, unsigned cap)
{
    std::vector<Rational> origin_weights;
    std::vector<Rational> vertex_weights;
    for_each_set_partition(
        n,
        [&](const SetPartition& p) {
            origin_weights.push_back(partition_weight(p, origin));
            vertex_weights.push_back(partition_weight(p, vertex));
        },
        cap);

    Rational total = 0;
    for (const auto& lw : origin_weights) {
        if (lw == 0) {
            continue;
        }
        for (const auto& vw : vertex_weights) {
            if (vw != 0) {
                total += lw * vw;
            }
        }
    }
    return total;
}

TruncatedEgf weight_exponential(const WeightSpec& w, std::size_t order)
{
    std::vector<Rational> counts(order + 1);
    for (std::size_t s = 1; s <= order; ++s) {
        counts[s] = w.weight(static_cast<unsigned>(s));
    }
    return exp_series(TruncatedEgf::from_counting_sequence(std::span<const Rational>(counts), order));
}

TruncatedEgf model_series(const WeightSpec& vertex, const WeightSpec& origin, std::size_t order, unsigned cap)
{
    if (order > cap) {
        throw Error(ErrorCode::resource_cap, "series order " + std::to_string(order) + " exceeds the cap of "
                                                 + std::to_string(cap));
    }
    return apply_diff_operator(weight_exponential(origin, order), weight_exponential(vertex, order));
}

} // namespace bosonkit
