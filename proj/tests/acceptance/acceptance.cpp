// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bosonkit/boson.hpp"
#include "bosonkit/egf.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/graph_enum.hpp"
#include "bosonkit/sequences.hpp"

using namespace bosonkit;

namespace {

// Collects the first mismatch; later ones are only counted.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok) {
            if (failures_ == 0) {
                first_ = what;
            }
            ++failures_;
        }
    }
    [[nodiscard]] bool ok() const { return failures_ == 0; }
    [[nodiscard]] std::string summary() const
    {
        std::ostringstream s;
        if (ok()) {
            s << checks_ << " checks";
        } else {
            s << failures_ << "/" << checks_ << " checks failed, first: " << first_;
        }
        return s.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string first_;
};

Rational ten_to_minus(int e)
{
    BigInt p = 1;
    for (int i = 0; i < e; ++i) {
        p *= 10;
    }
    return Rational(BigInt(1), p);
}

std::string at(const char* what, unsigned n)
{
    return std::string(what) + " n=" + std::to_string(n);
}

WeightSpec random_weights(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> value(-3, 3);
    std::uniform_int_distribution<int> listed(0, 4);
    std::uniform_int_distribution<unsigned> size(1, 8);
    std::map<unsigned, Rational> w;
    const int count = listed(rng);
    for (int i = 0; i < count; ++i) {
        w[size(rng)] = value(rng);
    }
    return WeightSpec(Rational(value(rng)), std::move(w));
}

TruncatedEgf random_series(std::mt19937_64& rng, std::size_t order)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    TruncatedEgf f(order);
    for (std::size_t i = 0; i <= order; ++i) {
        f.set_coeff(i, Rational(num(rng), den(rng)));
    }
    return f;
}

void bell_four_way(Check& c)
{
    const std::vector<long> listed{1, 2, 5, 15, 52, 203, 877};
    const TruncatedEgf egf = exp_series(exp_x_minus_one_series(12));
    for (unsigned n = 1; n <= 12; ++n) {
        const BigInt b = bell(n);
        c.expect(Rational(b) == egf.counting_term(n), at("egf", n));
        c.expect(b == bell_rs(1, 1, n), at("rewriting", n));
        c.expect(b == arrow_graph_counts(n).total, at("arrow graphs", n));
        if (n <= 7) {
            c.expect(b == listed[n - 1], at("published value", n));
        }
    }
}

void stirling_three_way(Check& c)
{
    const StirlingTable table = stirling_table(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const StirlingRow rewritten = stirling_row(n);
        const ArrowGraphCounts enumerated = arrow_graph_counts(n);
        for (unsigned k = 1; k <= n; ++k) {
            const auto r = rewritten.entries.find(k);
            const auto e = enumerated.by_block_count.find(k);
            c.expect(r != rewritten.entries.end() && r->second == table.at(n, k), at("rewriting vs recurrence", n));
            c.expect(e != enumerated.by_block_count.end() && e->second == table.at(n, k), at("enumeration vs recurrence", n));
        }
        c.expect(rewritten.entries.size() == n && enumerated.by_block_count.size() == n, at("row support", n));
    }
    c.expect(stirling_row(4).sum() == 15, "row 4 sum");
}

void connected_graphs(Check& c)
{
    const auto terms = log_series(bell_series(10)).counting_terms();
    c.expect(terms.size() == 11, "order");
    for (unsigned n = 1; n < terms.size(); ++n) {
        c.expect(terms[n] == 1, at("c(n)", n));
    }
}

void coefficient_product(Check& c)
{
    std::mt19937_64 rng(2005);
    std::uniform_int_distribution<std::size_t> order(0, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const TruncatedEgf a1 = random_series(rng, order(rng));
        const TruncatedEgf a2 = random_series(rng, order(rng));
        c.expect(apply_diff_operator(a1, a2) == diamond_product(a1, a2), "trial " + std::to_string(trial));
    }
}

void model_bridge(Check& c)
{
    std::mt19937_64 rng(509);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightSpec v = random_weights(rng);
        const WeightSpec l = random_weights(rng);
        const auto terms = model_series(v, l, 8).counting_terms();
        for (unsigned n = 0; n <= 8; ++n) {
            const Rational count = bender_count(n, v, l);
            c.expect(terms[n] == count, "V=" + v.str() + " L=" + l.str() + " n=" + std::to_string(n));
            if (n <= 7) {
                c.expect(count == paired_partition_count(n, v, l),
                         "pairs V=" + v.str() + " L=" + l.str() + " n=" + std::to_string(n));
            }
        }
    }
}

void example_one(Check& c)
{
    const auto start = std::chrono::steady_clock::now();
    const WeightSpec ones = WeightSpec::constant(1);
    const auto terms = model_series(WeightSpec::parse("1:2;default:1"), ones, 8).counting_terms();
    for (unsigned n = 0; n <= 8; ++n) {
        c.expect(terms[n] == Rational(bell(n) * bell(n + 1)), at("model series", n));
    }
    const Rational tol = ten_to_minus(20);
    for (unsigned n = 0; n <= 10; ++n) {
        c.expect(g1_coefficient(n, 80, 256).encloses_within(Rational(bell(n) * bell(n + 1)), tol), at("g1", n));
    }
    c.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(30), "runtime over 30s");
}

void example_two(Check& c)
{
    const WeightSpec ones = WeightSpec::constant(1);
    const auto terms = model_series(WeightSpec::parse("1:1;2:1;default:0"), ones, 8).counting_terms();
    for (unsigned n = 0; n <= 8; ++n) {
        c.expect(terms[n] == Rational(bell(n) * involution(n)), at("model series", n));
    }
    for (unsigned n = 0; n <= 30; ++n) {
        c.expect(involution_from_hermite(n) == involution(n), at("hermite", n));
    }
    const Rational tol = ten_to_minus(20);
    for (unsigned n = 0; n <= 10; ++n) {
        c.expect(g2_coefficient(n, 80, 256).encloses_within(Rational(bell(n) * involution(n)), tol), at("g2", n));
    }
}

void dobinski_sums(Check& c)
{
    const Rational tol = ten_to_minus(20);
    for (unsigned n = 0; n <= 15; ++n) {
        const NumericResult d = dobinski(n, 100, 256);
        c.expect(d.tail_bound.to_rational() < tol, at("tail bound", n));
        c.expect(d.encloses(Rational(bell(n))), at("enclosure", n));
    }
}

void generalized_shape(Check& c)
{
    RewriteOptions opt;
    opt.max_letters = 32;
    for (unsigned r = 1; r <= 4; ++r) {
        for (unsigned s = 1; s <= r; ++s) {
            for (unsigned n = 1; n <= 4; ++n) {
                const std::string tag = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
                const GeneralizedStirling g = generalized_stirling(r, s, n, opt);
                c.expect(g.prefix_exponent == n * (r - s), tag + " prefix");
                for (const auto& [k, v] : g.row.entries) {
                    c.expect(k >= s && k <= n * s && v > 0, tag + " support");
                }
                BosonWord block;
                block.letters.insert(block.letters.end(), r, Letter::AD);
                block.letters.insert(block.letters.end(), s, Letter::A);
                const BosonWord w = word_power(block, n);
                c.expect(fock_check(w, g.normal_form, w.size() + 2), tag + " fock");
            }
        }
    }
}

void q_degeneration(Check& c)
{
    const StirlingTable table = stirling_table(8);
    for (unsigned n = 1; n <= 8; ++n) {
        const auto row = q_stirling_row(n);
        for (unsigned k = 1; k <= n; ++k) {
            const auto it = row.find(k);
            c.expect(it != row.end() && it->second.at_one() == table.at(n, k), at("q = 1", n));
        }
    }

    std::mt19937_64 rng(1957);
    std::uniform_int_distribution<unsigned> length(2, 14);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned len = length(rng);
        BosonWord w;
        for (unsigned i = 0; i < len; ++i) {
            w.letters.push_back(rng() & 1u ? Letter::AD : Letter::A);
        }
        std::mt19937_64 site_rng(rng());
        RewriteOptions random_sites;
        random_sites.select_site = [&](std::span<const std::size_t> sites) {
            return std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(site_rng);
        };
        c.expect(normal_order(w, random_sites) == normal_order(w), "word " + w.str());
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"Bell numbers agree by recurrence, EGF, rewriting and arrow graphs (n <= 12)", bell_four_way},
        {"Stirling rows agree by rewriting, recurrence and enumeration (n <= 12)", stirling_three_way},
        {"log of the Bell EGF has all connected counts 1 (order 10)", connected_graphs},
        {"differential operator equals coefficient product (100 random pairs)", coefficient_product},
        {"model series matches graph enumeration (50 random weight pairs)", model_bridge},
        {"B(n)B(n+1) from weights and from the g1 sum (K=80, 256 bits, 1e-20)", example_one},
        {"B(n)I(n) from weights, Hermite identity, g2 sum (K=80, 256 bits, 1e-20)", example_two},
        {"Dobinski sums enclose B(n) with tail < 1e-20 (n <= 15)", dobinski_sums},
        {"generalized Stirling shape and Jackson check (r, n <= 4)", generalized_shape},
        {"q-Stirling at q = 1 and confluence over 200 strategies", q_degeneration},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << "AC" << i + 1 << ' ' << criteria[i].first << " -- "
                  << c.summary() << ", " << timing << std::endl;
        failed += c.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
