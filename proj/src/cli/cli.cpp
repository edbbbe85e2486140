#include "bosonkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "bosonkit/boson.hpp"
#include "bosonkit/egf.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/graph_enum.hpp"
#include "bosonkit/sequences.hpp"
#include "bosonkit/verify.hpp"

namespace bosonkit::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

constexpr mpfr_prec_t default_prec_bits = 256;
// Caps once --unsafe-cap lifts the desk-scale defaults.
constexpr std::size_t unsafe_word_cap = 1u << 12;
constexpr unsigned unsafe_partition_cap = 36;

struct Globals {
    Format format = Format::plain;
    bool unsafe_cap = false;

    [[nodiscard]] std::size_t word_cap() const { return unsafe_cap ? unsafe_word_cap : default_word_cap; }
    [[nodiscard]] unsigned partition_cap() const { return unsafe_cap ? unsafe_partition_cap : default_partition_cap; }
    [[nodiscard]] RewriteOptions rewrite() const
    {
        RewriteOptions o;
        o.max_letters = word_cap();
        return o;
    }
};

mpfr_prec_t env_prec_bits()
{
    const char* raw = std::getenv("BOSONKIT_PREC_BITS");
    if (raw == nullptr || *raw == '\0') {
        return default_prec_bits;
    }
    try {
        std::size_t used = 0;
        const long bits = std::stol(raw, &used);
        if (used != std::string(raw).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return static_cast<mpfr_prec_t>(bits);
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_args, std::string("BOSONKIT_PREC_BITS is not an integer: '") + raw + "'");
    }
}

void emit_json(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

json strings(const std::vector<BigInt>& values)
{
    json arr = json::array();
    for (const auto& v : values) {
        arr.push_back(v.str());
    }
    return arr;
}

void emit_flat_sequence(std::ostream& out, Format format, const std::string& name, unsigned first,
                        const std::vector<BigInt>& values, json params = json::object())
{
    switch (format) {
    case Format::plain:
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i ? " " : "") << values[i];
        }
        out << '\n';
        break;
    case Format::csv:
        out << "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << first + i << ',' << values[i] << '\n';
        }
        break;
    case Format::json:
        emit_json(out, {{"sequence", name}, {"params", std::move(params)}, {"first_n", first}, {"values", strings(values)}});
        break;
    }
}

struct SeqArgs {
    std::string name;
    unsigned max_n = 0;
    std::optional<unsigned> r;
    std::optional<unsigned> s;
};

int cmd_seq(const SeqArgs& a, const Globals& g, std::ostream& out)
{
    if (a.name == "bell") {
        emit_flat_sequence(out, g.format, a.name, 0, bell_numbers(a.max_n));
    } else if (a.name == "involution") {
        std::vector<BigInt> values;
        for (unsigned n = 0; n <= a.max_n; ++n) {
            values.push_back(involution(n));
        }
        emit_flat_sequence(out, g.format, a.name, 0, values);
    } else if (a.name == "bell-rs") {
        if (!a.r || !a.s) {
            throw Error(ErrorCode::invalid_args, "bell-rs needs --r and --s");
        }
        if (*a.s < 1 || *a.r < *a.s) {
            throw Error(ErrorCode::invalid_args, "bell-rs needs r >= s >= 1");
        }
        if (a.max_n < 1) {
            throw Error(ErrorCode::invalid_args, "bell-rs starts at n = 1; use --max-n >= 1");
        }
        std::vector<BigInt> values;
        for (unsigned n = 1; n <= a.max_n; ++n) {
            values.push_back(bell_rs(*a.r, *a.s, n, g.rewrite()));
        }
        emit_flat_sequence(out, g.format, a.name, 1, values, {{"r", *a.r}, {"s", *a.s}});
    } else if (a.name == "stirling") {
        const StirlingTable t = stirling_table(a.max_n);
        json rows = json::array();
        if (g.format == Format::csv) {
            out << "n,k,value\n";
        }
        for (unsigned n = 1; n <= a.max_n; ++n) {
            std::vector<BigInt> row(t.rows[n].begin() + 1, t.rows[n].end());
            if (g.format == Format::plain) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out << (i ? " " : "") << row[i];
                }
                out << '\n';
            } else if (g.format == Format::csv) {
                for (unsigned k = 1; k <= n; ++k) {
                    out << n << ',' << k << ',' << t.at(n, k) << '\n';
                }
            } else {
                rows.push_back({{"n", n}, {"values", strings(row)}});
            }
        }
        if (g.format == Format::json) {
            emit_json(out, {{"sequence", a.name}, {"first_k", 1}, {"rows", std::move(rows)}});
        }
    } else if (a.name == "q-stirling") {
        json rows = json::array();
        if (g.format == Format::csv) {
            out << "n,k,value\n";
        }
        for (unsigned n = 1; n <= a.max_n; ++n) {
            const auto row = q_stirling_row(n, g.rewrite());
            json jrow = json::array();
            bool first = true;
            for (unsigned k = 1; k <= n; ++k) {
                const auto it = row.find(k);
                const QPoly p = it == row.end() ? QPoly{} : it->second;
                if (g.format == Format::plain) {
                    out << (first ? "" : " | ") << p.str();
                } else if (g.format == Format::csv) {
                    out << n << ',' << k << ',' << p.str() << '\n';
                } else {
                    jrow.push_back(strings(p.coeffs()));
                }
                first = false;
            }
            if (g.format == Format::plain) {
                out << '\n';
            } else if (g.format == Format::json) {
                rows.push_back({{"n", n}, {"values", std::move(jrow)}});
            }
        }
        if (g.format == Format::json) {
            emit_json(out, {{"sequence", a.name}, {"first_k", 1}, {"rows", std::move(rows)}});
        }
    } else {
        throw Error(ErrorCode::invalid_args, "unknown sequence '" + a.name + "'");
    }
    return exit_ok;
}

int cmd_normal_order(const std::string& expr, bool q_mode, const Globals& g, std::ostream& out)
{
    const BosonWord w = parse_word(expr);
    NormalForm nf = normal_order(w, g.rewrite());
    if (!q_mode) {
        nf = nf.at_q_one();
    }
    switch (g.format) {
    case Format::plain:
        out << nf.str() << '\n';
        break;
    case Format::csv:
        out << "j,k,coeff\n";
        for (const auto& [m, c] : nf.terms()) {
            out << m.j << ',' << m.k << ',' << c.str() << '\n';
        }
        break;
    case Format::json: {
        json j = to_json(nf);
        j["q_mode"] = q_mode ? "formal" : "canonical";
        emit_json(out, j);
        break;
    }
    }
    return exit_ok;
}

struct GraphArgs {
    unsigned lines = 0;
    std::string vertex;
    std::string origin;
    std::optional<unsigned> series;
};

int cmd_graphs(const GraphArgs& a, const Globals& g, std::ostream& out)
{
    const WeightSpec v = WeightSpec::parse(a.vertex);
    const WeightSpec l = WeightSpec::parse(a.origin);
    const unsigned cap = g.partition_cap();
    const Rational origin_sum = weighted_partition_sum(a.lines, l, cap);
    const Rational vertex_sum = weighted_partition_sum(a.lines, v, cap);
    const Rational count = origin_sum * vertex_sum;

    std::optional<TruncatedEgf> series;
    if (a.series) {
        series = model_series(v, l, *a.series, cap);
    }

    switch (g.format) {
    case Format::plain:
        out << to_string(count) << '\n';
        out << "origin_sum " << to_string(origin_sum) << '\n';
        out << "vertex_sum " << to_string(vertex_sum) << '\n';
        if (series) {
            out << "series";
            for (const auto& t : series->counting_terms()) {
                out << ' ' << to_string(t);
            }
            out << '\n';
        }
        break;
    case Format::csv:
        out << "quantity,value\n";
        out << "count," << to_string(count) << '\n';
        out << "origin_sum," << to_string(origin_sum) << '\n';
        out << "vertex_sum," << to_string(vertex_sum) << '\n';
        if (series) {
            const auto terms = series->counting_terms();
            for (std::size_t n = 0; n < terms.size(); ++n) {
                out << "series_" << n << ',' << to_string(terms[n]) << '\n';
            }
        }
        break;
    case Format::json: {
        json j{{"lines", a.lines},
               {"V", v.str()},
               {"L", l.str()},
               {"count", to_string(count)},
               {"origin_sum", to_string(origin_sum)},
               {"vertex_sum", to_string(vertex_sum)}};
        if (series) {
            json terms = json::array();
            for (const auto& t : series->counting_terms()) {
                terms.push_back(to_string(t));
            }
            j["series"] = {{"counting_terms", std::move(terms)}, {"egf", to_json(*series)}};
        }
        emit_json(out, j);
        break;
    }
    }
    return exit_ok;
}

struct NumericArgs {
    std::string which;
    unsigned n = 0;
    unsigned truncation = 0;
    std::optional<long> prec;
};

int cmd_numeric(const NumericArgs& a, const Globals& g, std::ostream& out)
{
    const mpfr_prec_t prec = a.prec ? static_cast<mpfr_prec_t>(*a.prec) : env_prec_bits();
    NumericResult r = a.which == "dobinski" ? dobinski(a.n, a.truncation, prec)
                      : a.which == "g1"     ? g1_coefficient(a.n, a.truncation, prec)
                                            : g2_coefficient(a.n, a.truncation, prec);
    const json j = to_json(r);
    switch (g.format) {
    case Format::plain:
        out << j["value"].get<std::string>() << " +- " << j["tail_bound"].get<std::string>() << " (" << r.prec_bits()
            << " bits)\n";
        break;
    case Format::csv:
        out << "value,prec_bits,tail_bound\n"
            << j["value"].get<std::string>() << ',' << r.prec_bits() << ',' << j["tail_bound"].get<std::string>() << '\n';
        break;
    case Format::json:
        emit_json(out, j);
        break;
    }
    return exit_ok;
}

struct VerifyArgs {
    unsigned max_n = 8;
    std::optional<long> prec;
    std::string inject_fault;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out)
{
    VerifyOptions opt;
    opt.max_n = a.max_n;
    opt.prec_bits = a.prec ? static_cast<mpfr_prec_t>(*a.prec) : env_prec_bits();
    opt.word_cap = g.word_cap();
    opt.partition_cap = g.partition_cap();
    if (a.inject_fault == "stirling-table") {
        opt.corrupt_stirling_table = true;
    } else if (!a.inject_fault.empty()) {
        throw Error(ErrorCode::invalid_args, "unknown fault '" + a.inject_fault + "'");
    }
    if (opt.prec_bits < min_precision_bits) {
        throw Error(ErrorCode::precision_too_low, "precision must be at least 64 bits");
    }

    const auto results = run_verification(opt);
    const bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

    switch (g.format) {
    case Format::plain:
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.statement << "\n     " << r.detail << '\n';
        }
        out << (all_passed ? "all identities hold" : "verification FAILED") << '\n';
        break;
    case Format::csv:
        out << "identity,passed,detail\n";
        for (const auto& r : results) {
            std::string detail = r.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            out << r.name << ',' << (r.passed ? "true" : "false") << ',' << detail << '\n';
        }
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name}, {"statement", r.statement}, {"passed", r.passed}, {"detail", r.detail}});
        }
        emit_json(out, {{"max_n", opt.max_n}, {"prec_bits", opt.prec_bits}, {"passed", all_passed}, {"identities", arr}});
        break;
    }
    }
    return all_passed ? exit_ok : exit_verification_failed;
}

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::resource_cap:
        return exit_resource_cap;
    case ErrorCode::structure_violation:
        return exit_verification_failed;
    default:
        return exit_usage;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact normal-ordering combinatorics: Stirling/Bell numbers, EGFs and model graph counts", "bosonkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML file mapping long flags to defaults");

    Globals g;
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", g.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("plain");
    app.add_flag("--unsafe-cap", g.unsafe_cap, "Lift word-length, partition and series-order caps");

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print an exact sequence table");
    seq_cmd->add_option("name", seq.name, "bell | stirling | involution | bell-rs | q-stirling")
        ->required()
        ->check(CLI::IsMember({"bell", "stirling", "involution", "bell-rs", "q-stirling"}));
    seq_cmd->add_option("--max-n", seq.max_n, "Largest n")->required();
    seq_cmd->add_option("--r", seq.r, "Creator power r (bell-rs)");
    seq_cmd->add_option("--s", seq.s, "Annihilator power s (bell-rs)");

    std::string expr;
    bool q_mode = false;
    auto* no_cmd = app.add_subcommand("normal-order", "Normal-order a boson expression, e.g. \"(ad a)^2\"");
    no_cmd->add_option("expr", expr, "Expression over a, ad with ^, parentheses and '*'")->required();
    no_cmd->add_flag("--q", q_mode, "Keep q formal (a ad = q ad a + 1) instead of substituting q = 1");

    GraphArgs graphs;
    auto* graphs_cmd = app.add_subcommand("graphs", "Count model graphs on n labeled lines");
    graphs_cmd->add_option("--lines", graphs.lines, "Number of lines n")->required();
    graphs_cmd->add_option("--V", graphs.vertex, "Vertex strengths, e.g. \"1:1;2:1;default:0\"")->required();
    graphs_cmd->add_option("--L", graphs.origin, "Origin multipliers, e.g. \"1:1;default:0\"")->required();
    graphs_cmd->add_option("--series", graphs.series, "Also print the generating-function counting terms to this order");

    NumericArgs numeric;
    auto* num_cmd = app.add_subcommand("numeric", "Enclose a Dobinski-type series coefficient numerically");
    num_cmd->add_option("which", numeric.which, "dobinski | g1 | g2")
        ->required()
        ->check(CLI::IsMember({"dobinski", "g1", "g2"}));
    num_cmd->add_option("--n", numeric.n, "Coefficient index")->required();
    numeric.truncation = 100;
    num_cmd->add_option("--k", numeric.truncation, "Truncation K of the k-sum")->capture_default_str();
    num_cmd->add_option("--prec", numeric.prec, "Binary precision (default $BOSONKIT_PREC_BITS or 256)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-verification battery");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest size checked")->capture_default_str();
    verify_cmd->add_option("--prec", verify.prec, "Binary precision (default $BOSONKIT_PREC_BITS or 256)");
    verify_cmd->add_option("--inject-fault", verify.inject_fault, "Test hook: stirling-table")->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (g.unsafe_cap) {
            err << "warning: --unsafe-cap lifts desk-scale limits; runs may take very long or exhaust memory\n";
        }
        if (*seq_cmd) {
            return cmd_seq(seq, g, out);
        }
        if (*no_cmd) {
            return cmd_normal_order(expr, q_mode, g, out);
        }
        if (*graphs_cmd) {
            return cmd_graphs(graphs, g, out);
        }
        if (*num_cmd) {
            return cmd_numeric(numeric, g, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, g, out);
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace bosonkit::cli
