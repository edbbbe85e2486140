#include <algorithm>
#include <string>
#include <utility>

#include "bosonkit/boson.hpp"
#include "bosonkit/error.hpp"

namespace bosonkit {

NormalForm::NormalForm(std::initializer_list<Terms::value_type> terms)
{
    for (const auto& [m, c] : terms) {
        add(m, c);
    }
}

void NormalForm::add(Monomial m, const QPoly& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QPoly NormalForm::coeff(Monomial m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? QPoly{} : it->second;
}

NormalForm NormalForm::at_q_one() const
{
    NormalForm out;
    for (const auto& [m, c] : terms_) {
        out.add(m, QPoly(c.at_one()));
    }
    return out;
}

namespace {

std::string power_str(const char* sym, unsigned e)
{
    if (e == 1) {
        return sym;
    }
    return std::string("(") + sym + ")^" + std::to_string(e);
}

} // namespace

std::string NormalForm::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string ops;
        if (m.j > 0) {
            ops += power_str("a†", m.j);
        }
        if (m.k > 0) {
            if (!ops.empty()) {
                ops += ' ';
            }
            ops += m.k == 1 ? std::string("a") : "a^" + std::to_string(m.k);
        }
        std::string coeff = c.str();
        const bool negative = !coeff.empty() && coeff.front() == '-' && c.coeffs().size() == 1;
        if (negative) {
            coeff.erase(0, 1);
        }
        std::string term;
        if (ops.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = ops;
        } else if (c.coeffs().size() == 1 || coeff.find(' ') == std::string::npos) {
            term = coeff + " " + ops;
        } else {
            term = "(" + coeff + ") " + ops;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

namespace {

// Pending words are drained in order of decreasing inversion count (pairs with
// an A somewhere left of an AD). Both rewrite products have strictly fewer
// inversions than their source, so every distinct word is expanded exactly once.
struct PendingKey {
    std::size_t inversions;
    std::vector<Letter> word;

    friend bool operator<(const PendingKey& x, const PendingKey& y)
    {
        if (x.inversions != y.inversions) {
            return x.inversions > y.inversions;
        }
        return x.word < y.word;
    }
};

std::size_t count_inversions(const std::vector<Letter>& w)
{
    std::size_t seen_a = 0;
    std::size_t inv = 0;
    for (Letter l : w) {
        if (l == Letter::A) {
            ++seen_a;
        } else {
            inv += seen_a;
        }
    }
    return inv;
}

void accumulate(std::map<PendingKey, QPoly>& pending, std::vector<Letter> word, const QPoly& c)
{
    if (c.is_zero()) {
        return;
    }
    PendingKey key{count_inversions(word), std::move(word)};
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            pending.erase(it);
        }
    }
}

} // namespace

NormalForm normal_order(const BosonWord& w, const RewriteOptions& options)
{
    if (w.size() > options.max_letters) {
        throw Error(ErrorCode::resource_cap, "word has " + std::to_string(w.size())
                                                 + " letters, normal-ordering cap is "
                                                 + std::to_string(options.max_letters));
    }
    std::map<PendingKey, QPoly> pending;
    accumulate(pending, w.letters, QPoly(1));

    NormalForm result;
    std::vector<std::size_t> sites;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<Letter>& word = node.key().word;
        const QPoly& coeff = node.mapped();

        if (node.key().inversions == 0) {
            const auto j = static_cast<unsigned>(std::count(word.begin(), word.end(), Letter::AD));
            result.add(Monomial{j, static_cast<unsigned>(word.size()) - j}, coeff);
            continue;
        }

        sites.clear();
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] == Letter::A && word[p + 1] == Letter::AD) {
                sites.push_back(p);
            }
        }
        std::size_t pick = 0;
        if (options.select_site) {
            pick = options.select_site(sites);
            if (pick >= sites.size()) {
                throw Error(ErrorCode::invalid_args, "site selector returned an out-of-range index");
            }
        }
        const std::size_t p = sites[pick];

        // a a† = q a† a + 1
        std::vector<Letter> swapped = word;
        std::swap(swapped[p], swapped[p + 1]);
        accumulate(pending, std::move(swapped), coeff.shifted(1));

        std::vector<Letter> contracted;
        contracted.reserve(word.size() - 2);
        contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
        contracted.insert(contracted.end(), word.begin() + static_cast<std::ptrdiff_t>(p) + 2, word.end());
        accumulate(pending, std::move(contracted), coeff);
    }
    return result;
}

BigInt StirlingRow::sum() const
{
    BigInt s = 0;
    for (const auto& [k, v] : entries) {
        s += v;
    }
    return s;
}

namespace {

const BosonWord& number_operator()
{
    static const BosonWord w{{Letter::AD, Letter::A}};
    return w;
}

void require_stirling_range(unsigned n, unsigned k)
{
    if (k < 1 || k > n) {
        throw Error(ErrorCode::out_of_range,
                    "Stirling index needs 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

} // namespace

std::map<unsigned, QPoly> q_stirling_row(unsigned n, const RewriteOptions& options)
{
    if (n < 1) {
        throw Error(ErrorCode::out_of_range, "Stirling row needs n >= 1");
    }
    const NormalForm nf = normal_order(word_power(number_operator(), n), options);
    std::map<unsigned, QPoly> row;
    for (const auto& [m, c] : nf.terms()) {
        if (m.j != m.k) {
            throw Error(ErrorCode::structure_violation, "(a† a)^n produced an unbalanced term");
        }
        row.emplace(m.k, c);
    }
    return row;
}

QPoly q_stirling(unsigned n, unsigned k, const RewriteOptions& options)
{
    require_stirling_range(n, k);
    const auto row = q_stirling_row(n, options);
    const auto it = row.find(k);
    return it == row.end() ? QPoly{} : it->second;
}

StirlingRow stirling_row(unsigned n, const RewriteOptions& options)
{
    StirlingRow row{n, {}};
    for (const auto& [k, c] : q_stirling_row(n, options)) {
        row.entries.emplace(k, c.at_one());
    }
    return row;
}

BigInt stirling(unsigned n, unsigned k, const RewriteOptions& options)
{
    require_stirling_range(n, k);
    const auto row = stirling_row(n, options);
    const auto it = row.entries.find(k);
    return it == row.entries.end() ? BigInt(0) : it->second;
}

GeneralizedStirling generalized_stirling(unsigned r, unsigned s, unsigned n, const RewriteOptions& options)
{
    if (s < 1 || n < 1) {
        throw Error(ErrorCode::invalid_args, "generalized Stirling numbers need r >= s >= 1 and n >= 1");
    }
    if (r < s) {
        throw Error(ErrorCode::invalid_args, "generalized Stirling numbers need r >= s, got r="
                                                 + std::to_string(r) + " s=" + std::to_string(s));
    }
    BosonWord base;
    base.letters.assign(r, Letter::AD);
    base.letters.insert(base.letters.end(), s, Letter::A);

    GeneralizedStirling out;
    out.prefix_exponent = n * (r - s);
    out.row.n = n;
    out.normal_form = normal_order(word_power(base, n), options);

    for (const auto& [m, c] : out.normal_form.terms()) {
        const BigInt value = c.at_one();
        if (value == 0) {
            continue;
        }
        if (m.j != out.prefix_exponent + m.k || m.k < s || m.k > n * s) {
            throw Error(ErrorCode::structure_violation,
                        "term (a†)^" + std::to_string(m.j) + " a^" + std::to_string(m.k)
                            + " does not fit (a†)^" + std::to_string(out.prefix_exponent)
                            + " (a†)^k a^k with " + std::to_string(s) + " <= k <= " + std::to_string(n * s));
        }
        out.row.entries.emplace(m.k, value);
    }
    return out;
}

BigInt bell_rs(unsigned r, unsigned s, unsigned n, const RewriteOptions& options)
{
    return generalized_stirling(r, s, n, options).row.sum();
}

nlohmann::json to_json(const NormalForm& nf)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : nf.terms()) {
        nlohmann::json coeff = nlohmann::json::array();
        for (const auto& v : c.coeffs()) {
            coeff.push_back(v.str());
        }
        terms.push_back({{"j", m.j}, {"k", m.k}, {"coeff", std::move(coeff)}});
    }
    return {{"terms", std::move(terms)}};
}

NormalForm normal_form_from_json(const nlohmann::json& j)
{
    NormalForm nf;
    for (const auto& t : j.at("terms")) {
        std::vector<BigInt> coeffs;
        for (const auto& v : t.at("coeff")) {
            coeffs.push_back(parse_bigint(v.get<std::string>()));
        }
        QPoly c(std::move(coeffs));
        if (c.is_zero()) {
            throw Error(ErrorCode::invalid_args, "normal form JSON stores a zero coefficient");
        }
        nf.add(Monomial{t.at("j").get<unsigned>(), t.at("k").get<unsigned>()}, c);
    }
    return nf;
}

} // namespace bosonkit
