#ifndef BOSONKIT_BOSON_HPP
#define BOSONKIT_BOSON_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bosonkit/qpoly.hpp"
#include "bosonkit/rational.hpp"

namespace bosonkit {

enum class Letter : std::uint8_t {
    A,  // annihilator a
    AD, // creator a-dagger
};

// Operator word read left to right: the leftmost letter acts last.
struct BosonWord {
    std::vector<Letter> letters;

    [[nodiscard]] std::size_t size() const noexcept { return letters.size(); }
    [[nodiscard]] std::size_t count(Letter l) const noexcept;
    // "ad a ad a"; the empty word prints as "1".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const BosonWord&, const BosonWord&) = default;
};

// expr := term+ ; term := atom ('^' posint)? ; atom := 'a' | 'ad' | '(' expr ')'
// Whitespace and '*' separate terms. Throws SyntaxError carrying the offset.
BosonWord parse_word(std::string_view text);

BosonWord word_power(const BosonWord& w, unsigned n);

// (a-dagger)^j a^k
struct Monomial {
    unsigned j = 0;
    unsigned k = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class NormalForm {
public:
    using Terms = std::map<Monomial, QPoly>;

    NormalForm() = default;
    NormalForm(std::initializer_list<Terms::value_type> terms);

    // Accumulates; a coefficient that cancels to zero is erased.
    void add(Monomial m, const QPoly& c);

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] QPoly coeff(Monomial m) const;
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    // Canonical boson form: every coefficient replaced by its value at q = 1.
    [[nodiscard]] NormalForm at_q_one() const;

    // Highest monomial first, e.g. "(a†)^2 a^2 + a† a".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    Terms terms_;
};

inline constexpr std::size_t default_word_cap = 24;

// Receives the positions p of every A.AD pair (word[p] == A, word[p+1] == AD)
// and returns an index into that list.
using SiteSelector = std::function<std::size_t(std::span<const std::size_t> sites)>;

struct RewriteOptions {
    std::size_t max_letters = default_word_cap;
    SiteSelector select_site; // empty: leftmost pair
};

// Rewrites A.AD -> q AD.A + 1 until no annihilator precedes a creator.
NormalForm normal_order(const BosonWord& w, const RewriteOptions& options = {});

struct StirlingRow {
    unsigned n = 0;
    std::map<unsigned, BigInt> entries;

    [[nodiscard]] BigInt sum() const;
    friend bool operator==(const StirlingRow&, const StirlingRow&) = default;
};

// S(n, k) read off the normal form of (a-dagger a)^n at q = 1.
StirlingRow stirling_row(unsigned n, const RewriteOptions& options = {});
BigInt stirling(unsigned n, unsigned k, const RewriteOptions& options = {});

std::map<unsigned, QPoly> q_stirling_row(unsigned n, const RewriteOptions& options = {});
QPoly q_stirling(unsigned n, unsigned k, const RewriteOptions& options = {});

struct GeneralizedStirling {
    unsigned prefix_exponent = 0; // n (r - s)
    StirlingRow row;              // k -> S_{r,s}(n, k), s <= k <= n s
    NormalForm normal_form;       // full q-form of [(a-dagger)^r a^s]^n
};

// Throws invalid_args when r < s or any argument is zero, and
// structure_violation if a term escapes the (a-dagger)^{n(r-s)} (a-dagger)^k a^k shape.
GeneralizedStirling generalized_stirling(unsigned r, unsigned s, unsigned n,
                                         const RewriteOptions& options = {});
BigInt bell_rs(unsigned r, unsigned s, unsigned n, const RewriteOptions& options = {});

enum class QMode {
    formal,    // identities in Z[q]
    canonical, // q = 1
};

// Compares w and nf as operators on polynomials of degree < degree_bound under
// a-dagger -> multiplication by z and a -> Jackson derivative D_q.
bool fock_check(const BosonWord& w, const NormalForm& nf, std::size_t degree_bound,
                QMode mode = QMode::formal);

// {"terms":[{"j":J,"k":K,"coeff":["c0","c1",...]}, ...]} sorted by (j, k).
nlohmann::json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j);

} // namespace bosonkit

#endif
