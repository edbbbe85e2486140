#include <algorithm>
#include <cctype>
#include <limits>

#include "bosonkit/boson.hpp"
#include "bosonkit/error.hpp"

namespace bosonkit {

namespace {

// Guard against exponent bombs like "(ad a)^999999999"; normal_order has its own, much smaller cap.
constexpr std::size_t max_parsed_letters = 1u << 20;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BosonWord parse()
    {
        BosonWord w;
        w.letters = expr();
        skip_separators();
        if (pos_ < text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return w;
    }

private:
    std::vector<Letter> expr()
    {
        std::vector<Letter> out;
        skip_separators();
        if (!at_term_start()) {
            fail(pos_ < text_.size() ? "expected 'a', 'ad' or '('" : "expected an operator");
        }
        while (at_term_start()) {
            auto t = term();
            if (out.size() + t.size() > max_parsed_letters) {
                throw Error(ErrorCode::resource_cap, "expression expands beyond "
                                                         + std::to_string(max_parsed_letters) + " letters");
            }
            out.insert(out.end(), t.begin(), t.end());
            skip_separators();
        }
        return out;
    }

    std::vector<Letter> term()
    {
        std::vector<Letter> base = atom();
        skip_whitespace();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_whitespace();
            const std::size_t exp_pos = pos_;
            const unsigned long long e = posint();
            if (e == 0) {
                throw SyntaxError(ErrorCode::exponent_zero, exp_pos, "exponent must be positive");
            }
            if (!base.empty() && e > max_parsed_letters / base.size()) {
                throw Error(ErrorCode::resource_cap, "expression expands beyond "
                                                         + std::to_string(max_parsed_letters) + " letters");
            }
            std::vector<Letter> out;
            out.reserve(base.size() * e);
            for (unsigned long long i = 0; i < e; ++i) {
                out.insert(out.end(), base.begin(), base.end());
            }
            return out;
        }
        return base;
    }

    std::vector<Letter> atom()
    {
        if (text_[pos_] == '(') {
            const std::size_t open = pos_;
            ++pos_;
            auto inner = expr();
            skip_separators();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                throw SyntaxError(ErrorCode::syntax_error, pos_ < text_.size() ? pos_ : open,
                                  pos_ < text_.size() ? "expected ')'" : "unclosed '('");
            }
            ++pos_;
            return inner;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const auto ident = text_.substr(start, pos_ - start);
        if (ident == "a") {
            return {Letter::A};
        }
        if (ident == "ad") {
            return {Letter::AD};
        }
        throw SyntaxError(ErrorCode::syntax_error, start, "unknown operator '" + std::string(ident) + "'");
    }

    unsigned long long posint()
    {
        const std::size_t start = pos_;
        unsigned long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const unsigned digit = static_cast<unsigned>(text_[pos_] - '0');
            if (value > (std::numeric_limits<unsigned long long>::max() - digit) / 10) {
                throw Error(ErrorCode::resource_cap, "exponent too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) {
            throw SyntaxError(ErrorCode::syntax_error, start, "expected a positive integer after '^'");
        }
        return value;
    }

    [[nodiscard]] bool at_term_start() const
    {
        return pos_ < text_.size() && (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])));
    }

    void skip_whitespace()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void skip_separators()
    {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw SyntaxError(ErrorCode::syntax_error, pos_, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::size_t BosonWord::count(Letter l) const noexcept
{
    return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), l));
}

std::string BosonWord::str() const
{
    if (letters.empty()) {
        return "1";
    }
    std::string out;
    for (Letter l : letters) {
        if (!out.empty()) {
            out += ' ';
        }
        out += l == Letter::A ? "a" : "ad";
    }
    return out;
}

BosonWord parse_word(std::string_view text)
{
    return Parser(text).parse();
}

BosonWord word_power(const BosonWord& w, unsigned n)
{
    if (n == 0) {
        throw Error(ErrorCode::invalid_args, "word power must be at least 1");
    }
    BosonWord out;
    out.letters.reserve(w.size() * n);
    for (unsigned i = 0; i < n; ++i) {
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    }
    return out;
}

} // namespace bosonkit
