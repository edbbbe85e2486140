#include <vector>

#include "bosonkit/boson.hpp"
#include "bosonkit/error.hpp"

namespace bosonkit {

namespace {

// Polynomial in z with Z[q] coefficients, indexed by degree.
using ZPoly = std::vector<QPoly>;

void trim(ZPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

QPoly bracket(std::size_t m, QMode mode)
{
    return mode == QMode::formal ? QPoly::q_integer(m) : QPoly(static_cast<long>(m));
}

ZPoly apply_letter(Letter l, const ZPoly& p, QMode mode)
{
    if (p.empty()) {
        return {};
    }
    if (l == Letter::AD) {
        ZPoly out(p.size() + 1);
        for (std::size_t m = 0; m < p.size(); ++m) {
            out[m + 1] = p[m];
        }
        return out;
    }
    // D_q z^m = [m]_q z^{m-1}
    ZPoly out(p.size() - 1);
    for (std::size_t m = 1; m < p.size(); ++m) {
        if (!p[m].is_zero()) {
            out[m - 1] = p[m] * bracket(m, mode);
        }
    }
    trim(out);
    return out;
}

ZPoly apply_word(const std::vector<Letter>& letters, ZPoly p, QMode mode)
{
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        p = apply_letter(*it, p, mode);
    }
    return p;
}

ZPoly basis(std::size_t m)
{
    ZPoly p(m + 1);
    p[m] = QPoly(1);
    return p;
}

} // namespace

bool fock_check(const BosonWord& w, const NormalForm& nf, std::size_t degree_bound, QMode mode)
{
    if (degree_bound < 1) {
        throw Error(ErrorCode::invalid_args, "fock_check needs a degree bound of at least 1");
    }
    for (std::size_t m = 0; m < degree_bound; ++m) {
        const ZPoly lhs = apply_word(w.letters, basis(m), mode);

        ZPoly rhs;
        for (const auto& [mono, c] : nf.terms()) {
            std::vector<Letter> letters(mono.j, Letter::AD);
            letters.insert(letters.end(), mono.k, Letter::A);
            ZPoly term = apply_word(letters, basis(m), mode);
            const QPoly coeff = mode == QMode::formal ? c : QPoly(c.at_one());
            if (term.size() > rhs.size()) {
                rhs.resize(term.size());
            }
            for (std::size_t d = 0; d < term.size(); ++d) {
                rhs[d] += term[d] * coeff;
            }
        }
        trim(rhs);
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

} // namespace bosonkit
