// Test-only oracles, independent of the Groebner path they check.
#ifndef ADIC_TESTS_ORACLE_HPP
#define ADIC_TESTS_ORACLE_HPP

#include <map>
#include <vector>

#include "adic/polynomial.hpp"

namespace adic::oracle {

// All monomials in nvars variables of total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    while (true) {
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (deg <= d) out.push_back(Monomial(std::vector<std::uint32_t>(e)));
        std::size_t v = 0;
        while (v < nvars) {
            if (++e[v] <= d) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return out;
}

// Exhaustive membership: is f = sum h_i g_i solvable with deg h_i <= d?
// Sets up the exact linear system over the field in the unknown
// coefficients of the h_i and runs Gaussian elimination. A "true" answer
// is a constructive certificate; "false" only rules out cofactor degrees
// up to d.
inline bool exhaustive_membership(const Polynomial& f,
                                  const std::vector<Polynomial>& gens, unsigned d) {
    const RingPtr ring = f.ring();
    const Field field = ring->field();
    std::vector<Monomial> cof = monomials_up_to(ring->nvars(), d);

    // column index: (generator, cofactor monomial)
    struct Col {
        std::size_t gen;
        std::size_t mono;
    };
    std::vector<Col> cols;
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t m = 0; m < cof.size(); ++m) cols.push_back({g, m});

    // row index: every monomial appearing in any product or in f
    std::map<std::vector<std::uint32_t>, std::size_t> rows;
    auto row_of = [&](const Monomial& m) {
        std::vector<std::uint32_t> key;
        for (std::size_t i = 0; i < m.nvars(); ++i) key.push_back(m.exponent(i));
        auto it = rows.find(key);
        if (it != rows.end()) return it->second;
        std::size_t idx = rows.size();
        rows[key] = idx;
        return idx;
    };

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> colentries(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Polynomial& g = gens[cols[c].gen];
        const Monomial& m = cof[cols[c].mono];
        for (const auto& t : g.terms())
            colentries[c].push_back({row_of(t.mono * m), t.coeff});
    }
    std::vector<std::pair<std::size_t, Scalar>> rhs;
    for (const auto& t : f.terms()) rhs.push_back({row_of(t.mono), t.coeff});

    const std::size_t R = rows.size(), C = cols.size();
    // dense augmented matrix
    std::vector<std::vector<Scalar>> A(R, std::vector<Scalar>(C + 1, Scalar::zero(field)));
    for (std::size_t c = 0; c < C; ++c)
        for (const auto& [r, v] : colentries[c]) A[r][c] = A[r][c] + v;
    for (const auto& [r, v] : rhs) A[r][C] = A[r][C] + v;

    // Gaussian elimination; solvable iff no pivot in the last column
    std::size_t prow = 0;
    for (std::size_t pc = 0; pc < C && prow < R; ++pc) {
        std::size_t sel = prow;
        while (sel < R && A[sel][pc].is_zero()) ++sel;
        if (sel == R) continue;
        std::swap(A[prow], A[sel]);
        Scalar inv = A[prow][pc].inverse();
        for (std::size_t c = pc; c <= C; ++c) A[prow][c] = A[prow][c] * inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == prow || A[r][pc].is_zero()) continue;
            Scalar factor = A[r][pc];
            for (std::size_t c = pc; c <= C; ++c)
                A[r][c] = A[r][c] - factor * A[prow][c];
        }
        ++prow;
    }
    for (std::size_t r = 0; r < R; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < C; ++c)
            if (!A[r][c].is_zero()) { all_zero = false; break; }
        if (all_zero && !A[r][C].is_zero()) return false;
    }
    return true;
}

} // namespace adic::oracle

#endif
