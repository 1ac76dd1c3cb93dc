#ifndef ADIC_GROEBNER_HPP
#define ADIC_GROEBNER_HPP

#include <optional>
#include <vector>

#include "adic/polynomial.hpp"

namespace adic {

/// Order on module monomials (position, monomial). Position 0 ranks
/// highest. pot = position-over-term, otherwise term-over-position.
struct ModuleOrder {
    TermOrder term;
    bool pot = true;

    int compare(std::size_t pa, const Monomial& ma,
                std::size_t pb, const Monomial& mb) const;
};

/// Leading module term of a nonzero free element.
struct ModLead {
    std::size_t pos;
    Monomial mono;
    Scalar coeff;
};

std::optional<ModLead> mod_lead(const FreeElement& f, const ModuleOrder& ord);

struct DivisionResult {
    FreeElement remainder;
    std::vector<Polynomial> quotients;  // empty unless requested
};

/// Multivariate division: f = sum quotients[j]*basis[j] + remainder, no
/// term of the remainder divisible by any leading term of the basis.
/// Deterministic: divisors are tried in order.
DivisionResult divide(const FreeElement& f, const std::vector<FreeElement>& basis,
                      const ModuleOrder& ord, bool want_quotients = false);

struct GroebnerResult {
    /// Reduced Groebner basis: monic, mutually reduced, sorted by
    /// decreasing leading term.
    std::vector<FreeElement> basis;
    /// When tracked: basis[j] = sum_i transform[j][i] * gens[i].
    std::vector<std::vector<Polynomial>> transform;
};

/// Buchberger's algorithm for submodules of a finite free module over the
/// polynomial ring. Normal selection strategy (lcm degree, then order).
GroebnerResult buchberger(const std::vector<FreeElement>& gens, const ModuleOrder& ord,
                          bool track = false);

/// Test-mode post-pass: every S-pair of basis reduces to zero and the
/// basis is reduced (monic, no term divisible by another leading term).
bool verify_buchberger(const std::vector<FreeElement>& basis, const ModuleOrder& ord);

/// Generators of the full syzygy module of the given elements, as columns
/// in P^gens.size() (Schreyer on the reduced basis, transformed back).
/// Zero generators contribute their standard basis vector.
std::vector<FreeElement> syzygy_generators(const std::vector<FreeElement>& gens,
                                           const ModuleOrder& ord);

} // namespace adic

#endif
