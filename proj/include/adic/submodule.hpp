#ifndef ADIC_SUBMODULE_HPP
#define ADIC_SUBMODULE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "adic/ring.hpp"

namespace adic {

/// Submodule of R^rank over a working ring R = P/I, generated by columns.
/// Computations lift to the polynomial ring by appending the modulus
/// multiples of the free basis. Immutable; caches are built on demand.
class Submodule {
public:
    /// Empty placeholder; usable only after assignment.
    Submodule() = default;
    Submodule(Ring ring, std::size_t rank, std::vector<FreeElement> gens);

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    /// The nonzero input generators, normal-formed.
    const std::vector<FreeElement>& gens() const { return gens_; }

    /// Normal form against the combined basis; zero iff member.
    FreeElement nf(const FreeElement& x) const;
    bool contains(const FreeElement& x) const { return nf(x).is_zero(); }
    bool contains(const Submodule& other) const;
    bool equals(const Submodule& other) const;
    bool is_zero_module() const { return gens_.empty(); }
    /// Whether the submodule is all of R^rank.
    bool is_full() const;

    /// Reduced Groebner basis over R (modulus elements removed).
    const std::vector<FreeElement>& reduced_gb() const;

    /// Coefficients c with x = sum c_j gens[j] in R^rank, if x is a member.
    std::optional<std::vector<Polynomial>> express(const FreeElement& x) const;

    /// Generators of the syzygy module of gens() over R, columns in
    /// R^gens().size(), as a reduced Groebner basis.
    std::vector<FreeElement> syzygies() const;

private:
    struct Cache;
    const Cache& cache() const;

    Ring ring_;
    std::size_t rank_ = 0;
    std::vector<FreeElement> gens_;
    mutable std::shared_ptr<Cache> cache_;
};

/// {x in R^s : sum x_j cols[j] in target}, where cols are columns in the
/// target's ambient free module.
Submodule preimage(const Ring& ring, const std::vector<FreeElement>& cols,
                   const Submodule& target);

/// Kernel of the free map R^s -> R^rank given by columns.
Submodule kernel_submodule(const Ring& ring, std::size_t rank,
                           const std::vector<FreeElement>& cols);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);

/// Prune to a generating subset with no redundant element (minimal in the
/// graded case). Deterministic: degree then module order.
std::vector<FreeElement> minimal_generators(const Ring& ring, std::size_t rank,
                                            std::vector<FreeElement> gens);

} // namespace adic

#endif
