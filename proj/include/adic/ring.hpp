#ifndef ADIC_RING_HPP
#define ADIC_RING_HPP

#include <memory>
#include <optional>
#include <vector>

#include "adic/groebner.hpp"
#include "adic/polynomial.hpp"

namespace adic {

/// Working ring R = P/I: a polynomial ring with an optional modulus ideal,
/// held as its reduced Groebner basis. Elements are normal-form
/// representatives. Value type with shared immutable innards.
class Ring {
public:
    Ring() = default;

    /// R = P (zero modulus).
    static Ring polynomial(RingPtr poly);
    /// R = P/<gens>.
    static Ring quotient(RingPtr poly, std::vector<Polynomial> gens);
    /// A_k = base/(base modulus + a^{k+1}); records the level and whether
    /// the graded-local hypothesis holds (zero base modulus, a = all
    /// variables).
    static Ring level_quotient(const Ring& base, const std::vector<Polynomial>& a_gens,
                               int k);

    const RingPtr& poly() const { return rep_->poly; }
    const std::vector<Polynomial>& modulus_gb() const { return rep_->modulus_gb; }
    bool has_modulus() const { return !rep_->modulus_gb.empty(); }
    std::optional<int> level() const { return rep_->level; }
    bool graded_local() const { return rep_->graded_local; }

    ModuleOrder module_order() const { return ModuleOrder{rep_->poly->order(), true}; }

    /// Normal form against the modulus.
    Polynomial nf(const Polynomial& p) const;
    FreeElement nf(const FreeElement& e) const;
    bool is_zero(const Polynomial& p) const { return nf(p).is_zero(); }
    bool is_zero(const FreeElement& e) const { return nf(e).is_zero(); }

    /// Exact unit test: u is a unit of P/I iff 1 lies in I + (u).
    bool is_unit(const Polynomial& u) const;
    /// Inverse of a unit (normal form representative).
    Polynomial unit_inverse(const Polynomial& u) const;

    /// Quotient is a finite-dimensional field iff every variable reduces
    /// to a constant.
    bool is_field() const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string str() const;

private:
    struct Rep {
        RingPtr poly;
        std::vector<Polynomial> modulus_gb;
        std::optional<int> level;
        bool graded_local = false;
    };
    std::shared_ptr<const Rep> rep_;
};

/// All products of e generators (combinations with repetition): the
/// generator set of the e-th power of the ideal.
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, unsigned e);

/// Reduced Groebner basis of an ideal in the pure polynomial ring.
std::vector<Polynomial> ideal_groebner(const RingPtr& ring,
                                       const std::vector<Polynomial>& gens);

} // namespace adic

#endif
