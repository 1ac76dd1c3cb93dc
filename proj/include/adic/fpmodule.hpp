#ifndef ADIC_FPMODULE_HPP
#define ADIC_FPMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "adic/submodule.hpp"

namespace adic {

/// Finitely presented module M = coker(R^s -> R^rank): columns of the
/// relation matrix are the relations.
struct FPModule {
    Ring ring;
    std::size_t rank = 0;
    std::vector<FreeElement> relations;
    std::vector<int> shifts;  // grading shifts per generator; empty = all zero

    FPModule() = default;
    FPModule(Ring r, std::size_t rk, std::vector<FreeElement> rels,
             std::vector<int> sh = {});

    static FPModule free_module(const Ring& r, std::size_t rk);
    /// Cyclic module R/<gens>.
    static FPModule cyclic(const Ring& r, const std::vector<Polynomial>& gens);
    static FPModule zero(const Ring& r) { return free_module(r, 0); }

    Submodule relation_submodule() const { return Submodule(ring, rank, relations); }
    bool is_zero_module() const;

    FPModule direct_sum(const FPModule& o) const;
    /// Same presentation read over a finer quotient of the same
    /// polynomial ring (e.g. A -> A_k); relations are re-normal-formed.
    FPModule base_change(const Ring& target) const;

    std::string str() const;
};

/// M (x) N via the block presentation on generators e_i (x) f_j.
FPModule tensor_modules(const FPModule& m, const FPModule& n);

/// Subquotient (N + D)/D of R^ambient presented on the numerator
/// generators that survive modulo D, with representative bookkeeping.
class Subquotient {
public:
    /// Empty placeholder; usable only after assignment.
    Subquotient() = default;
    Subquotient(Ring ring, std::size_t ambient_rank,
                std::vector<FreeElement> numerator_gens,
                std::vector<FreeElement> denominator_gens);

    const Ring& ring() const { return ring_; }
    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<FreeElement>& gen_reps() const { return gen_reps_; }
    const FPModule& presentation() const { return pres_; }
    const Submodule& denominator() const { return denom_; }
    bool is_zero() const { return gen_reps_.empty(); }

    /// Membership of x in numerator + denominator.
    bool contains(const FreeElement& x) const;
    /// Coefficients on gen_reps with x = sum c_j rep_j modulo the
    /// denominator, when x is contained.
    std::optional<std::vector<Polynomial>> express(const FreeElement& x) const;

private:
    Ring ring_;
    std::size_t ambient_rank_ = 0;
    std::vector<FreeElement> gen_reps_;
    Submodule denom_;
    Submodule combined_;  // gen_reps ++ denominator gens
    FPModule pres_;
};

/// Presentation of ker(R^s -> R^rank), the map given by columns.
Subquotient kernel_of_map(const Ring& ring, std::size_t rank,
                          const std::vector<FreeElement>& cols);

/// (0 :_M J) as a subquotient of M's ambient free module.
Subquotient colon_annihilator(const FPModule& m, const std::vector<Polynomial>& ideal_gens);

/// Total dimension over the base field, if finite.
std::optional<unsigned long> k_dimension(const FPModule& m);
/// Dimensions of the graded pieces in degrees 0..max_degree (generator
/// shifts honored). Meaningful for graded presentations.
std::vector<unsigned long> graded_dimensions(const FPModule& m, unsigned max_degree);

struct MinimalPresentationResult {
    bool determined = false;   // graded-local hypothesis held
    FPModule minimal;          // valid when determined
    bool free = false;         // relations empty after pruning
};

/// Prune unit entries from the presentation (Nakayama). Only decides
/// anything over a graded-local level ring A_k.
MinimalPresentationResult minimal_presentation(const FPModule& m);

} // namespace adic

#endif
