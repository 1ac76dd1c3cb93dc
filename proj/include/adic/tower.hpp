#ifndef ADIC_TOWER_HPP
#define ADIC_TOWER_HPP

#include "adic/fpmodule.hpp"
#include "adic/module_map.hpp"
#include "adic/verdict.hpp"

namespace adic {

/// Truncated a-adic system: modules M_0..M_kmax with M_k over
/// A_k = A/(I + a^{k+1}) and transitions nu_k : M_{k+1} -> M_k given on
/// generators. Validity (the induced maps A_k (x)_{A_{k+1}} M_{k+1} -> M_k
/// are bijective) is checked by validate_tower, witnesses included.
struct AdicTower {
    Ring base;
    std::vector<Polynomial> ideal_gens;
    int kmax = 0;
    std::vector<Ring> level_rings;                     // A_0..A_kmax
    std::vector<FPModule> levels;                      // M_k over level_rings[k]
    std::vector<std::vector<FreeElement>> transitions; // nu_k, k = 0..kmax-1

    const Ring& level_ring(int k) const { return level_rings.at(static_cast<std::size_t>(k)); }
    const FPModule& level(int k) const { return levels.at(static_cast<std::size_t>(k)); }
    const std::vector<FreeElement>& transition(int k) const {
        return transitions.at(static_cast<std::size_t>(k));
    }
    /// A_k (x)_{A_{k+1}} M_{k+1} together with nu_k as a map over A_k.
    ModuleMap comparison_map(int k) const;
};

/// Level rings A_0..A_kmax for the pair (base, a).
std::vector<Ring> level_rings(const Ring& base, const std::vector<Polynomial>& a_gens,
                              int kmax);

/// The induced system of a module: M_k = A_k (x) M, canonical surjections.
AdicTower induced_tower(const FPModule& m, const std::vector<Polynomial>& a_gens,
                        int kmax);

/// Tower from explicit level presentations (read over A) and transitions.
AdicTower build_tower(const Ring& base, const std::vector<Polynomial>& a_gens, int kmax,
                      const std::vector<FPModule>& levels_over_base,
                      const std::vector<std::vector<FreeElement>>& transitions);

/// Definition-level coherence check with per-level pass/fail witnesses.
Verdict validate_tower(const AdicTower& t);

/// Morphism of towers: one matrix per level, commuting with transitions.
struct TowerMorphism {
    std::vector<std::vector<FreeElement>> level_maps;  // cols: T.levels[k] gens -> S ambient
};

TowerMorphism identity_morphism(const AdicTower& t);

struct TorsionResult {
    Outcome outcome = Outcome::undetermined;  // undetermined at bound
    std::optional<Subquotient> submodule;     // Gamma_a(M) as (0 :_M a^{k+1})
    int stabilization_level = -1;
    bool is_all_of_m = false;                 // Gamma_a(M) = M
};

/// Gamma_a(M) through the stabilizing chain (0 :_M a^{k+1}).
TorsionResult torsion_submodule(const FPModule& m, const std::vector<Polynomial>& a_gens,
                                int bound = 32);

/// Least k <= kmax with a^{k+1} M = 0, if any.
std::optional<int> annihilator_level(const FPModule& m,
                                     const std::vector<Polynomial>& a_gens, int kmax);

/// Mittag-Leffler check for the kernel tower of a levelwise surjection:
/// computes L_k = ker(phi_k) and certifies surjectivity of the induced
/// maps L_{k+1} -> L_k.
Verdict ml_kernel_tower_check(const AdicTower& t, const AdicTower& s,
                              const TowerMorphism& phi);

/// Finite-level content of the limit comparison for induced systems:
/// A_k (x) M-hat -> M_k is bijective at every level, with the
/// Mittag-Leffler certificate for the comparison kernels.
Verdict check_thm_230_induced(const FPModule& m, const std::vector<Polynomial>& a_gens,
                              int kmax);

/// Direct sum of z copies with the finite-support function-module
/// identification checked as an explicit isomorphism.
FPModule finite_support_module(std::size_t z, const FPModule& m);

/// Finite-index comparison: A_k (x) F(Z, M-hat) -> F_fin(Z, M_k) is an
/// isomorphism for all k <= kmax (both sides the same finite direct sum).
Verdict check_finite_support_base_change(const FPModule& m,
                                         const std::vector<Polynomial>& a_gens,
                                         std::size_t z, int kmax);

} // namespace adic

#endif
