#ifndef ADIC_FLATNESS_HPP
#define ADIC_FLATNESS_HPP

#include "adic/resolution.hpp"

namespace adic {

struct ConditionResult {
    Outcome outcome = Outcome::undetermined;
    std::string detail;
    std::vector<Witness> witnesses;
};

/// Joint adic-flatness verdict. Condition (i) is evaluated against the
/// supplied torsion test set only; (ii) up to the level bound; (iii)
/// exactly up to the depth bound. Any certified failure decides "not
/// adically flat"; all-pass is "adically flat up to (depth, kmax)".
struct FlatnessVerdict {
    Outcome overall = Outcome::undetermined;
    std::string module_tag;
    int depth = 0;
    int kmax = 0;
    ConditionResult cond_torsion_tests;  // (i) on the test set
    ConditionResult cond_all_levels;     // (ii) for k <= kmax
    ConditionResult cond_level_zero;     // (iii)
    /// The weaker variant (Tor_1 at level 0 only), recorded for
    /// comparison; divergence from (iii) is flagged in the notes.
    ConditionResult tor1_only_variant;
    std::vector<std::pair<std::string, std::string>> notes;
};

/// Default torsion test set: A_0, A_1, A_0/(first variable) and a cyclic
/// sample with mixed annihilator.
std::vector<FPModule> default_torsion_tests(const Ring& base,
                                            const std::vector<Polynomial>& a_gens);

FlatnessVerdict adic_flat_check(const FPModule& m, const std::vector<Polynomial>& a_gens,
                                int depth, int kmax,
                                const std::vector<FPModule>& torsion_tests);

/// Exactness of A_k (x) P -> A_k (x) M -> 0 for every k plus the
/// Mittag-Leffler property of the kernel towers of the truncated
/// complexes (the finite-level derived-completion comparison).
Verdict check_prop_250(const FPModule& m, const std::vector<Polynomial>& a_gens,
                       int kmax, int length);

/// For a flat tower with a system resolution: every torsion test N at its
/// annihilation level k satisfies H^{-i}(N (x)_{A_k} P_k) = 0 for
/// 0 < i <= depth.
Verdict check_flat_tower_limit(const SystemResolution& sr,
                               const std::vector<FPModule>& torsion_tests, int depth);

} // namespace adic

#endif
