#ifndef ADIC_WPR_HPP
#define ADIC_WPR_HPP

#include "adic/koszul.hpp"
#include "adic/verdict.hpp"

namespace adic {

/// Map induced by the Koszul transition on H^{-i}, as columns over the
/// target homology generators. Optionally exposes the two subquotients.
std::vector<FreeElement> homology_transition(const KoszulTower& tower, int i, int k_from,
                                             int k_to, Subquotient* hsrc = nullptr,
                                             Subquotient* hdst = nullptr);

struct ProZeroEntry {
    int i = 0;  // inspecting H^{-i}
    int k = 0;
    Outcome outcome = Outcome::undetermined;
    bool trivially_zero = false;  // H^{-i}(K(A; a^k)) = 0 itself
    int witness_level = -1;       // minimal k' <= kmax with zero map to level k
    std::string surviving_class;  // when no witness exists within the bound
};

/// Empirical weak-proregularity certificate: per (i, k) the minimal
/// zero-witness level, or a verified surviving class. "pass" is pro-zero
/// up to the bound (positive evidence, not a proof); "fail" records
/// evidence against.
struct ProZeroReport {
    std::vector<Polynomial> sequence;
    int kmax = 0;
    Outcome overall = Outcome::undetermined;
    std::vector<ProZeroEntry> entries;
    std::string summary;
};

ProZeroReport wpr_report(const Ring& ring, const std::vector<Polynomial>& seq, int kmax);

} // namespace adic

#endif
