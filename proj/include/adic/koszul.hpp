#ifndef ADIC_KOSZUL_HPP
#define ADIC_KOSZUL_HPP

#include "adic/complex.hpp"

namespace adic {

/// Koszul complex K(A; a^k) on the sequence (a_1^k, ..., a_n^k), degrees
/// -n..0, rank binomial(n, p) in degree -p. Sign rule:
/// d(e_S) = sum_j (-1)^{j-1} a_{i_j}^k e_{S\{i_j}} for S = {i_1 < ... < i_p}.
ChainComplex koszul_complex(const Ring& ring, const std::vector<Polynomial>& seq, int k);

/// Dual complex K^v(A; a^k) = Hom(K(A; a^k), A), degrees 0..n,
/// differentials the transposes.
ChainComplex dual_koszul(const Ring& ring, const std::vector<Polynomial>& seq, int k);

/// The inverse system of Koszul complexes up to level kmax with its
/// transition chain maps e_S -> (prod_{i in S} a_i^{k'-k}) e_S.
class KoszulTower {
public:
    KoszulTower(Ring ring, std::vector<Polynomial> seq, int kmax);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& sequence() const { return seq_; }
    int kmax() const { return kmax_; }
    std::size_t nvars_in_sequence() const { return seq_.size(); }

    /// K(A; a^k), 1 <= k <= kmax.
    const ChainComplex& level(int k) const;
    /// Chain map K(A; a^{k_from}) -> K(A; a^{k_to}), k_from >= k_to.
    ComplexMap transition(int k_from, int k_to) const;
    /// Direct-system map K^v(A; a^{k_from}) -> K^v(A; a^{k_to}) for
    /// k_from <= k_to, dual to the transition.
    ComplexMap dual_transition(int k_from, int k_to) const;
    const ChainComplex& dual_level(int k) const;

private:
    Ring ring_;
    std::vector<Polynomial> seq_;
    int kmax_;
    std::vector<ChainComplex> levels_;
    std::vector<ChainComplex> duals_;
};

/// Finite-stage local cohomology approximation: H^i(K^v(A; a^k) (x) M)
/// together with the comparison map to level k+1.
struct LocalCohomologyApprox {
    Subquotient at_k;
    Subquotient at_k1;
    std::vector<FreeElement> comparison;  // on homology generators
};

LocalCohomologyApprox local_cohomology_approx(const FPModule& m,
                                              const std::vector<Polynomial>& seq,
                                              int k, int i);

/// Subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int p);

} // namespace adic

#endif
