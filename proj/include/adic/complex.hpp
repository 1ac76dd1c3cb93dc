#ifndef ADIC_COMPLEX_HPP
#define ADIC_COMPLEX_HPP

#include <array>

#include "adic/fpmodule.hpp"

namespace adic {

/// Bounded complex of finite free R-modules, cohomological indexing: the
/// differential d^i : C^i -> C^{i+1} raises degree. Differentials are
/// stored as columns (image of each basis vector). d o d = 0 is checked
/// at construction and violations are a hard error.
class ChainComplex {
public:
    ChainComplex(Ring ring, int lo, std::vector<std::size_t> ranks,
                 std::vector<std::vector<FreeElement>> diffs);

    static ChainComplex zero(const Ring& ring);
    /// 0 -> R -> 0 concentrated in the given degree.
    static ChainComplex unit(const Ring& ring, int degree = 0);

    const Ring& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int i) const;
    /// Columns of d^i; empty when i is out of [lo, hi).
    const std::vector<FreeElement>& differential(int i) const;
    FreeElement apply_differential(int i, const FreeElement& x) const;

    std::string str() const;

private:
    Ring ring_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<std::vector<FreeElement>> diffs_;
    std::vector<FreeElement> empty_;
};

/// Degreewise map of complexes over the same ring and degree window;
/// commuting with the differentials is checked at construction.
class ComplexMap {
public:
    ComplexMap(ChainComplex src, ChainComplex dst,
               std::vector<std::vector<FreeElement>> cols_per_degree);

    static ComplexMap identity(const ChainComplex& c);

    const ChainComplex& src() const { return src_; }
    const ChainComplex& dst() const { return dst_; }
    const std::vector<FreeElement>& matrix_at(int i) const;
    FreeElement apply_at(int i, const FreeElement& x) const;

private:
    ChainComplex src_, dst_;
    std::vector<std::vector<FreeElement>> mats_;
    std::vector<FreeElement> empty_;
};

ComplexMap compose(const ComplexMap& g, const ComplexMap& f);

/// H^i(C) = ker d^i / im d^{i-1} as a subquotient of C^i.
Subquotient homology_at(const ChainComplex& c, int i);

/// Basis labels (p, q, i, j) for each degree of a tensor product, in
/// order: C-degree p ascending, then i major over j.
struct TensorLayout {
    int lo = 0;
    std::vector<std::vector<std::array<int, 4>>> labels;
};

/// Total complex of C (x) D with the standard Koszul sign on the second
/// factor.
ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d,
                              TensorLayout* layout = nullptr);

/// Complex of presented modules N^{rank_i} obtained by applying N (x) -
/// to a complex of frees. Terms are implicit; homology is computed as a
/// subquotient of R^{N.rank * rank_i}.
struct PresentedComplex {
    FPModule coefficients;
    ChainComplex base;
};

PresentedComplex tensor_module_complex(const FPModule& n, const ChainComplex& c);

/// H^i(N (x) C): ambient rank N.rank * C.rank(i), flat index
/// (complex basis c, generator g) -> c*N.rank + g.
Subquotient homology_with_coefficients(const FPModule& n, const ChainComplex& c, int i);

/// Matrix of the map induced between subquotients by an ambient linear
/// map given as columns: image of each source generator expressed in the
/// target's generators. Throws if an image fails to land in the target.
std::vector<FreeElement> induced_on_subquotients(const std::vector<FreeElement>& cols,
                                                 const Subquotient& source,
                                                 const Subquotient& target);

/// Induced map on homology of a map of complexes at degree i.
std::vector<FreeElement> induced_on_homology(const ComplexMap& f, int i,
                                             const Subquotient& hsrc,
                                             const Subquotient& hdst);

/// The same matrices read over another quotient of the same polynomial
/// ring (base change of the complex).
ChainComplex change_ring(const ChainComplex& c, const Ring& target);

} // namespace adic

#endif
