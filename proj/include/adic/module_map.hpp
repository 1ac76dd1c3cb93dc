#ifndef ADIC_MODULE_MAP_HPP
#define ADIC_MODULE_MAP_HPP

#include "adic/fpmodule.hpp"

namespace adic {

/// Homomorphism of finitely presented modules given on generators:
/// cols[j] is the image of the j-th generator of src in dst's ambient
/// free module. Claimed isomorphisms are always witnessed through
/// kernel/cokernel tests, never assumed.
class ModuleMap {
public:
    ModuleMap(FPModule src, FPModule dst, std::vector<FreeElement> cols);

    static ModuleMap identity(const FPModule& m);

    const FPModule& src() const { return src_; }
    const FPModule& dst() const { return dst_; }
    const std::vector<FreeElement>& cols() const { return cols_; }

    FreeElement apply(const FreeElement& x) const;

    bool well_defined() const;
    bool kernel_zero() const;
    bool cokernel_zero() const;
    bool is_isomorphism() const { return well_defined() && kernel_zero() && cokernel_zero(); }
    bool is_surjective() const { return well_defined() && cokernel_zero(); }
    bool is_zero_map() const;

    /// ker as a subquotient of src's ambient free module.
    Subquotient kernel() const;
    /// coker presented on dst's generators.
    FPModule cokernel() const;

    /// A generator image that is nonzero in dst (surviving class), if any.
    std::optional<FreeElement> nonzero_image_witness() const;

private:
    FPModule src_, dst_;
    std::vector<FreeElement> cols_;
};

/// Composition g(f(x)); requires f.dst and g.src to share the presentation.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

} // namespace adic

#endif
