#include "adic/module_map.hpp"

namespace adic {

ModuleMap::ModuleMap(FPModule src, FPModule dst, std::vector<FreeElement> cols)
    : src_(std::move(src)), dst_(std::move(dst)), cols_(std::move(cols)) {
    if (!(src_.ring == dst_.ring)) throw AlgebraError("module map: ring mismatch");
    if (cols_.size() != src_.rank)
        throw AlgebraError("module map: one column per source generator required");
    for (auto& c : cols_) {
        if (c.rank() != dst_.rank) throw AlgebraError("module map: column rank mismatch");
        c = src_.ring.nf(c);
    }
}

ModuleMap ModuleMap::identity(const FPModule& m) {
    std::vector<FreeElement> cols;
    for (std::size_t i = 0; i < m.rank; ++i)
        cols.push_back(FreeElement::basis(m.ring.poly(), m.rank, i));
    return ModuleMap(m, m, std::move(cols));
}

FreeElement ModuleMap::apply(const FreeElement& x) const {
    if (x.rank() != src_.rank) throw AlgebraError("module map: element rank mismatch");
    FreeElement y(src_.ring.poly(), dst_.rank);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!x[j].is_zero()) y = y + cols_[j].times_poly(x[j]);
    return src_.ring.nf(y);
}

bool ModuleMap::well_defined() const {
    Submodule dst_rel = dst_.relation_submodule();
    for (const auto& r : src_.relations)
        if (!dst_rel.contains(apply(r))) return false;
    return true;
}

bool ModuleMap::kernel_zero() const {
    Submodule dst_rel = dst_.relation_submodule();
    Submodule pre = preimage(src_.ring, cols_, dst_rel);
    Submodule src_rel = src_.relation_submodule();
    return src_rel.contains(pre);
}

bool ModuleMap::cokernel_zero() const {
    std::vector<FreeElement> gens = dst_.relations;
    for (const auto& c : cols_) gens.push_back(c);
    Submodule s(dst_.ring, dst_.rank, std::move(gens));
    return s.is_full();
}

bool ModuleMap::is_zero_map() const {
    Submodule dst_rel = dst_.relation_submodule();
    for (const auto& c : cols_)
        if (!dst_rel.contains(c)) return false;
    return true;
}

Subquotient ModuleMap::kernel() const {
    Submodule dst_rel = dst_.relation_submodule();
    Submodule pre = preimage(src_.ring, cols_, dst_rel);
    return Subquotient(src_.ring, src_.rank, pre.reduced_gb(), src_.relations);
}

FPModule ModuleMap::cokernel() const {
    std::vector<FreeElement> rels = dst_.relations;
    for (const auto& c : cols_) rels.push_back(c);
    return FPModule(dst_.ring, dst_.rank, std::move(rels));
}

std::optional<FreeElement> ModuleMap::nonzero_image_witness() const {
    Submodule dst_rel = dst_.relation_submodule();
    for (const auto& c : cols_) {
        FreeElement q = dst_rel.nf(c);
        if (!q.is_zero()) return q;
    }
    return std::nullopt;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    std::vector<FreeElement> cols;
    for (const auto& c : f.cols()) cols.push_back(g.apply(c));
    return ModuleMap(f.src(), g.dst(), std::move(cols));
}

} // namespace adic
