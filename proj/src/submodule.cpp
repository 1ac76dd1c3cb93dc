#include "adic/submodule.hpp"

#include <algorithm>

namespace adic {

namespace {

std::vector<FreeElement> modulus_columns(const Ring& ring, std::size_t rank) {
    std::vector<FreeElement> cols;
    for (const auto& m : ring.modulus_gb())
        for (std::size_t i = 0; i < rank; ++i) {
            FreeElement e(ring.poly(), rank);
            e[i] = m;
            cols.push_back(std::move(e));
        }
    return cols;
}

std::uint32_t element_degree(const FreeElement& e) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (!e[i].is_zero()) d = std::max(d, e[i].total_degree());
    return d;
}

} // namespace

struct Submodule::Cache {
    // combined = gens ++ modulus columns, at the polynomial-ring level
    std::vector<FreeElement> combined;
    GroebnerResult gb;          // tracked over combined
    std::vector<FreeElement> gb_over_ring;  // modulus elements removed
};

Submodule::Submodule(Ring ring, std::size_t rank, std::vector<FreeElement> gens)
    : ring_(std::move(ring)), rank_(rank) {
    for (auto& g : gens) {
        if (g.rank() != rank_) throw AlgebraError("submodule: generator rank mismatch");
        FreeElement q = ring_.nf(g);
        if (!q.is_zero()) gens_.push_back(std::move(q));
    }
}

const Submodule::Cache& Submodule::cache() const {
    if (!cache_) {
        auto c = std::make_shared<Cache>();
        c->combined = gens_;
        for (auto& m : modulus_columns(ring_, rank_)) c->combined.push_back(std::move(m));
        c->gb = buchberger(c->combined, ring_.module_order(), /*track=*/true);
        for (const auto& g : c->gb.basis) {
            FreeElement q = ring_.nf(g);
            if (!q.is_zero()) c->gb_over_ring.push_back(std::move(q));
        }
        cache_ = std::move(c);
    }
    return *cache_;
}

FreeElement Submodule::nf(const FreeElement& x) const {
    if (x.rank() != rank_) throw AlgebraError("submodule: ambient rank mismatch");
    const Cache& c = cache();
    return divide(x, c.gb.basis, ring_.module_order()).remainder;
}

bool Submodule::contains(const Submodule& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Submodule::equals(const Submodule& other) const {
    return contains(other) && other.contains(*this);
}

bool Submodule::is_full() const {
    for (std::size_t i = 0; i < rank_; ++i)
        if (!contains(FreeElement::basis(ring_.poly(), rank_, i))) return false;
    return true;
}

const std::vector<FreeElement>& Submodule::reduced_gb() const {
    return cache().gb_over_ring;
}

std::optional<std::vector<Polynomial>> Submodule::express(const FreeElement& x) const {
    const Cache& c = cache();
    DivisionResult d = divide(ring_.nf(x), c.gb.basis, ring_.module_order(), true);
    if (!d.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> coeffs(gens_.size(), Polynomial::zero(ring_.poly()));
    for (std::size_t j = 0; j < c.gb.basis.size(); ++j) {
        if (d.quotients[j].is_zero()) continue;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            coeffs[i] = coeffs[i] + d.quotients[j] * c.gb.transform[j][i];
    }
    for (auto& p : coeffs) p = ring_.nf(p);
    return coeffs;
}

std::vector<FreeElement> Submodule::syzygies() const {
    const Cache& c = cache();
    std::vector<FreeElement> raw = syzygy_generators(c.combined, ring_.module_order());
    // project onto the generator block and clean up over R
    std::vector<FreeElement> projected;
    for (const auto& w : raw) {
        FreeElement u(ring_.poly(), gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) u[i] = w[i];
        u = ring_.nf(u);
        if (!u.is_zero()) projected.push_back(std::move(u));
    }
    Submodule syz(ring_, gens_.size(), std::move(projected));
    return syz.reduced_gb();
}

Submodule preimage(const Ring& ring, const std::vector<FreeElement>& cols,
                   const Submodule& target) {
    std::size_t s = cols.size();
    std::vector<FreeElement> combined = cols;
    for (const auto& g : target.gens()) combined.push_back(g);
    for (auto& m : modulus_columns(ring, target.rank())) combined.push_back(std::move(m));

    std::vector<FreeElement> syz = syzygy_generators(combined, ring.module_order());
    std::vector<FreeElement> gens;
    for (const auto& w : syz) {
        FreeElement u(ring.poly(), s);
        for (std::size_t i = 0; i < s; ++i) u[i] = w[i];
        u = ring.nf(u);
        if (!u.is_zero()) gens.push_back(std::move(u));
    }
    Submodule pre(ring, s, std::move(gens));
    return Submodule(ring, s, pre.reduced_gb());
}

Submodule kernel_submodule(const Ring& ring, std::size_t rank,
                           const std::vector<FreeElement>& cols) {
    Submodule zero(ring, rank, {});
    return preimage(ring, cols, zero);
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    if (!(a.ring() == b.ring()) || a.rank() != b.rank())
        throw AlgebraError("submodule sum: ambient mismatch");
    std::vector<FreeElement> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Submodule(a.ring(), a.rank(), std::move(gens));
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
    if (!(a.ring() == b.ring()) || a.rank() != b.rank())
        throw AlgebraError("submodule intersection: ambient mismatch");
    const Ring& ring = a.ring();
    std::vector<FreeElement> combined = a.gens();
    for (const auto& g : b.gens()) combined.push_back(g);
    for (auto& m : modulus_columns(ring, a.rank())) combined.push_back(std::move(m));
    std::vector<FreeElement> syz = syzygy_generators(combined, ring.module_order());
    std::vector<FreeElement> gens;
    for (const auto& w : syz) {
        FreeElement x(ring.poly(), a.rank());
        for (std::size_t i = 0; i < a.gens().size(); ++i)
            x = x + a.gens()[i].times_poly(w[i]);
        x = ring.nf(x);
        if (!x.is_zero()) gens.push_back(std::move(x));
    }
    Submodule inter(ring, a.rank(), std::move(gens));
    return Submodule(ring, a.rank(), inter.reduced_gb());
}

std::vector<FreeElement> minimal_generators(const Ring& ring, std::size_t rank,
                                            std::vector<FreeElement> gens) {
    // normal form, drop zeros
    std::vector<FreeElement> work;
    for (auto& g : gens) {
        FreeElement q = ring.nf(g);
        if (!q.is_zero()) work.push_back(std::move(q));
    }
    ModuleOrder ord = ring.module_order();
    std::sort(work.begin(), work.end(), [&](const FreeElement& x, const FreeElement& y) {
        std::uint32_t dx = element_degree(x), dy = element_degree(y);
        if (dx != dy) return dx < dy;
        auto lx = mod_lead(x, ord), ly = mod_lead(y, ord);
        return ord.compare(lx->pos, lx->mono, ly->pos, ly->mono) < 0;
    });
    // drop any element contained in the span of the others, to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::vector<FreeElement> others;
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            Submodule span(ring, rank, std::move(others));
            if (span.contains(work[i])) {
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return work;
}

} // namespace adic
