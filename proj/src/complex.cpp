#include "adic/complex.hpp"

namespace adic {

ChainComplex::ChainComplex(Ring ring, int lo, std::vector<std::size_t> ranks,
                           std::vector<std::vector<FreeElement>> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (ranks_.empty()) throw AlgebraError("complex: empty degree range");
    if (diffs_.size() + 1 != ranks_.size())
        throw AlgebraError("complex: need one differential per adjacent degree pair");
    for (std::size_t t = 0; t < diffs_.size(); ++t) {
        if (diffs_[t].size() != ranks_[t])
            throw AlgebraError("complex: differential column count mismatch");
        for (auto& c : diffs_[t]) {
            if (c.rank() != ranks_[t + 1])
                throw AlgebraError("complex: differential column rank mismatch");
            c = ring_.nf(c);
        }
    }
    // d o d = 0, over the working ring
    for (std::size_t t = 0; t + 1 < diffs_.size(); ++t) {
        for (const auto& c : diffs_[t]) {
            FreeElement image(ring_.poly(), ranks_[t + 2]);
            for (std::size_t row = 0; row < ranks_[t + 1]; ++row)
                if (!c[row].is_zero())
                    image = image + diffs_[t + 1][row].times_poly(c[row]);
            if (!ring_.nf(image).is_zero())
                throw AlgebraError("complex: differentials do not compose to zero");
        }
    }
}

ChainComplex ChainComplex::zero(const Ring& ring) {
    return ChainComplex(ring, 0, {0}, {});
}

ChainComplex ChainComplex::unit(const Ring& ring, int degree) {
    return ChainComplex(ring, degree, {1}, {});
}

std::size_t ChainComplex::rank(int i) const {
    if (i < lo_ || i > hi()) return 0;
    return ranks_[static_cast<std::size_t>(i - lo_)];
}

const std::vector<FreeElement>& ChainComplex::differential(int i) const {
    if (i < lo_ || i >= hi()) return empty_;
    return diffs_[static_cast<std::size_t>(i - lo_)];
}

FreeElement ChainComplex::apply_differential(int i, const FreeElement& x) const {
    if (x.rank() != rank(i)) throw AlgebraError("complex: element degree mismatch");
    FreeElement y(ring_.poly(), rank(i + 1));
    const auto& d = differential(i);
    for (std::size_t c = 0; c < d.size(); ++c)
        if (!x[c].is_zero()) y = y + d[c].times_poly(x[c]);
    return ring_.nf(y);
}

std::string ChainComplex::str() const {
    std::string s = "[";
    for (int i = lo(); i <= hi(); ++i) {
        if (i > lo()) s += " -> ";
        s += std::to_string(rank(i)) + "@" + std::to_string(i);
    }
    return s + "]";
}

ComplexMap::ComplexMap(ChainComplex src, ChainComplex dst,
                       std::vector<std::vector<FreeElement>> cols_per_degree)
    : src_(std::move(src)), dst_(std::move(dst)), mats_(std::move(cols_per_degree)) {
    if (!(src_.ring() == dst_.ring())) throw AlgebraError("complex map: ring mismatch");
    if (src_.lo() != dst_.lo() || src_.hi() != dst_.hi())
        throw AlgebraError("complex map: degree window mismatch");
    if (mats_.size() != static_cast<std::size_t>(src_.hi() - src_.lo() + 1))
        throw AlgebraError("complex map: one matrix per degree required");
    const Ring& ring = src_.ring();
    for (int i = src_.lo(); i <= src_.hi(); ++i) {
        auto& m = mats_[static_cast<std::size_t>(i - src_.lo())];
        if (m.size() != src_.rank(i))
            throw AlgebraError("complex map: column count mismatch at degree " +
                               std::to_string(i));
        for (auto& c : m) {
            if (c.rank() != dst_.rank(i))
                throw AlgebraError("complex map: column rank mismatch at degree " +
                                   std::to_string(i));
            c = ring.nf(c);
        }
    }
    // commuting squares, degreewise
    for (int i = src_.lo(); i < src_.hi(); ++i) {
        for (std::size_t c = 0; c < src_.rank(i); ++c) {
            FreeElement basis(ring.poly(), src_.rank(i));
            basis[c] = Polynomial::constant(ring.poly(), 1);
            FreeElement via_src = apply_at(i + 1, src_.apply_differential(i, basis));
            FreeElement via_dst = dst_.apply_differential(i, apply_at(i, basis));
            if (!ring.nf(via_src - via_dst).is_zero())
                throw AlgebraError("complex map: square does not commute at degree " +
                                   std::to_string(i));
        }
    }
}

ComplexMap ComplexMap::identity(const ChainComplex& c) {
    std::vector<std::vector<FreeElement>> mats;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        std::vector<FreeElement> m;
        for (std::size_t j = 0; j < c.rank(i); ++j)
            m.push_back(FreeElement::basis(c.ring().poly(), c.rank(i), j));
        mats.push_back(std::move(m));
    }
    return ComplexMap(c, c, std::move(mats));
}

const std::vector<FreeElement>& ComplexMap::matrix_at(int i) const {
    if (i < src_.lo() || i > src_.hi()) return empty_;
    return mats_[static_cast<std::size_t>(i - src_.lo())];
}

FreeElement ComplexMap::apply_at(int i, const FreeElement& x) const {
    if (x.rank() != src_.rank(i)) throw AlgebraError("complex map: element mismatch");
    FreeElement y(src_.ring().poly(), dst_.rank(i));
    const auto& m = matrix_at(i);
    for (std::size_t c = 0; c < m.size(); ++c)
        if (!x[c].is_zero()) y = y + m[c].times_poly(x[c]);
    return src_.ring().nf(y);
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
    std::vector<std::vector<FreeElement>> mats;
    for (int i = f.src().lo(); i <= f.src().hi(); ++i) {
        std::vector<FreeElement> m;
        for (const auto& c : f.matrix_at(i)) m.push_back(g.apply_at(i, c));
        mats.push_back(std::move(m));
    }
    return ComplexMap(f.src(), g.dst(), std::move(mats));
}

Subquotient homology_at(const ChainComplex& c, int i) {
    const Ring& ring = c.ring();
    if (i < c.lo() || i > c.hi())
        return Subquotient(ring, 0, {}, {});
    std::vector<FreeElement> numerator;
    if (i < c.hi()) {
        Submodule ker = kernel_submodule(ring, c.rank(i + 1), c.differential(i));
        numerator = ker.reduced_gb();
    } else {
        for (std::size_t j = 0; j < c.rank(i); ++j)
            numerator.push_back(FreeElement::basis(ring.poly(), c.rank(i), j));
    }
    std::vector<FreeElement> denominator;
    if (i > c.lo()) denominator = c.differential(i - 1);
    return Subquotient(ring, c.rank(i), std::move(numerator), std::move(denominator));
}

ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d,
                              TensorLayout* layout) {
    if (!(c.ring() == d.ring())) throw AlgebraError("tensor of complexes: ring mismatch");
    const Ring& ring = c.ring();
    const int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();

    // layout per degree: labels (p, q, i, j), p ascending
    std::vector<std::vector<std::array<int, 4>>> labels;
    for (int m = lo; m <= hi; ++m) {
        std::vector<std::array<int, 4>> deg;
        for (int p = c.lo(); p <= c.hi(); ++p) {
            int q = m - p;
            for (std::size_t i = 0; i < c.rank(p); ++i)
                for (std::size_t j = 0; j < d.rank(q); ++j)
                    deg.push_back({p, q, static_cast<int>(i), static_cast<int>(j)});
        }
        labels.push_back(std::move(deg));
    }
    auto index_of = [&](int m, int p, int q, int i, int j) -> std::size_t {
        // blocks ordered by p ascending; within a block i major over j
        std::size_t off = 0;
        for (int pp = c.lo(); pp < p; ++pp) off += c.rank(pp) * d.rank(m - pp);
        return off + static_cast<std::size_t>(i) * d.rank(q) + static_cast<std::size_t>(j);
    };

    std::vector<std::size_t> ranks;
    for (const auto& deg : labels) ranks.push_back(deg.size());

    std::vector<std::vector<FreeElement>> diffs;
    for (int m = lo; m < hi; ++m) {
        const auto& deg = labels[static_cast<std::size_t>(m - lo)];
        std::size_t target_rank = labels[static_cast<std::size_t>(m + 1 - lo)].size();
        std::vector<FreeElement> cols;
        for (const auto& l : deg) {
            int p = l[0], q = l[1], i = l[2], j = l[3];
            FreeElement col(ring.poly(), target_rank);
            // dC component: (p,q,i,j) -> (p+1,q,i',j)
            const auto& dc = c.differential(p);
            if (!dc.empty()) {
                const FreeElement& ci = dc[static_cast<std::size_t>(i)];
                for (std::size_t ip = 0; ip < c.rank(p + 1); ++ip)
                    if (!ci[ip].is_zero()) {
                        std::size_t idx =
                            index_of(m + 1, p + 1, q, static_cast<int>(ip), j);
                        col[idx] = col[idx] + ci[ip];
                    }
            }
            // (-1)^p dD component: (p,q,i,j) -> (p,q+1,i,j')
            const auto& dd = d.differential(q);
            if (!dd.empty()) {
                const FreeElement& cj = dd[static_cast<std::size_t>(j)];
                bool neg = (p % 2) != 0;
                for (std::size_t jp = 0; jp < d.rank(q + 1); ++jp)
                    if (!cj[jp].is_zero()) {
                        std::size_t idx =
                            index_of(m + 1, p, q + 1, i, static_cast<int>(jp));
                        col[idx] = neg ? col[idx] - cj[jp] : col[idx] + cj[jp];
                    }
            }
            cols.push_back(std::move(col));
        }
        diffs.push_back(std::move(cols));
    }

    if (layout) {
        layout->lo = lo;
        layout->labels = labels;
    }
    return ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
}

PresentedComplex tensor_module_complex(const FPModule& n, const ChainComplex& c) {
    if (!(n.ring == c.ring())) throw AlgebraError("module (x) complex: ring mismatch");
    return PresentedComplex{n, c};
}

namespace {

// flat (complex basis slot, generator) -> slot * n.rank + gen
std::vector<FreeElement> big_columns(const FPModule& n, const ChainComplex& c, int i) {
    const Ring& ring = n.ring;
    std::size_t src = c.rank(i) * n.rank, dst = c.rank(i + 1) * n.rank;
    std::vector<FreeElement> cols(src, FreeElement(ring.poly(), dst));
    const auto& d = c.differential(i);
    for (std::size_t slot = 0; slot < c.rank(i); ++slot)
        for (std::size_t g = 0; g < n.rank; ++g) {
            FreeElement& col = cols[slot * n.rank + g];
            for (std::size_t row = 0; row < c.rank(i + 1); ++row) {
                const Polynomial& entry = d[slot][row];
                if (!entry.is_zero()) col[row * n.rank + g] = entry;
            }
        }
    return cols;
}

std::vector<FreeElement> relation_block(const FPModule& n, std::size_t slots) {
    std::vector<FreeElement> rels;
    for (std::size_t slot = 0; slot < slots; ++slot)
        for (const auto& u : n.relations) {
            FreeElement e(n.ring.poly(), slots * n.rank);
            for (std::size_t g = 0; g < n.rank; ++g) e[slot * n.rank + g] = u[g];
            rels.push_back(std::move(e));
        }
    return rels;
}

} // namespace

Subquotient homology_with_coefficients(const FPModule& n, const ChainComplex& c, int i) {
    const Ring& ring = n.ring;
    if (i < c.lo() || i > c.hi()) return Subquotient(ring, 0, {}, {});
    const std::size_t ambient = c.rank(i) * n.rank;

    std::vector<FreeElement> numerator;
    if (i < c.hi()) {
        std::vector<FreeElement> cols = big_columns(n, c, i);
        Submodule target(ring, c.rank(i + 1) * n.rank, relation_block(n, c.rank(i + 1)));
        Submodule pre = preimage(ring, cols, target);
        numerator = pre.reduced_gb();
    } else {
        for (std::size_t j = 0; j < ambient; ++j)
            numerator.push_back(FreeElement::basis(ring.poly(), ambient, j));
    }

    std::vector<FreeElement> denominator = relation_block(n, c.rank(i));
    if (i > c.lo())
        for (auto& col : big_columns(n, c, i - 1)) denominator.push_back(std::move(col));

    return Subquotient(ring, ambient, std::move(numerator), std::move(denominator));
}

std::vector<FreeElement> induced_on_subquotients(const std::vector<FreeElement>& cols,
                                                 const Subquotient& source,
                                                 const Subquotient& target) {
    const Ring& ring = source.ring();
    std::vector<FreeElement> out;
    for (const auto& rep : source.gen_reps()) {
        FreeElement y(ring.poly(), target.ambient_rank());
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!rep[c].is_zero()) y = y + cols[c].times_poly(rep[c]);
        y = ring.nf(y);
        auto coeffs = target.express(y);
        if (!coeffs)
            throw AlgebraError("induced map: image does not land in the target subquotient");
        out.push_back(FreeElement(std::move(*coeffs)));
    }
    return out;
}

std::vector<FreeElement> induced_on_homology(const ComplexMap& f, int i,
                                             const Subquotient& hsrc,
                                             const Subquotient& hdst) {
    return induced_on_subquotients(f.matrix_at(i), hsrc, hdst);
}

ChainComplex change_ring(const ChainComplex& c, const Ring& target) {
    if (!same_ring(c.ring().poly(), target.poly()))
        throw AlgebraError("change_ring: different polynomial rings");
    std::vector<std::size_t> ranks;
    std::vector<std::vector<FreeElement>> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) ranks.push_back(c.rank(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.differential(i));
    return ChainComplex(target, c.lo(), std::move(ranks), std::move(diffs));
}

} // namespace adic
