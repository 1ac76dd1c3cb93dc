#include "adic/fpmodule.hpp"

#include <algorithm>

namespace adic {

FPModule::FPModule(Ring r, std::size_t rk, std::vector<FreeElement> rels,
                   std::vector<int> sh)
    : ring(std::move(r)), rank(rk), shifts(std::move(sh)) {
    for (auto& c : rels) {
        if (c.rank() != rank) throw AlgebraError("presentation: relation rank mismatch");
        FreeElement q = ring.nf(c);
        if (!q.is_zero()) relations.push_back(std::move(q));
    }
    if (!shifts.empty() && shifts.size() != rank)
        throw AlgebraError("presentation: shift count mismatch");
}

FPModule FPModule::free_module(const Ring& r, std::size_t rk) {
    return FPModule(r, rk, {});
}

FPModule FPModule::cyclic(const Ring& r, const std::vector<Polynomial>& gens) {
    std::vector<FreeElement> rels;
    for (const auto& g : gens) rels.push_back(FreeElement({g}));
    return FPModule(r, 1, std::move(rels));
}

bool FPModule::is_zero_module() const {
    Submodule rel = relation_submodule();
    return rel.is_full();
}

FPModule FPModule::direct_sum(const FPModule& o) const {
    if (!(ring == o.ring)) throw AlgebraError("direct sum: ring mismatch");
    std::vector<FreeElement> rels;
    for (const auto& c : relations) {
        FreeElement e(ring.poly(), rank + o.rank);
        for (std::size_t i = 0; i < rank; ++i) e[i] = c[i];
        rels.push_back(std::move(e));
    }
    for (const auto& c : o.relations) {
        FreeElement e(ring.poly(), rank + o.rank);
        for (std::size_t i = 0; i < o.rank; ++i) e[rank + i] = c[i];
        rels.push_back(std::move(e));
    }
    std::vector<int> sh;
    if (!shifts.empty() || !o.shifts.empty()) {
        sh = shifts.empty() ? std::vector<int>(rank, 0) : shifts;
        std::vector<int> sh2 = o.shifts.empty() ? std::vector<int>(o.rank, 0) : o.shifts;
        sh.insert(sh.end(), sh2.begin(), sh2.end());
    }
    return FPModule(ring, rank + o.rank, std::move(rels), std::move(sh));
}

FPModule FPModule::base_change(const Ring& target) const {
    if (!same_ring(ring.poly(), target.poly()))
        throw AlgebraError("base change: different polynomial rings");
    // tensoring with the target quotient adds the source modulus as
    // relations; they collapse into the target modulus when it is finer
    std::vector<FreeElement> rels = relations;
    for (const auto& m : ring.modulus_gb())
        for (std::size_t i = 0; i < rank; ++i) {
            FreeElement e(ring.poly(), rank);
            e[i] = m;
            rels.push_back(std::move(e));
        }
    return FPModule(target, rank, std::move(rels), shifts);
}

std::string FPModule::str() const {
    std::string s = "coker(" + std::to_string(relations.size()) + " relations on " +
                    std::to_string(rank) + " generators over " + ring.str() + ")";
    return s;
}

FPModule tensor_modules(const FPModule& m, const FPModule& n) {
    if (!(m.ring == n.ring)) throw AlgebraError("tensor: ring mismatch");
    const std::size_t rank = m.rank * n.rank;
    std::vector<FreeElement> rels;
    // u (x) f_j
    for (const auto& u : m.relations)
        for (std::size_t j = 0; j < n.rank; ++j) {
            FreeElement e(m.ring.poly(), rank);
            for (std::size_t i = 0; i < m.rank; ++i) e[i * n.rank + j] = u[i];
            rels.push_back(std::move(e));
        }
    // e_i (x) v
    for (const auto& v : n.relations)
        for (std::size_t i = 0; i < m.rank; ++i) {
            FreeElement e(m.ring.poly(), rank);
            for (std::size_t j = 0; j < n.rank; ++j) e[i * n.rank + j] = v[j];
            rels.push_back(std::move(e));
        }
    std::vector<int> sh;
    if (!m.shifts.empty() || !n.shifts.empty()) {
        std::vector<int> a = m.shifts.empty() ? std::vector<int>(m.rank, 0) : m.shifts;
        std::vector<int> b = n.shifts.empty() ? std::vector<int>(n.rank, 0) : n.shifts;
        for (std::size_t i = 0; i < m.rank; ++i)
            for (std::size_t j = 0; j < n.rank; ++j) sh.push_back(a[i] + b[j]);
    }
    return FPModule(m.ring, rank, std::move(rels), std::move(sh));
}

Subquotient::Subquotient(Ring ring, std::size_t ambient_rank,
                         std::vector<FreeElement> numerator_gens,
                         std::vector<FreeElement> denominator_gens)
    : ring_(std::move(ring)),
      ambient_rank_(ambient_rank),
      denom_(ring_, ambient_rank, std::move(denominator_gens)),
      combined_(ring_, ambient_rank, {}) {
    // keep numerator generators that are nonzero modulo the denominator,
    // stored as their denominator normal forms
    for (auto& g : numerator_gens) {
        FreeElement q = denom_.nf(g);
        if (!q.is_zero()) gen_reps_.push_back(std::move(q));
    }
    std::vector<FreeElement> comb = gen_reps_;
    for (const auto& d : denom_.gens()) comb.push_back(d);
    combined_ = Submodule(ring_, ambient_rank_, std::move(comb));

    // relations: {u : sum u_j rep_j lies in the denominator}
    Submodule rel = preimage(ring_, gen_reps_, denom_);
    pres_ = FPModule(ring_, gen_reps_.size(), rel.reduced_gb());
}

bool Subquotient::contains(const FreeElement& x) const { return combined_.contains(x); }

std::optional<std::vector<Polynomial>> Subquotient::express(const FreeElement& x) const {
    auto coeffs = combined_.express(x);
    if (!coeffs) return std::nullopt;
    coeffs->resize(gen_reps_.size(), Polynomial::zero(ring_.poly()));
    return coeffs;
}

Subquotient kernel_of_map(const Ring& ring, std::size_t rank,
                          const std::vector<FreeElement>& cols) {
    Submodule ker = kernel_submodule(ring, rank, cols);
    return Subquotient(ring, cols.size(), ker.reduced_gb(), {});
}

Subquotient colon_annihilator(const FPModule& m, const std::vector<Polynomial>& ideal_gens) {
    Submodule rel = m.relation_submodule();
    bool first = true;
    Submodule acc = rel;  // placeholder; replaced on first factor
    for (const auto& f : ideal_gens) {
        std::vector<FreeElement> cols;
        for (std::size_t i = 0; i < m.rank; ++i) {
            FreeElement e(m.ring.poly(), m.rank);
            e[i] = f;
            cols.push_back(std::move(e));
        }
        Submodule pre = preimage(m.ring, cols, rel);
        acc = first ? pre : submodule_intersection(acc, pre);
        first = false;
    }
    if (first) {
        // empty ideal: (0 :_M 0) = M
        std::vector<FreeElement> all;
        for (std::size_t i = 0; i < m.rank; ++i)
            all.push_back(FreeElement::basis(m.ring.poly(), m.rank, i));
        return Subquotient(m.ring, m.rank, std::move(all), m.relations);
    }
    return Subquotient(m.ring, m.rank, acc.reduced_gb(), m.relations);
}

namespace {

struct LeadSet {
    // leading monomials of the combined Groebner basis, per component
    std::vector<std::vector<Monomial>> by_component;
};

LeadSet lead_monomials(const FPModule& m) {
    std::vector<FreeElement> cols = m.relations;
    for (const auto& p : m.ring.modulus_gb())
        for (std::size_t i = 0; i < m.rank; ++i) {
            FreeElement e(m.ring.poly(), m.rank);
            e[i] = p;
            cols.push_back(std::move(e));
        }
    GroebnerResult gb = buchberger(cols, m.ring.module_order());
    LeadSet ls;
    ls.by_component.resize(m.rank);
    for (const auto& g : gb.basis) {
        auto l = mod_lead(g, m.ring.module_order());
        ls.by_component[l->pos].push_back(l->mono);
    }
    return ls;
}

bool standard(const Monomial& m, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.divides(m)) return false;
    return true;
}

// enumerate standard monomials of one component up to the pure-power box;
// returns nullopt when infinite.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads,
                                                        std::size_t nvars) {
    for (const auto& l : leads)
        if (l.is_one()) return std::vector<Monomial>{};  // component killed
    std::vector<std::uint32_t> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& l : leads) {
            bool pure = l.exponent(v) > 0;
            for (std::size_t w = 0; pure && w < nvars; ++w)
                if (w != v && l.exponent(w) > 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], l.exponent(v)) : l.exponent(v);
                found = true;
            }
        }
        if (!found) return std::nullopt;  // infinite in direction v
    }
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    while (true) {
        Monomial m{std::vector<std::uint32_t>(e)};
        if (standard(m, leads)) out.push_back(m);
        std::size_t v = 0;
        while (v < nvars) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return out;
}

} // namespace

std::optional<unsigned long> k_dimension(const FPModule& m) {
    LeadSet ls = lead_monomials(m);
    unsigned long total = 0;
    for (std::size_t i = 0; i < m.rank; ++i) {
        auto std_i = standard_monomials(ls.by_component[i], m.ring.poly()->nvars());
        if (!std_i) return std::nullopt;
        total += std_i->size();
    }
    return total;
}

std::vector<unsigned long> graded_dimensions(const FPModule& m, unsigned max_degree) {
    LeadSet ls = lead_monomials(m);
    std::vector<unsigned long> dims(max_degree + 1, 0);
    for (std::size_t i = 0; i < m.rank; ++i) {
        int shift = m.shifts.empty() ? 0 : m.shifts[i];
        // enumerate standard monomials of bounded degree directly
        std::size_t nv = m.ring.poly()->nvars();
        std::vector<std::uint32_t> e(nv, 0);
        // iterate all exponent vectors with total degree <= max_degree - shift
        long degcap = static_cast<long>(max_degree) - shift;
        if (degcap < 0) continue;
        while (true) {
            long d = 0;
            for (auto x : e) d += x;
            if (d <= degcap) {
                Monomial mono{std::vector<std::uint32_t>(e)};
                if (standard(mono, ls.by_component[i])) {
                    long deg = d + shift;
                    if (deg >= 0 && deg <= static_cast<long>(max_degree))
                        ++dims[static_cast<std::size_t>(deg)];
                }
            }
            // next vector with component cap degcap
            std::size_t v = 0;
            while (v < nv) {
                if (static_cast<long>(++e[v]) <= degcap) break;
                e[v] = 0;
                ++v;
            }
            if (v == nv) break;
        }
    }
    return dims;
}

MinimalPresentationResult minimal_presentation(const FPModule& m) {
    MinimalPresentationResult res;
    if (!m.ring.graded_local()) return res;  // undetermined
    res.determined = true;

    std::size_t rank = m.rank;
    std::vector<FreeElement> cols;
    for (const auto& c : m.relations) {
        FreeElement q = m.ring.nf(c);
        if (!q.is_zero()) cols.push_back(std::move(q));
    }

    while (true) {
        // locate a unit entry; over graded-local A_k: nonzero constant term
        std::size_t ui = 0, uj = 0;
        bool found = false;
        for (std::size_t j = 0; j < cols.size() && !found; ++j)
            for (std::size_t i = 0; i < rank && !found; ++i)
                if (!cols[j][i].is_zero() && m.ring.is_unit(cols[j][i])) {
                    ui = i;
                    uj = j;
                    found = true;
                }
        if (!found) break;

        Polynomial inv = m.ring.unit_inverse(cols[uj][ui]);
        // eliminate generator ui using relation uj
        std::vector<FreeElement> next;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == uj) continue;
            FreeElement c = cols[j] - cols[uj].times_poly(m.ring.nf(cols[j][ui] * inv));
            FreeElement shrunk(m.ring.poly(), rank - 1);
            for (std::size_t i = 0, t = 0; i < rank; ++i)
                if (i != ui) shrunk[t++] = c[i];
            FreeElement q = m.ring.nf(shrunk);
            if (!q.is_zero()) next.push_back(std::move(q));
        }
        cols = std::move(next);
        --rank;
    }

    res.minimal = FPModule(m.ring, rank, cols);
    res.free = res.minimal.relations.empty();
    return res;
}

} // namespace adic
