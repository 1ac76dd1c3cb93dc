#include "adic/groebner.hpp"

#include <algorithm>
#include <cassert>

namespace adic {

int ModuleOrder::compare(std::size_t pa, const Monomial& ma,
                         std::size_t pb, const Monomial& mb) const {
    if (pot) {
        if (pa != pb) return pa < pb ? 1 : -1;
        return term.compare(ma, mb);
    }
    int c = term.compare(ma, mb);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
}

std::optional<ModLead> mod_lead(const FreeElement& f, const ModuleOrder& ord) {
    std::optional<ModLead> best;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        if (f[i].is_zero()) continue;
        const Term& t = f[i].leading_term();
        if (!best || ord.compare(i, t.mono, best->pos, best->mono) > 0)
            best = ModLead{i, t.mono, t.coeff};
    }
    return best;
}

namespace {

// f minus (c*m)*g, where g's lead cancels the target term of f.
FreeElement step_reduce(const FreeElement& f, const FreeElement& g,
                        const Scalar& c, const Monomial& m) {
    return f - g.times_term(c, m);
}

} // namespace

DivisionResult divide(const FreeElement& f, const std::vector<FreeElement>& basis,
                      const ModuleOrder& ord, bool want_quotients) {
    const std::size_t rank = f.rank();
    RingPtr ring;
    for (std::size_t i = 0; i < rank; ++i)
        if (f[i].ring()) { ring = f[i].ring(); break; }

    std::vector<std::optional<ModLead>> leads(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) leads[j] = mod_lead(basis[j], ord);

    DivisionResult res;
    res.remainder = FreeElement(ring, rank);
    if (want_quotients)
        res.quotients.assign(basis.size(), Polynomial::zero(ring));

    FreeElement h = f;
    while (true) {
        auto lead = mod_lead(h, ord);
        if (!lead) break;
        bool reduced = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!leads[j] || leads[j]->pos != lead->pos) continue;
            if (!leads[j]->mono.divides(lead->mono)) continue;
            Monomial m = leads[j]->mono.quotient_of(lead->mono);
            Scalar c = lead->coeff / leads[j]->coeff;
            h = step_reduce(h, basis[j], c, m);
            if (want_quotients)
                res.quotients[j] = res.quotients[j] + Polynomial::term(ring, m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the leading term of h to the remainder
            Polynomial t = Polynomial::term(ring, lead->mono, lead->coeff);
            res.remainder[lead->pos] = res.remainder[lead->pos] + t;
            h[lead->pos] = h[lead->pos] - t;
        }
    }
    return res;
}

namespace {

struct Tracked {
    FreeElement g;
    std::vector<Polynomial> rep;  // g = sum rep[i]*gens[i], when tracking
};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Deterministic pair priority: lcm degree, then the module order on
// (pos, lcm), then the indices.
bool pair_less(const Pair& a, const Pair& b, const std::vector<Tracked>& els,
               const ModuleOrder& ord) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto la = mod_lead(els[a.i].g, ord), lb = mod_lead(els[b.i].g, ord);
    int c = ord.compare(la->pos, a.lcm, lb->pos, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

void scale_tracked(Tracked& t, const Scalar& c) {
    t.g = t.g.scaled(c);
    for (auto& p : t.rep) p = p.scaled(c);
}

} // namespace

GroebnerResult buchberger(const std::vector<FreeElement>& gens, const ModuleOrder& ord,
                          bool track) {
    GroebnerResult out;
    if (gens.empty()) return out;
    const std::size_t rank = gens[0].rank();
    RingPtr ring;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < rank; ++i)
            if (g[i].ring()) { ring = g[i].ring(); break; }
    if (!ring) return out;

    std::vector<Tracked> els;
    std::vector<Pair> pairs;

    auto add_element = [&](FreeElement g, std::vector<Polynomial> rep) {
        auto lead = mod_lead(g, ord);
        assert(lead);
        Scalar inv = lead->coeff.inverse();
        Tracked t{std::move(g), std::move(rep)};
        scale_tracked(t, inv);
        std::size_t idx = els.size();
        for (std::size_t j = 0; j < idx; ++j) {
            auto lj = mod_lead(els[j].g, ord);
            if (lj->pos != lead->pos) continue;
            pairs.push_back({j, idx, Monomial::lcm(lj->mono, lead->mono)});
        }
        els.push_back(std::move(t));
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rank() != rank) throw AlgebraError("buchberger: rank mismatch");
        if (gens[i].is_zero()) continue;
        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(gens.size(), Polynomial::zero(ring));
            rep[i] = Polynomial::constant(ring, 1);
        }
        add_element(gens[i], std::move(rep));
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pair_less(pairs[k], pairs[best], els, ord)) best = k;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        const Tracked& a = els[pr.i];
        const Tracked& b = els[pr.j];
        auto la = mod_lead(a.g, ord), lb = mod_lead(b.g, ord);
        Monomial ua = la->mono.quotient_of(pr.lcm);
        Monomial ub = lb->mono.quotient_of(pr.lcm);
        Scalar one = Scalar::one(ring->field());
        FreeElement s = a.g.times_term(one, ua) - b.g.times_term(one, ub);

        std::vector<FreeElement> cur;
        cur.reserve(els.size());
        for (const auto& e : els) cur.push_back(e.g);
        DivisionResult d = divide(s, cur, ord, track);
        if (d.remainder.is_zero()) continue;

        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(gens.size(), Polynomial::zero(ring));
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Polynomial acc = a.rep.empty() ? Polynomial::zero(ring)
                                               : a.rep[i].times_term(one, ua);
                if (!b.rep.empty()) acc = acc - b.rep[i].times_term(one, ub);
                for (std::size_t j = 0; j < els.size(); ++j)
                    if (!els[j].rep.empty())
                        acc = acc - d.quotients[j] * els[j].rep[i];
                rep[i] = acc;
            }
        }
        add_element(std::move(d.remainder), std::move(rep));
    }

    // Minimalize: drop elements whose lead is divisible by another kept lead.
    std::vector<std::size_t> order_idx(els.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
        auto lx = mod_lead(els[x].g, ord), ly = mod_lead(els[y].g, ord);
        int c = ord.compare(lx->pos, lx->mono, ly->pos, ly->mono);
        if (c != 0) return c < 0;
        return x < y;
    });
    std::vector<Tracked> kept;
    for (std::size_t oi : order_idx) {
        auto l = mod_lead(els[oi].g, ord);
        bool redundant = false;
        for (const auto& k : kept) {
            auto lk = mod_lead(k.g, ord);
            if (lk->pos == l->pos && lk->mono.divides(l->mono)) { redundant = true; break; }
        }
        if (!redundant) kept.push_back(els[oi]);
    }

    // Tail-reduce to the reduced basis (leads are pairwise non-divisible,
    // so only tails change; iterate to a fixpoint).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<FreeElement> others;
            std::vector<std::size_t> omap;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) { others.push_back(kept[j].g); omap.push_back(j); }
            DivisionResult d = divide(kept[i].g, others, ord, track);
            if (!(d.remainder == kept[i].g)) {
                changed = true;
                if (track) {
                    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                        Polynomial acc = kept[i].rep[gi];
                        for (std::size_t j = 0; j < others.size(); ++j)
                            acc = acc - d.quotients[j] * kept[omap[j]].rep[gi];
                        kept[i].rep[gi] = acc;
                    }
                }
                kept[i].g = std::move(d.remainder);
            }
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const Tracked& x, const Tracked& y) {
        auto lx = mod_lead(x.g, ord), ly = mod_lead(y.g, ord);
        return ord.compare(lx->pos, lx->mono, ly->pos, ly->mono) > 0;
    });

    for (auto& k : kept) {
        out.basis.push_back(std::move(k.g));
        if (track) out.transform.push_back(std::move(k.rep));
    }
    return out;
}

bool verify_buchberger(const std::vector<FreeElement>& basis, const ModuleOrder& ord) {
    for (const auto& g : basis) {
        auto l = mod_lead(g, ord);
        if (!l || !l->coeff.is_one()) return false;
        // reducedness: no term of g divisible by another element's lead
        for (const auto& h : basis) {
            if (&h == &g) continue;
            auto lh = mod_lead(h, ord);
            for (const auto& t : g[lh->pos].terms())
                if (lh->mono.divides(t.mono)) return false;
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto li = mod_lead(basis[i], ord), lj = mod_lead(basis[j], ord);
            if (li->pos != lj->pos) continue;
            Monomial L = Monomial::lcm(li->mono, lj->mono);
            Scalar one = Scalar::one(li->coeff.field());
            FreeElement s =
                basis[i].times_term(one / li->coeff, li->mono.quotient_of(L)) -
                basis[j].times_term(one / lj->coeff, lj->mono.quotient_of(L));
            if (!divide(s, basis, ord).remainder.is_zero()) return false;
        }
    }
    return true;
}

std::vector<FreeElement> syzygy_generators(const std::vector<FreeElement>& gens,
                                           const ModuleOrder& ord) {
    std::vector<FreeElement> syz;
    if (gens.empty()) return syz;
    RingPtr ring;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (g[i].ring()) { ring = g[i].ring(); break; }
    const std::size_t s = gens.size();
    if (!ring) return syz;

    // zero generators: their basis vectors are syzygies
    for (std::size_t i = 0; i < s; ++i)
        if (gens[i].is_zero()) syz.push_back(FreeElement::basis(ring, s, i));

    GroebnerResult gb = buchberger(gens, ord, /*track=*/true);
    const std::size_t t = gb.basis.size();
    if (t == 0) return syz;
    Scalar one = Scalar::one(ring->field());

    // Schreyer syzygies of the reduced basis, mapped back through the
    // transformation to the original generators.
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            auto li = mod_lead(gb.basis[i], ord), lj = mod_lead(gb.basis[j], ord);
            if (li->pos != lj->pos) continue;
            Monomial L = Monomial::lcm(li->mono, lj->mono);
            Monomial ui = li->mono.quotient_of(L), uj = lj->mono.quotient_of(L);
            FreeElement sp = gb.basis[i].times_term(one, ui) -
                             gb.basis[j].times_term(one, uj);
            DivisionResult d = divide(sp, gb.basis, ord, true);
            if (!d.remainder.is_zero())
                throw AlgebraError("internal: S-pair of reduced basis did not reduce to zero");
            // coefficient vector on the basis: ui e_i - uj e_j - quotients
            std::vector<Polynomial> on_basis(t, Polynomial::zero(ring));
            on_basis[i] = on_basis[i] + Polynomial::term(ring, ui, one);
            on_basis[j] = on_basis[j] - Polynomial::term(ring, uj, one);
            for (std::size_t k = 0; k < t; ++k) on_basis[k] = on_basis[k] - d.quotients[k];
            FreeElement w(ring, s);
            for (std::size_t gi = 0; gi < s; ++gi) {
                Polynomial acc = Polynomial::zero(ring);
                for (std::size_t k = 0; k < t; ++k)
                    acc = acc + on_basis[k] * gb.transform[k][gi];
                w[gi] = acc;
            }
            if (!w.is_zero()) syz.push_back(std::move(w));
        }
    }

    // Columns of I - P*Q, where Q re-expresses each generator in the basis.
    for (std::size_t i = 0; i < s; ++i) {
        if (gens[i].is_zero()) continue;
        DivisionResult d = divide(gens[i], gb.basis, ord, true);
        if (!d.remainder.is_zero())
            throw AlgebraError("internal: generator does not reduce to zero against its basis");
        FreeElement w = FreeElement::basis(ring, s, i);
        for (std::size_t gi = 0; gi < s; ++gi) {
            Polynomial acc = Polynomial::zero(ring);
            for (std::size_t k = 0; k < t; ++k)
                acc = acc + d.quotients[k] * gb.transform[k][gi];
            w[gi] = w[gi] - acc;
        }
        if (!w.is_zero()) syz.push_back(std::move(w));
    }
    return syz;
}

} // namespace adic
