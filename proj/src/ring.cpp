#include "adic/ring.hpp"

#include <algorithm>
#include <set>

namespace adic {

std::vector<Polynomial> ideal_groebner(const RingPtr& ring,
                                       const std::vector<Polynomial>& gens) {
    std::vector<FreeElement> cols;
    for (const auto& g : gens)
        if (!g.is_zero()) cols.push_back(FreeElement({g}));
    ModuleOrder ord{ring->order(), true};
    GroebnerResult gb = buchberger(cols, ord);
    std::vector<Polynomial> out;
    for (const auto& e : gb.basis) out.push_back(e[0]);
    return out;
}

Ring Ring::polynomial(RingPtr poly) {
    Ring r;
    auto rep = std::make_shared<Rep>();
    rep->poly = std::move(poly);
    r.rep_ = rep;
    return r;
}

Ring Ring::quotient(RingPtr poly, std::vector<Polynomial> gens) {
    Ring r;
    auto rep = std::make_shared<Rep>();
    rep->modulus_gb = ideal_groebner(poly, gens);
    rep->poly = std::move(poly);
    r.rep_ = rep;
    return r;
}

Ring Ring::level_quotient(const Ring& base, const std::vector<Polynomial>& a_gens, int k) {
    if (k < 0) throw AlgebraError("level must be >= 0");
    std::vector<Polynomial> gens = base.modulus_gb();
    for (auto& p : ideal_power(a_gens, static_cast<unsigned>(k + 1)))
        gens.push_back(std::move(p));
    Ring r;
    auto rep = std::make_shared<Rep>();
    rep->poly = base.poly();
    rep->modulus_gb = ideal_groebner(rep->poly, gens);
    rep->level = k;

    // graded-local: zero base modulus and a generated by the full set of
    // indeterminates, so the maximal graded ideal of A_k is nilpotent.
    if (!base.has_modulus()) {
        std::set<std::size_t> vars;
        bool all_vars = true;
        for (const auto& g : a_gens) {
            Polynomial q = base.nf(g);
            if (q.nterms() == 1 && q.leading_coeff().is_one() &&
                q.leading_monomial().degree() == 1) {
                for (std::size_t i = 0; i < rep->poly->nvars(); ++i)
                    if (q.leading_monomial().exponent(i) == 1) vars.insert(i);
            } else {
                all_vars = false;
            }
        }
        rep->graded_local = all_vars && vars.size() == rep->poly->nvars();
    }
    r.rep_ = rep;
    return r;
}

Polynomial Ring::nf(const Polynomial& p) const {
    if (!has_modulus() || p.is_zero()) return p;
    std::vector<FreeElement> basis;
    for (const auto& g : rep_->modulus_gb) basis.push_back(FreeElement({g}));
    return divide(FreeElement({p}), basis, module_order()).remainder[0];
}

FreeElement Ring::nf(const FreeElement& e) const {
    if (!has_modulus()) return e;
    FreeElement r = e;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] = nf(r[i]);
    return r;
}

bool Ring::is_unit(const Polynomial& u) const {
    Polynomial q = nf(u);
    if (q.is_zero()) return false;
    if (q.is_constant()) return true;
    if (!has_modulus()) return false;
    std::vector<Polynomial> gens = rep_->modulus_gb;
    gens.push_back(q);
    std::vector<Polynomial> gb = ideal_groebner(rep_->poly, gens);
    return gb.size() == 1 && gb[0].is_constant();
}

Polynomial Ring::unit_inverse(const Polynomial& u) const {
    Polynomial q = nf(u);
    if (q.is_zero()) throw AlgebraError("unit_inverse: zero element");
    if (q.is_constant())
        return Polynomial::constant(rep_->poly, q.leading_coeff().inverse());
    // track 1 = v*u + (modulus part)
    std::vector<FreeElement> cols;
    cols.push_back(FreeElement({q}));
    for (const auto& g : rep_->modulus_gb) cols.push_back(FreeElement({g}));
    GroebnerResult gb = buchberger(cols, module_order(), /*track=*/true);
    FreeElement one({Polynomial::constant(rep_->poly, 1)});
    DivisionResult d = divide(one, gb.basis, module_order(), true);
    if (!d.remainder.is_zero()) throw AlgebraError("unit_inverse: element is not a unit");
    Polynomial v = Polynomial::zero(rep_->poly);
    for (std::size_t j = 0; j < gb.basis.size(); ++j)
        v = v + d.quotients[j] * gb.transform[j][0];
    return nf(v);
}

bool Ring::is_field() const {
    for (std::size_t i = 0; i < rep_->poly->nvars(); ++i)
        if (!nf(Polynomial::variable(rep_->poly, i)).is_constant()) return false;
    return true;
}

bool Ring::operator==(const Ring& o) const {
    if (rep_.get() == o.rep_.get()) return true;
    if (!rep_ || !o.rep_) return false;
    if (!same_ring(rep_->poly, o.rep_->poly)) return false;
    if (rep_->modulus_gb.size() != o.rep_->modulus_gb.size()) return false;
    for (std::size_t i = 0; i < rep_->modulus_gb.size(); ++i)
        if (!(rep_->modulus_gb[i] == o.rep_->modulus_gb[i])) return false;
    return true;
}

std::string Ring::str() const {
    std::string s = rep_->poly->str();
    if (has_modulus()) {
        s += "/<";
        for (std::size_t i = 0; i < rep_->modulus_gb.size(); ++i) {
            if (i) s += ", ";
            s += rep_->modulus_gb[i].str();
        }
        s += ">";
    }
    return s;
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, unsigned e) {
    if (e == 0 || gens.empty()) return {};
    // combinations with repetition: gens[i1]*...*gens[ie], i1 <= ... <= ie
    std::vector<std::pair<Polynomial, std::size_t>> cur;
    for (std::size_t i = 0; i < gens.size(); ++i) cur.push_back({gens[i], i});
    for (unsigned step = 1; step < e; ++step) {
        std::vector<std::pair<Polynomial, std::size_t>> next;
        for (const auto& [p, last] : cur)
            for (std::size_t j = last; j < gens.size(); ++j)
                next.push_back({p * gens[j], j});
        cur = std::move(next);
    }
    std::vector<Polynomial> out;
    out.reserve(cur.size());
    for (auto& [p, last] : cur) out.push_back(std::move(p));
    return out;
}

} // namespace adic
