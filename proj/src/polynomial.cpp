#include "adic/polynomial.hpp"

#include <algorithm>
#include <set>

namespace adic {

PolyRing::PolyRing(Field field, std::vector<std::string> vars, TermOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size())
        throw AlgebraError("ring: duplicate variable names");
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::string PolyRing::str() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

RingPtr make_poly_ring(Field field, std::vector<std::string> vars, TermOrder order) {
    return std::make_shared<const PolyRing>(field, std::move(vars), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    return term(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar::of_int(c, ring->field()));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i, std::uint32_t e) {
    if (i >= ring->nvars()) throw AlgebraError("variable index out of range");
    return term(ring, Monomial::variable(ring->nvars(), i, e), Scalar::one(ring->field()));
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m, const Scalar& c) {
    if (m.nvars() != ring->nvars()) throw AlgebraError("monomial/ring arity mismatch");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    const TermOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) > 0;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars())
            throw AlgebraError("monomial/ring arity mismatch");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(ring_->field());
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw AlgebraError("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    const TermOrder& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial acc(ring_);
    for (const auto& t : o.terms_)
        acc = acc + times_term(t.coeff, t.mono);
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (i == 0) {
            if (neg) { s += "-"; c = c.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        if (t.mono.is_one()) {
            s += c;
        } else if (c == "1") {
            s += t.mono.str(ring_->vars());
        } else {
            s += c + "*" + t.mono.str(ring_->vars());
        }
    }
    return s;
}

FreeElement FreeElement::basis(const RingPtr& ring, std::size_t rank, std::size_t i) {
    FreeElement e(ring, rank);
    e[i] = Polynomial::constant(ring, 1);
    return e;
}

bool FreeElement::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    if (rank() != o.rank()) throw AlgebraError("free element rank mismatch");
    FreeElement r(*this);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    if (rank() != o.rank()) throw AlgebraError("free element rank mismatch");
    FreeElement r(*this);
    for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

FreeElement FreeElement::operator-() const {
    FreeElement r(*this);
    for (auto& p : r.comps_) p = -p;
    return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
    FreeElement r(*this);
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
}

FreeElement FreeElement::times_poly(const Polynomial& p) const {
    FreeElement r(*this);
    for (auto& q : r.comps_) q = q * p;
    return r;
}

FreeElement FreeElement::times_term(const Scalar& c, const Monomial& m) const {
    FreeElement r(*this);
    for (auto& q : r.comps_) q = q.times_term(c, m);
    return r;
}

std::string FreeElement::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += ", ";
        s += comps_[i].str();
    }
    return s + ")";
}

} // namespace adic
