#ifndef ADIC_POLYNOMIAL_HPP
#define ADIC_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adic/field.hpp"
#include "adic/monomial.hpp"

namespace adic {

/// Polynomial ring K[t_1..t_n] with a fixed term order. Shared, immutable.
class PolyRing {
public:
    PolyRing(Field field, std::vector<std::string> vars, TermOrder order);

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermOrder& order() const { return order_; }

    std::optional<std::size_t> var_index(const std::string& name) const;

    bool operator==(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
    }

    std::string str() const;

private:
    Field field_;
    std::vector<std::string> vars_;
    TermOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(Field field, std::vector<std::string> vars,
                       TermOrder order = {OrderKind::grevlex});

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Exact multivariate polynomial: terms sorted descending in the ring's
/// order, no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long c);
    static Polynomial variable(const RingPtr& ring, std::size_t i, std::uint32_t e = 1);
    static Polynomial term(const RingPtr& ring, const Monomial& m, const Scalar& c);
    /// From unsorted term list; merges duplicates, drops zeros.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }
    std::uint32_t total_degree() const;  // 0 for the zero polynomial
    bool is_constant() const;
    /// Coefficient of the given monomial (zero scalar if absent).
    Scalar coeff_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    /// this * (c * m) -- the division-step workhorse.
    Polynomial times_term(const Scalar& c, const Monomial& m) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Element of a finite free module R^r: one polynomial per component.
class FreeElement {
public:
    FreeElement() = default;
    FreeElement(const RingPtr& ring, std::size_t rank)
        : comps_(rank, Polynomial::zero(ring)) {}
    explicit FreeElement(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

    static FreeElement basis(const RingPtr& ring, std::size_t rank, std::size_t i);

    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    Polynomial& operator[](std::size_t i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const;
    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator-() const;
    FreeElement scaled(const Scalar& c) const;
    FreeElement times_poly(const Polynomial& p) const;
    FreeElement times_term(const Scalar& c, const Monomial& m) const;

    bool operator==(const FreeElement& o) const { return comps_ == o.comps_; }

    std::string str() const;

private:
    std::vector<Polynomial> comps_;
};

} // namespace adic

#endif
