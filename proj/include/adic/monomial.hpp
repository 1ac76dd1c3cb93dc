#ifndef ADIC_MONOMIAL_HPP
#define ADIC_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adic/field.hpp"

namespace adic {

/// Power product in a fixed number of variables, dense exponent vector.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Componentwise difference; requires divides(o) in the caller's direction.
    Monomial quotient_of(const Monomial& numerator) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_len(const Monomial& o) const;

    std::vector<std::uint32_t> e_;
    std::uint32_t deg_;
};

enum class OrderKind { lex, grevlex };

/// Total multiplicative order on monomials with 1 minimal.
struct TermOrder {
    OrderKind kind = OrderKind::grevlex;

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const TermOrder& o) const { return kind == o.kind; }
    std::string str() const { return kind == OrderKind::lex ? "lex" : "grevlex"; }
};

} // namespace adic

#endif
