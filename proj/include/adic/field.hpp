#ifndef ADIC_FIELD_HPP
#define ADIC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace adic {

/// Raised on violated preconditions (ring mismatch, division by zero, ...).
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Coefficient field: the rationals (p == 0) or a prime field GF(p).
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const;

private:
    std::uint32_t p_;
};

/// Exact field element. Rationals are kept reduced with positive
/// denominator; GF(p) residues are kept in [0, p).
class Scalar {
public:
    Scalar() : p_(0) {}

    static Scalar zero(const Field& f) { return Scalar(0, f); }
    static Scalar one(const Field& f) { return Scalar(1, f); }
    static Scalar of_int(long v, const Field& f) { return Scalar(v, f); }
    static Scalar rational(const mpz_class& num, const mpz_class& den, const Field& f);

    const Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Underlying rational value (QQ) or residue as value/1 (GF(p)).
    const mpq_class& value() const { return v_; }

    std::string str() const;

private:
    Scalar(long v, const Field& f);
    void check_same_field(const Scalar& o) const;
    void reduce_mod_p();

    mpq_class v_;
    std::uint32_t p_;
};

} // namespace adic

#endif
