#include "adic/field.hpp"

namespace adic {

static bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw AlgebraError("GF(p): modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::str() const {
    return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(long v, const Field& f) : v_(v), p_(f.characteristic()) {
    reduce_mod_p();
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den, const Field& f) {
    if (den == 0) throw AlgebraError("rational with zero denominator");
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.v_ = mpq_class(num, den);
        s.v_.canonicalize();
    } else {
        // num/den as a GF(p) residue
        Scalar n, d;
        n.p_ = d.p_ = s.p_;
        n.v_ = mpq_class(num);
        d.v_ = mpq_class(den);
        n.reduce_mod_p();
        d.reduce_mod_p();
        s = n / d;
    }
    return s;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw AlgebraError("scalar field mismatch: " + field().str() + " vs " + o.field().str());
}

void Scalar::reduce_mod_p() {
    if (p_ == 0) return;
    mpz_class r = v_.get_num() % p_;
    if (r < 0) r += p_;
    v_ = mpq_class(r);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    s.v_ = v_ + o.v_;
    s.reduce_mod_p();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    s.v_ = v_ - o.v_;
    s.reduce_mod_p();
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    s.v_ = v_ * o.v_;
    s.reduce_mod_p();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.p_ = p_;
    s.v_ = -v_;
    s.reduce_mod_p();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw AlgebraError("inverse of zero");
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.v_ = 1 / v_;
    } else {
        mpz_class inv, mod(p_);
        if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
            throw AlgebraError("residue not invertible mod p");
        s.v_ = mpq_class(inv);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    return p_ == o.p_ && v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

} // namespace adic
