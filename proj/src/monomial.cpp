#include "adic/monomial.hpp"

#include <numeric>

namespace adic {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), std::uint32_t(0));
}

void Monomial::check_len(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw AlgebraError("monomial length mismatch");
}

Monomial Monomial::operator*(const Monomial& o) const {
    check_len(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    check_len(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    check_len(numerator);
    if (!divides(numerator))
        throw AlgebraError("monomial quotient: not divisible");
    Monomial r(numerator);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    r.deg_ = numerator.deg_ - deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.check_len(b);
    Monomial r(a);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), std::uint32_t(0));
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    a.check_len(b);
    Monomial r(a);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), std::uint32_t(0));
    return r;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
    Monomial m(nvars);
    m.e_[i] = e;
    m.deg_ = e;
    return m;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw AlgebraError("term order: monomial length mismatch");
    if (kind == OrderKind::lex) {
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? 1 : -1;
        }
        return 0;
    }
    // grevlex: total degree first, ties by the last variable in which the
    // exponents differ, smaller exponent wins.
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
}

} // namespace adic
