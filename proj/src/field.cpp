#include "bigrade/field.hpp"

namespace bigrade {

FieldSpec rationals() { return {0}; }

FieldSpec prime_field(unsigned long p) {
    if (p <= (1ul << 15))
        throw contract_error("prime modulus must exceed 2^15, got " + std::to_string(p));
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
        throw contract_error("modulus " + std::to_string(p) + " is not prime");
    return {p};
}

Coeff::Coeff(long v, FieldSpec f) : v_(v), p_(f.p) { reduce(); }

Coeff::Coeff(const mpq_class& v, FieldSpec f) : v_(v), p_(f.p) { reduce(); }

void Coeff::reduce() {
    if (p_ == 0) {
        v_.canonicalize();
        return;
    }
    mpz_class p(p_);
    mpz_class num = v_.get_num() % p;
    mpz_class den = v_.get_den() % p;
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw contract_error("division by zero in prime field");
        num = (num * dinv) % p;
    }
    if (num < 0) num += p;
    v_ = mpq_class(num);
}

void Coeff::check(const Coeff& o) const {
    if (p_ != o.p_) throw contract_error("coefficient field mismatch");
}

Coeff Coeff::operator-() const {
    Coeff r;
    r.p_ = p_;
    r.v_ = -v_;
    r.reduce();
    return r;
}

Coeff Coeff::operator+(const Coeff& o) const {
    check(o);
    Coeff r;
    r.p_ = p_;
    r.v_ = v_ + o.v_;
    r.reduce();
    return r;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check(o);
    Coeff r;
    r.p_ = p_;
    r.v_ = v_ - o.v_;
    r.reduce();
    return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check(o);
    Coeff r;
    r.p_ = p_;
    r.v_ = v_ * o.v_;
    r.reduce();
    return r;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw contract_error("inverse of zero");
    Coeff r;
    r.p_ = p_;
    if (p_ == 0) {
        r.v_ = 1 / v_;
    } else {
        mpz_class p(p_), vinv;
        mpz_class num = v_.get_num();
        mpz_invert(vinv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        r.v_ = vinv;
    }
    r.reduce();
    return r;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

std::string Coeff::str() const { return v_.get_str(); }

} // namespace bigrade
