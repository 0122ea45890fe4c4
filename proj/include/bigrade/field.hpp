#ifndef BIGRADE_FIELD_HPP
#define BIGRADE_FIELD_HPP

#include <gmpxx.h>
#include <string>

#include "bigrade/errors.hpp"

namespace bigrade {

// Coefficient field tag: p == 0 means exact rationals, otherwise Z/p
// with p a prime > 2^15 (a genericity proxy; the prime-field mode is a
// heuristic and never replaces rational runs that cite exact values).
struct FieldSpec {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
};

FieldSpec rationals();
FieldSpec prime_field(unsigned long p);

// A field element. Rationals are arbitrary-precision; prime-field
// values are canonical residues in [0, p).
class Coeff {
public:
    Coeff() : p_(0) {}
    Coeff(long v, FieldSpec f);
    Coeff(const mpq_class& v, FieldSpec f);

    static Coeff zero(FieldSpec f) { return Coeff(0, f); }
    static Coeff one(FieldSpec f) { return Coeff(1, f); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    FieldSpec field() const { return {p_}; }
    const mpq_class& value() const { return v_; }

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff inv() const;

    bool operator==(const Coeff& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce();
    void check(const Coeff& o) const;

    mpq_class v_;
    unsigned long p_;
};

} // namespace bigrade

#endif
