#ifndef BIGRADE_POLYNOMIAL_HPP
#define BIGRADE_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bigrade/monomial.hpp"

namespace bigrade {

struct Term {
    Coeff c;
    Monomial m;
};

// Sparse polynomial: terms sorted strictly decreasing in the ring's
// order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    explicit Polynomial(RingDescriptor ring) : ring_(std::move(ring)) {}
    // Terms in any order; merged and sorted.
    Polynomial(RingDescriptor ring, std::vector<Term> terms);

    static Polynomial zero(const RingDescriptor& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingDescriptor& ring, const Coeff& c);
    static Polynomial monomial(const RingDescriptor& ring, Monomial m,
                               std::optional<Coeff> c = std::nullopt);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Coeff& leading_coeff() const { return leading_term().c; }

    Bidegree bidegree() const;       // throws on zero or inhomogeneous input
    bool is_bihomogeneous() const;   // true for zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial times_term(const Coeff& c, const Monomial& m) const;

    bool operator==(const Polynomial& o) const;

    // Leading coefficient 1 (field normalization).
    Polynomial monic() const;
    // Rational coefficients scaled to integer content 1, sign of the
    // leading coefficient positive. Identity for prime fields.
    Polynomial primitive() const;

    // Exact division by a polynomial; nullopt if not divisible.
    std::optional<Polynomial> divided_exact(const Polynomial& d) const;

    // Checkable invariant: sortedness and absence of zeros/dups.
    bool well_formed() const;

    std::string str() const;

private:
    RingDescriptor ring_;
    std::vector<Term> terms_;
};

} // namespace bigrade

#endif
