#ifndef BIGRADE_MONOMIAL_HPP
#define BIGRADE_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bigrade/ring.hpp"

namespace bigrade {

enum class Ordering { Less, Equal, Greater };

// x^alpha y^beta, optionally times t^te when the ring has the
// elimination variable enabled.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> alpha, std::vector<int> beta, int te = 0);

    static Monomial one(const RingDescriptor& ring);
    // x_i resp. y_j as a monomial.
    static Monomial xvar(const RingDescriptor& ring, int i);
    static Monomial yvar(const RingDescriptor& ring, int j);
    static Monomial tvar(const RingDescriptor& ring);

    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& beta() const { return beta_; }
    int texp() const { return t_; }
    int xexp(int i) const { return alpha_[i]; }
    int yexp(int j) const { return beta_[j]; }

    int xdeg() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0); }
    int ydeg() const { return std::accumulate(beta_.begin(), beta_.end(), 0); }
    Bidegree bidegree() const { return {xdeg(), ydeg()}; }
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Precondition: divides(o).
    Monomial quotient_of(const Monomial& o) const;  // o / *this
    friend Monomial lcm(const Monomial& l, const Monomial& r);
    friend Monomial gcd(const Monomial& l, const Monomial& r);

    bool operator==(const Monomial&) const = default;

    std::string str(const RingDescriptor& ring) const;

private:
    std::vector<int> alpha_;
    std::vector<int> beta_;
    int t_ = 0;
};

// The block DRL order (with total-degree-first extension across
// bidegrees) determined by ring.block_order; the elimination variable,
// when enabled, is compared first.
Ordering compare(const Monomial& m1, const Monomial& m2, const RingDescriptor& ring);

inline bool mono_less(const Monomial& m1, const Monomial& m2, const RingDescriptor& ring) {
    return compare(m1, m2, ring) == Ordering::Less;
}

// Deterministic enumeration of all monomials of bidegree d, decreasing
// in the ring's order not guaranteed; callers sort when they care.
std::vector<Monomial> monomials_of_bidegree(const RingDescriptor& ring, Bidegree d);

// Number of monomials of bidegree d in the ring (no aux variable).
long monomial_count(const RingDescriptor& ring, Bidegree d);

} // namespace bigrade

#endif
