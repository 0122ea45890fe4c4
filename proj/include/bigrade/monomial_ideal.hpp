#ifndef BIGRADE_MONOMIAL_IDEAL_HPP
#define BIGRADE_MONOMIAL_IDEAL_HPP

#include <optional>
#include <vector>

#include "bigrade/ideal.hpp"
#include "bigrade/monomial.hpp"

namespace bigrade {

// A staircase: the finite set of minimal monomial generators, pairwise
// non-dividing, kept sorted in the ring's order for canonical equality.
class MonomialIdeal {
public:
    explicit MonomialIdeal(RingDescriptor ring) : ring_(std::move(ring)) {}
    MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens);

    static MonomialIdeal unit(const RingDescriptor& ring);
    // The block ideals mx = (x_0..x_n) and my = (y_0..y_m).
    static MonomialIdeal mx(const RingDescriptor& ring);
    static MonomialIdeal my(const RingDescriptor& ring);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& o) const;

    MonomialIdeal plus(const MonomialIdeal& o) const;
    MonomialIdeal plus(const std::vector<Monomial>& extra) const;
    // (M : m) by exponent subtraction on each generator.
    MonomialIdeal colon(const Monomial& m) const;
    MonomialIdeal intersect(const MonomialIdeal& o) const;  // pairwise lcm
    // my * M (or mx * M): every generator times every block variable.
    MonomialIdeal times_block(bool x_block) const;

    // Componentwise maxima of generator bidegrees; errors on the zero ideal.
    Bidegree max_gen_bidegree() const;
    std::vector<Bidegree> gen_bidegrees() const;

    bool operator==(const MonomialIdeal& o) const;

    Ideal to_ideal() const;

private:
    RingDescriptor ring_;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of an arbitrary generating set.
MonomialIdeal minimal_generators(const RingDescriptor& ring, std::vector<Monomial> gens);

// The bi-Borel exchange property; on failure returns the offending
// monomial that is missing from the ideal.
struct BiBorelCheck {
    bool ok;
    std::optional<Monomial> missing_witness;
};
BiBorelCheck biborel_check(const MonomialIdeal& M);
inline bool is_biborel(const MonomialIdeal& M) { return biborel_check(M).ok; }

} // namespace bigrade

#endif
