#ifndef BIGRADE_REGULARITY_HPP
#define BIGRADE_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bigrade/hilbert.hpp"
#include "bigrade/ideal_ops.hpp"
#include "bigrade/region.hpp"

namespace bigrade {

// in(u o I) for a seeded generic block change of coordinates u. The
// computation runs twice with independent seeds; disagreement raises a
// genericity error (retry with another seed), a non-bi-Borel result
// raises a contradiction error.
struct BiginResult {
    MonomialIdeal ideal;
    std::uint64_t seed1 = 0;
    std::uint64_t seed2 = 0;
    BlockOrder order = BlockOrder::XBlockLow;
    bool stable = false;
};

BiginResult bigin(const Ideal& I, BlockOrder order, std::uint64_t seed);

enum class CertificateKind { Absence, Presence, ExactCriterion };

// Re-checkable record of a generator presence/absence conclusion.
struct Certificate {
    CertificateKind kind = CertificateKind::Absence;
    std::optional<Bidegree> bidegree;
    Region region{Bidegree{1, 0}};
    bool verdict = false;
    std::optional<Monomial> witness;
};

// The partial x-regularity region of a bi-Borel monomial ideal M as an
// antichain over Z_{>0} x Z_{>=0}: with J_{k-1} = (M, x_0..x_{k-1}) and
// k0 minimal such that J_{k0} contains (x_0..x_n), the intersection of
// the colon-equality regions for k = 0..k0.
Region xreg_region(const MonomialIdeal& M, int max_box = 64);

// xreg through the bigeneric initial ideal; the block order is forced
// to x-block-low, which is the one the invariance result covers.
Region xreg_of_ideal(const Ideal& I, std::uint64_t seed, int max_box = 64);

// For an ideal with empty vanishing locus, the regularity region is the
// set of bidegrees where the Hilbert function of S/I vanishes.
Region reg_empty(const Ideal& I, int max_box = 64);

// No minimal generator of M has bidegree in R + (1,0); a violation is a
// contradiction error, never a returned failure.
Certificate certify_absence(const MonomialIdeal& M, const Region& R);

// For every minimal element (a,b) of R with a > 1, a minimal generator
// of bidegree (a,b') with b' <= b must exist; returns one certificate
// per such element with the witness generator.
std::vector<Certificate> certify_presence(const MonomialIdeal& M, const Region& R);

// Graded colon criterion: true iff M has a minimal generator of
// bidegree d, decided by comparing (J_{k-1} : x_k) with
// J_{k-1} + my(J_{k-1} : x_k) in bidegree (a-1, b) for every k.
bool generator_bidegree_test(const MonomialIdeal& M, Bidegree d);

// generator_bidegree_test wrapped as a re-checkable certificate.
Certificate certify_exact(const MonomialIdeal& M, Bidegree d);

// Maximal x-degree (resp. y-degree) over the minimal generators of a
// bi-Borel monomial ideal.
int xtor(const MonomialIdeal& M);
int ytor(const MonomialIdeal& M);

} // namespace bigrade

#endif
