#ifndef BIGRADE_HILBERT_HPP
#define BIGRADE_HILBERT_HPP

#include "bigrade/monomial_ideal.hpp"
#include "bigrade/region.hpp"

namespace bigrade {

// dim_k (S/M)_{(a,b)}: count of standard monomials of bidegree d.
// Direct enumeration below the threshold, inclusion-exclusion above;
// both routes are exposed so tests can cross-check them.
long hilbert_function(const MonomialIdeal& M, Bidegree d);
long hilbert_function_enumerate(const MonomialIdeal& M, Bidegree d);
long hilbert_function_inclusion_exclusion(const MonomialIdeal& M, Bidegree d);

// Direct enumeration is used while the monomial count stays below this.
inline constexpr long kEnumerationThreshold = 1'000'000;

// The up-closed set {(a,b) in N^2 : HF_{S/M}(a,b) = 0} as its antichain
// of minimal elements. Searches an adaptively doubled box; a box is
// accepted once it covers a provable bound on the coordinates of the
// minimal elements, and the result is re-verified by brute force on the
// final box. Boxes beyond max_box fail loudly.
Region hf_zero_region(const MonomialIdeal& M, int max_box = 64);

// The region of (a,b) with (M : x_k)_{(a',b')} = M_{(a',b')} for every
// (a',b') >= (a,b), where M plays the role of J_{k-1}. Computed as the
// complement of the star closure of the witness bidegrees via the
// hf_zero_region reduction; ambient Z_{>0} x Z_{>=0}.
Region colon_equality_region(const MonomialIdeal& M, int k, int max_box = 64);

} // namespace bigrade

#endif
