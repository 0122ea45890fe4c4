#ifndef BIGRADE_IDEAL_OPS_HPP
#define BIGRADE_IDEAL_OPS_HPP

#include <cstdint>
#include <vector>

#include "bigrade/groebner.hpp"

namespace bigrade {

// Block-diagonal change of coordinates u = (u^x, u^y), both blocks
// invertible. seed == 0 marks a handcrafted matrix.
struct BlockMatrix {
    std::vector<std::vector<Coeff>> ux;  // nx x nx
    std::vector<std::vector<Coeff>> uy;  // ny x ny
    std::uint64_t seed = 0;

    static BlockMatrix identity(const RingDescriptor& ring);
};

// Entries uniform in [-2^16, 2^16] from a seeded deterministic
// generator; blocks re-sampled until invertible (at most 64 attempts).
BlockMatrix random_block_matrix(const RingDescriptor& ring, std::uint64_t seed);

// A random linear x-form with coefficients from the same generator.
Polynomial random_linear_xform(const RingDescriptor& ring, std::uint64_t seed);

bool is_invertible(const std::vector<std::vector<Coeff>>& m, FieldSpec field);

// g -> g(u(x,y)) on every generator; bidegrees are preserved.
Polynomial change_coordinates(const Polynomial& f, const BlockMatrix& u);
Ideal change_coordinates(const Ideal& I, const BlockMatrix& u);

// (I : f) = (I n (f)) / f, via elimination of the auxiliary variable.
Ideal colon_poly(const Ideal& I, const Polynomial& f);

// Eliminates t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

enum class SaturationMode { ByMx, ByMy, ByB };

// (I : f^inf) by iterating the colon until the reduced basis stabilizes.
Ideal saturate_poly(const Ideal& I, const Polynomial& f);
// By-mx intersects the single-variable saturations (I : x_i^inf); by-my
// is symmetric; by-b applies by-my after by-mx.
Ideal saturate(const Ideal& I, SaturationMode mode);

// (I : v^inf) for a single variable, via the reverse-lex division
// trick: in a DRL order where v is the globally smallest variable, a
// Groebner basis of the saturation is obtained by dividing each basis
// element by its v-power. Cross-checked against the iterated colon in
// the tests.
Ideal saturate_variable(const Ideal& I, bool x_block, int index);

// True iff the saturation by the irrelevant ideal b is the unit ideal.
bool is_empty_variety(const Ideal& I);

// Sum with linear x-forms; every form must have bidegree (1,0).
Ideal add_linear_forms(const Ideal& I, const std::vector<Polynomial>& forms);

} // namespace bigrade

#endif
