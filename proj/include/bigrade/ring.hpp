#ifndef BIGRADE_RING_HPP
#define BIGRADE_RING_HPP

#include <string>

#include "bigrade/errors.hpp"
#include "bigrade/field.hpp"

namespace bigrade {

// Which variable block is smaller in the DRL order. XBlockLow is the
// order x_0 < ... < x_n < y_0 < ... < y_m.
enum class BlockOrder { XBlockLow, YBlockLow };

// The Z^2-grading of a monomial, polynomial or region element.
struct Bidegree {
    int a = 0;
    int b = 0;

    bool operator==(const Bidegree&) const = default;
    Bidegree operator+(Bidegree o) const { return {a + o.a, b + o.b}; }
    Bidegree operator-(Bidegree o) const { return {a - o.a, b - o.b}; }

    // Componentwise partial order.
    bool geq(Bidegree o) const { return a >= o.a && b >= o.b; }
    // Strict: >= and not equal.
    bool gneq(Bidegree o) const { return geq(o) && *this != o; }

    Bidegree clamp(Bidegree lo) const {
        return {a < lo.a ? lo.a : a, b < lo.b ? lo.b : b};
    }
    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

// Total order for canonical sorting only (not the monomial order).
inline bool bidegree_lt(Bidegree l, Bidegree r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
}

// Componentwise max, used when intersecting up-closed regions.
inline Bidegree join(Bidegree l, Bidegree r) {
    return {l.a > r.a ? l.a : r.a, l.b > r.b ? l.b : r.b};
}

// Descriptor of S = k[x_0..x_{nx-1}, y_0..y_{ny-1}], optionally with an
// elimination variable t ranked above everything else.
struct RingDescriptor {
    int nx = 2;
    int ny = 2;
    FieldSpec field;
    BlockOrder block_order = BlockOrder::XBlockLow;
    bool aux_var = false;

    RingDescriptor() = default;
    RingDescriptor(int nx_, int ny_, FieldSpec f = {},
                   BlockOrder bo = BlockOrder::XBlockLow, bool aux = false)
        : nx(nx_), ny(ny_), field(f), block_order(bo), aux_var(aux) {
        if (nx < 2 || ny < 2)
            throw contract_error("ring needs at least two variables per block");
    }

    bool operator==(const RingDescriptor&) const = default;

    RingDescriptor with_order(BlockOrder bo) const {
        RingDescriptor r = *this;
        r.block_order = bo;
        return r;
    }
    RingDescriptor with_aux() const {
        RingDescriptor r = *this;
        r.aux_var = true;
        return r;
    }
    RingDescriptor without_aux() const {
        RingDescriptor r = *this;
        r.aux_var = false;
        return r;
    }
};

inline void check_same_ring(const RingDescriptor& r1, const RingDescriptor& r2) {
    if (!(r1 == r2)) throw contract_error("ring mismatch");
}

} // namespace bigrade

#endif
