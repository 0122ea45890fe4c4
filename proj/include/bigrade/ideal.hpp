#ifndef BIGRADE_IDEAL_HPP
#define BIGRADE_IDEAL_HPP

#include <vector>

#include "bigrade/polynomial.hpp"

namespace bigrade {

// Generator list plus ring descriptor. Zero generators are dropped.
struct Ideal {
    RingDescriptor ring;
    std::vector<Polynomial> generators;

    explicit Ideal(RingDescriptor r) : ring(std::move(r)) {}
    Ideal(RingDescriptor r, std::vector<Polynomial> gens)
        : ring(std::move(r)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            check_same_ring(ring, g.ring());
            generators.push_back(std::move(g));
        }
    }

    bool is_zero_ideal() const { return generators.empty(); }

    bool is_bihomogeneous() const {
        for (const auto& g : generators)
            if (!g.is_bihomogeneous()) return false;
        return true;
    }

    void require_bihomogeneous() const {
        if (!is_bihomogeneous())
            throw contract_error("ideal is not bihomogeneous");
    }
};

} // namespace bigrade

#endif
