#ifndef BIGRADE_GROEBNER_HPP
#define BIGRADE_GROEBNER_HPP

#include <optional>
#include <vector>

#include "bigrade/ideal.hpp"
#include "bigrade/monomial_ideal.hpp"

namespace bigrade {

struct GroebnerBasis {
    RingDescriptor ring;
    std::vector<Polynomial> elements;
    bool reduced = false;

    bool operator==(const GroebnerBasis& o) const {
        return ring == o.ring && elements == o.elements;
    }
};

// Multivariate division: the result has no term divisible by a leading
// monomial of the basis, and f - result lies in (basis).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Buchberger with the product and chain criteria; pairs processed in
// increasing (total degree, x-degree) of the S-pair lcm, ties by
// generator index. An optional bidegree cap skips S-pairs whose lcm
// exceeds it, yielding a basis valid for queries at bidegrees <= cap.
GroebnerBasis buchberger(const Ideal& I, std::optional<Bidegree> cap = std::nullopt);

// Unique reduced basis: monic elements, fully tail-reduced, sorted.
GroebnerBasis reduce(const GroebnerBasis& G);

GroebnerBasis reduced_basis(const Ideal& I, std::optional<Bidegree> cap = std::nullopt);

// Buchberger's criterion, checkable: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

// Minimal-generator form of in(I).
MonomialIdeal initial_ideal(const Ideal& I);

bool membership(const Polynomial& f, const Ideal& I);

// Ideal equality via uniqueness of the reduced basis.
bool ideal_equal(const Ideal& I, const Ideal& J);

} // namespace bigrade

#endif
