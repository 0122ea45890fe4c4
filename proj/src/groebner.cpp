#include "bigrade/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace bigrade {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = f.leading_monomial().quotient_of(L);
    Monomial mg = g.leading_monomial().quotient_of(L);
    return f.times_term(f.leading_coeff().inv(), mf) -
           g.times_term(g.leading_coeff().inv(), mg);
}

// Selection key: total degree of the lcm (including the elimination
// variable), then x-degree, then generator indices.
struct PairKey {
    int deg, a, i, j;
    auto operator<=>(const PairKey&) const = default;
};

PairKey pair_key(const std::vector<Polynomial>& basis, int i, int j) {
    Monomial L = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    return {L.xdeg() + L.ydeg() + L.texp(), L.xdeg(), i, j};
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial h = f;
    std::vector<Term> out;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.m)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            out.push_back(lt);
            h = h - Polynomial::monomial(h.ring(), lt.m, lt.c);
        } else {
            Coeff c = lt.c / divisor->leading_coeff();
            Monomial q = divisor->leading_monomial().quotient_of(lt.m);
            h = h - divisor->times_term(c, q);
        }
    }
    return Polynomial(f.ring(), std::move(out));
}

GroebnerBasis buchberger(const Ideal& I, std::optional<Bidegree> cap) {
    const RingDescriptor& ring = I.ring;
    std::vector<Polynomial> basis;
    for (const auto& g : I.generators) {
        Polynomial r = normal_form(g, basis).primitive();
        if (!r.is_zero()) basis.push_back(std::move(r));
    }

    std::set<PairKey> pending;
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) pending.insert(pair_key(basis, (int)i, (int)j));

    auto lcm_of = [&](int i, int j) {
        return lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    };
    auto is_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return pending.count(pair_key(basis, i, j)) > 0;
    };

    while (!pending.empty()) {
        PairKey key = *pending.begin();
        pending.erase(pending.begin());
        int i = key.i, j = key.j;
        Monomial L = lcm_of(i, j);
        if (cap && !Bidegree{cap->a, cap->b}.geq(L.bidegree())) continue;
        // Product criterion: coprime leading monomials.
        if (L == basis[i].leading_monomial() * basis[j].leading_monomial()) continue;
        // Chain criterion.
        bool chained = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if ((int)k == i || (int)k == j) continue;
            if (basis[k].leading_monomial().divides(L) &&
                !is_pending(i, (int)k) && !is_pending(j, (int)k)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Polynomial s = normal_form(s_polynomial(basis[i], basis[j]), basis).primitive();
        if (s.is_zero()) continue;
        basis.push_back(std::move(s));
        int newest = (int)basis.size() - 1;
        for (int k = 0; k < newest; ++k) pending.insert(pair_key(basis, k, newest));
    }

    return {ring, std::move(basis), false};
}

GroebnerBasis reduce(const GroebnerBasis& G) {
    // Minimalize by leading-monomial divisibility.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.elements.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.elements.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = G.elements[i].leading_monomial();
            const Monomial& mj = G.elements[j].leading_monomial();
            if (mj.divides(mi) && (!mi.divides(mj) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G.elements[i]);
    }
    // Tail-reduce each element against the others and normalize.
    std::vector<Polynomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& l, const Polynomial& r) {
        return mono_less(l.leading_monomial(), r.leading_monomial(), G.ring);
    });
    return {G.ring, std::move(out), true};
}

GroebnerBasis reduced_basis(const Ideal& I, std::optional<Bidegree> cap) {
    return reduce(buchberger(I, cap));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
    for (size_t j = 1; j < G.elements.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (!normal_form(s_polynomial(G.elements[i], G.elements[j]), G.elements)
                     .is_zero())
                return false;
    return true;
}

MonomialIdeal initial_ideal(const Ideal& I) {
    GroebnerBasis G = buchberger(I);
    std::vector<Monomial> lms;
    lms.reserve(G.elements.size());
    for (const auto& g : G.elements) lms.push_back(g.leading_monomial());
    return MonomialIdeal(I.ring, std::move(lms));
}

bool membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    return normal_form(f, reduced_basis(I).elements).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return reduced_basis(I) == reduced_basis(J);
}

} // namespace bigrade
