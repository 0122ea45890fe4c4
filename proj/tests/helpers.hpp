#ifndef BIGRADE_TEST_HELPERS_HPP
#define BIGRADE_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "bigrade/hilbert.hpp"
#include "bigrade/ideal_ops.hpp"

namespace bigrade::testing {

struct TestRng {
    std::mt19937_64 g;
    explicit TestRng(std::uint64_t seed) : g(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g);
    }
};

inline Monomial random_monomial(const RingDescriptor& ring, Bidegree maxdeg,
                                TestRng& rng) {
    std::vector<int> alpha(ring.nx, 0), beta(ring.ny, 0);
    int a = rng.uniform(0, maxdeg.a), b = rng.uniform(0, maxdeg.b);
    for (int i = 0; i < a; ++i) ++alpha[rng.uniform(0, ring.nx - 1)];
    for (int j = 0; j < b; ++j) ++beta[rng.uniform(0, ring.ny - 1)];
    return Monomial(alpha, beta);
}

// Close a random generating set under both exchange moves (replace one
// factor by any higher-indexed variable of the same block), then
// minimalize. The closure is computed by a plain worklist, so it does
// not depend on biborel_check.
inline MonomialIdeal random_biborel_ideal(const RingDescriptor& ring, int ngens,
                                          Bidegree maxdeg, TestRng& rng) {
    std::vector<Monomial> work;
    for (int i = 0; i < ngens; ++i) {
        Monomial m = random_monomial(ring, maxdeg, rng);
        if (!m.is_one()) work.push_back(m);
    }
    auto in_span = [&](const Monomial& m) {
        for (const auto& g : work)
            if (g.divides(m)) return true;
        return false;
    };
    for (size_t idx = 0; idx < work.size(); ++idx) {
        Monomial m = work[idx];
        for (int i = 0; i < ring.nx; ++i) {
            if (m.xexp(i) == 0) continue;
            for (int j = i + 1; j < ring.nx; ++j) {
                Monomial ex = Monomial::xvar(ring, i).quotient_of(m) *
                              Monomial::xvar(ring, j);
                if (!in_span(ex)) work.push_back(ex);
            }
        }
        for (int i = 0; i < ring.ny; ++i) {
            if (m.yexp(i) == 0) continue;
            for (int j = i + 1; j < ring.ny; ++j) {
                Monomial ex = Monomial::yvar(ring, i).quotient_of(m) *
                              Monomial::yvar(ring, j);
                if (!in_span(ex)) work.push_back(ex);
            }
        }
    }
    return minimal_generators(ring, std::move(work));
}

inline Polynomial random_poly(const RingDescriptor& ring, Bidegree d,
                              TestRng& rng, int coeff_range = 20) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_bidegree(ring, d)) {
        long c = rng.uniform(-coeff_range, coeff_range);
        if (c != 0) ts.push_back({Coeff(c, ring.field), m});
    }
    return Polynomial(ring, std::move(ts));
}

// dim (S/I)_{(a,b)} by exact linear algebra: the span of m*g over all
// generators g and monomial multipliers m of the right bidegree,
// independent of any Groebner machinery.
inline long hf_rank_oracle(const Ideal& I, Bidegree d) {
    auto cols = monomials_of_bidegree(I.ring, d);
    std::map<std::pair<std::vector<int>, std::vector<int>>, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i)
        col_of[{cols[i].alpha(), cols[i].beta()}] = i;

    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : I.generators) {
        Bidegree dg = g.bidegree();
        if (!d.geq(dg)) continue;
        for (const auto& m : monomials_of_bidegree(I.ring, d - dg)) {
            std::vector<mpq_class> row(cols.size(), 0);
            for (const auto& t : g.terms()) {
                Monomial p = t.m * m;
                row[col_of.at({p.alpha(), p.beta()})] = t.c.value();
            }
            rows.push_back(std::move(row));
        }
    }

    size_t rank = 0;
    for (size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            mpq_class f = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < cols.size(); ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return (long)cols.size() - (long)rank;
}

// Witness-based oracle for the colon-equality region: a bidegree fails
// at (a',b') iff some standard monomial of J lands in J after one
// multiplication by x_k, i.e. iff HF_{S/J} and HF_{S/(J:x_k)} differ
// there. The scan window extends past the box by the generator degrees
// so that no dominating witness is missed for in-box queries.
inline bool brute_colon_equality_at(const MonomialIdeal& J,
                                    const MonomialIdeal& N, Bidegree d,
                                    Bidegree window) {
    for (int a = d.a; a <= window.a; ++a)
        for (int b = d.b; b <= window.b; ++b)
            if (hilbert_function(J, {a, b}) != hilbert_function(N, {a, b}))
                return false;
    return true;
}

} // namespace bigrade::testing

#endif
