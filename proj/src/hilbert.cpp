#include "bigrade/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace bigrade {

namespace {

// Walk exponent vectors of the given block degrees; stops early once
// `visit` returns false.
bool walk_monomials(const RingDescriptor& ring, Bidegree d,
                    const std::function<bool(const Monomial&)>& visit) {
    std::vector<int> alpha(ring.nx, 0), beta(ring.ny, 0);
    std::function<bool(int, int)> rec_beta = [&](int pos, int left) -> bool {
        if (pos == ring.ny - 1) {
            beta[pos] = left;
            return visit(Monomial(alpha, beta));
        }
        for (int e = left; e >= 0; --e) {
            beta[pos] = e;
            if (!rec_beta(pos + 1, left - e)) return false;
        }
        return true;
    };
    std::function<bool(int, int)> rec_alpha = [&](int pos, int left) -> bool {
        if (pos == ring.nx - 1) {
            alpha[pos] = left;
            return rec_beta(0, d.b);
        }
        for (int e = left; e >= 0; --e) {
            alpha[pos] = e;
            if (!rec_alpha(pos + 1, left - e)) return false;
        }
        return true;
    };
    return rec_alpha(0, d.a);
}

} // namespace

long hilbert_function_enumerate(const MonomialIdeal& M, Bidegree d) {
    if (d.a < 0 || d.b < 0) throw contract_error("negative bidegree");
    long count = 0;
    walk_monomials(M.ring(), d, [&](const Monomial& m) {
        if (!M.contains(m)) ++count;
        return true;
    });
    return count;
}

long hilbert_function_inclusion_exclusion(const MonomialIdeal& M, Bidegree d) {
    if (d.a < 0 || d.b < 0) throw contract_error("negative bidegree");
    const auto& gens = M.min_gens();
    long in_ideal = 0;
    // Subsets of generators via pruned recursion on the running lcm.
    std::function<void(size_t, const Monomial&, int)> rec =
        [&](size_t idx, const Monomial& l, int sign) {
            for (size_t i = idx; i < gens.size(); ++i) {
                Monomial nl = lcm(l, gens[i]);
                Bidegree nd = nl.bidegree();
                if (nd.a > d.a || nd.b > d.b) continue;
                in_ideal += sign * monomial_count(M.ring(), d - nd);
                rec(i + 1, nl, -sign);
            }
        };
    if (!gens.empty()) rec(0, Monomial::one(M.ring()), +1);
    return monomial_count(M.ring(), d) - in_ideal;
}

long hilbert_function(const MonomialIdeal& M, Bidegree d) {
    if (d.a < 0 || d.b < 0) throw contract_error("negative bidegree");
    if (monomial_count(M.ring(), d) <= kEnumerationThreshold)
        return hilbert_function_enumerate(M, d);
    return hilbert_function_inclusion_exclusion(M, d);
}

namespace {

// HF(a,b) == 0, with early exit on the first standard monomial.
bool hf_vanishes(const MonomialIdeal& M, Bidegree d) {
    // Cheapest necessary condition first: the pure power on the largest
    // variables must already lie in the ideal.
    const auto& ring = M.ring();
    std::vector<int> alpha(ring.nx, 0), beta(ring.ny, 0);
    alpha[ring.nx - 1] = d.a;
    beta[ring.ny - 1] = d.b;
    if (!M.contains(Monomial(alpha, beta))) return false;
    return walk_monomials(ring, d, [&](const Monomial& m) { return M.contains(m); });
}

} // namespace

Region hf_zero_region(const MonomialIdeal& M, int max_box) {
    const Bidegree floor{0, 0};
    if (M.is_zero_ideal()) return Region::empty(floor);
    if (M.is_unit_ideal()) return Region::full(floor);

    // All minimal elements of the zero set lie within a provable box:
    // if a row (resp. column) vanishes anywhere, pigeonhole on pure
    // powers bounds its threshold by nx*(amax-1)+1 (resp. ny*(bmax-1)+1).
    Bidegree maxdeg = M.max_gen_bidegree();
    int abound = std::max(0, M.ring().nx * (maxdeg.a - 1) + 1);
    int bbound = std::max(0, M.ring().ny * (maxdeg.b - 1) + 1);

    // Grow the search box from the staircase corner until it covers the
    // certified bound; inputs needing more than max_box are rejected.
    int A = std::min(maxdeg.a + 1, abound);
    int B = std::min(maxdeg.b + 1, bbound);
    while (A < abound || B < bbound) {
        A = std::min(2 * A + 1, abound);
        B = std::min(2 * B + 1, bbound);
    }
    if (A > max_box || B > max_box)
        throw contract_error("hf_zero_region: certified search box " +
                             Bidegree{A, B}.str() + " exceeds the cap of " +
                             std::to_string(max_box));

    // Boolean table of vanishing over [0,A] x [0,B]; zeros propagate up.
    std::vector<std::vector<bool>> zero(A + 1, std::vector<bool>(B + 1, false));
    std::vector<Bidegree> mins;
    for (int a = 0; a <= A; ++a)
        for (int b = 0; b <= B; ++b) {
            bool implied = (a > 0 && zero[a - 1][b]) || (b > 0 && zero[a][b - 1]);
            zero[a][b] = implied || hf_vanishes(M, {a, b});
            if (zero[a][b] && !implied) mins.push_back({a, b});
        }

    Region r(floor, std::move(mins));

    // Verification pass on the final box: the table must match the
    // antichain, and each minimal element must be tight one step down.
    for (int a = 0; a <= A; ++a)
        for (int b = 0; b <= B; ++b)
            if (zero[a][b] != r.contains({a, b}))
                throw contradiction_error("hf_zero_region self-check failed at " +
                                          Bidegree{a, b}.str());
    for (const auto& e : r.minimal_elements()) {
        if (e.a > 0 && hf_vanishes(M, {e.a - 1, e.b}))
            throw contradiction_error("hf_zero_region minimality failed at " + e.str());
        if (e.b > 0 && hf_vanishes(M, {e.a, e.b - 1}))
            throw contradiction_error("hf_zero_region minimality failed at " + e.str());
    }
    return r;
}

Region colon_equality_region(const MonomialIdeal& M, int k, int max_box) {
    if (k < 0 || k >= M.ring().nx)
        throw contract_error("variable index out of range");
    const Bidegree floor{1, 0};
    Monomial xk = Monomial::xvar(M.ring(), k);
    MonomialIdeal N = M.colon(xk);

    Region region = Region::full(floor);
    for (const auto& g : N.min_gens()) {
        if (M.contains(g)) continue;
        // Witness bidegrees contributed by g are deg(g) + the standard
        // bidegrees of (M : g); no witness dominates (a,b) iff the
        // clamped shift of (a,b) lands in the zero region of (M : g).
        Region zg = hf_zero_region(M.colon(g), max_box);
        Bidegree v = g.bidegree();
        std::vector<Bidegree> mins;
        for (const auto& e : zg.minimal_elements())
            mins.push_back({e.a > 0 ? v.a + e.a : floor.a,
                            e.b > 0 ? v.b + e.b : floor.b});
        region = region.intersect(Region(floor, std::move(mins)));
        if (region.is_empty()) break;
    }
    return region;
}

} // namespace bigrade
