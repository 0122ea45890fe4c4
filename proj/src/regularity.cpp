#include "bigrade/regularity.hpp"

#include <algorithm>

namespace bigrade {

namespace {

std::uint64_t derived_seed(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Ideal with_order(const Ideal& I, BlockOrder order) {
    RingDescriptor ring = I.ring.with_order(order);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(Polynomial(ring, g.terms()));
    return Ideal(ring, std::move(gens));
}

} // namespace

BiginResult bigin(const Ideal& I, BlockOrder order, std::uint64_t seed) {
    I.require_bihomogeneous();
    if (I.is_zero_ideal()) throw contract_error("bigin of the zero ideal");
    if (I.ring.aux_var) throw contract_error("bigin needs a plain ring");

    Ideal J = with_order(I, order);
    std::uint64_t seed2 = derived_seed(seed);
    MonomialIdeal in1 = initial_ideal(change_coordinates(J, random_block_matrix(J.ring, seed)));
    MonomialIdeal in2 = initial_ideal(change_coordinates(J, random_block_matrix(J.ring, seed2)));
    if (!(in1 == in2))
        throw genericity_error(
            "bigeneric initial ideal differs between seeds " + std::to_string(seed) +
            " and " + std::to_string(seed2) + "; retry with another seed");
    BiBorelCheck bc = biborel_check(in1);
    if (!bc.ok)
        throw contradiction_error("bigeneric initial ideal is not bi-Borel; missing " +
                                  bc.missing_witness->str(in1.ring()));
    return {std::move(in1), seed, seed2, order, true};
}

Region xreg_region(const MonomialIdeal& M, int max_box) {
    BiBorelCheck bc = biborel_check(M);
    if (!bc.ok)
        throw contract_error("xreg needs a bi-Borel ideal; exchange fails at " +
                             bc.missing_witness->str(M.ring()));
    const RingDescriptor& ring = M.ring();
    MonomialIdeal mx = MonomialIdeal::mx(ring);

    Region region = Region::full({1, 0});
    MonomialIdeal J = M;  // J_{k-1}, starting from J_{-1} = M
    for (int k = 0; k < ring.nx; ++k) {
        region = region.intersect(colon_equality_region(J, k, max_box));
        J = J.plus({Monomial::xvar(ring, k)});
        if (J.contains(mx)) break;  // k is the minimal k0
    }
    return region;
}

Region xreg_of_ideal(const Ideal& I, std::uint64_t seed, int max_box) {
    return xreg_region(bigin(I, BlockOrder::XBlockLow, seed).ideal, max_box);
}

Region reg_empty(const Ideal& I, int max_box) {
    I.require_bihomogeneous();
    if (!is_empty_variety(I))
        throw contract_error("the Hilbert-function regularity formula needs an "
                             "ideal with empty vanishing locus");
    return hf_zero_region(initial_ideal(I), max_box);
}

Certificate certify_absence(const MonomialIdeal& M, const Region& R) {
    Region forbidden = R.shift({1, 0});
    for (const auto& g : M.min_gens())
        if (forbidden.contains(g.bidegree()))
            throw contradiction_error("minimal generator " + g.str(M.ring()) +
                                      " of bidegree " + g.bidegree().str() +
                                      " inside the forbidden region " + forbidden.str());
    Certificate c;
    c.kind = CertificateKind::Absence;
    c.region = forbidden;
    c.verdict = true;
    return c;
}

std::vector<Certificate> certify_presence(const MonomialIdeal& M, const Region& R) {
    std::vector<Certificate> out;
    for (const auto& e : R.minimal_elements()) {
        if (e.a <= 1) continue;
        // A minimal element (a,b) with a > 1 forces a minimal generator
        // of x-degree exactly a. (Its y-degree is bounded by the failing
        // colon bidegrees in column a-1, not by b itself; picking the
        // smallest available y-degree keeps the certificate tight.)
        std::optional<Monomial> witness;
        for (const auto& g : M.min_gens()) {
            Bidegree d = g.bidegree();
            if (d.a == e.a && (!witness || d.b < witness->bidegree().b))
                witness = g;
        }
        if (!witness)
            throw contradiction_error("no minimal generator of x-degree " +
                                      std::to_string(e.a) +
                                      " below region corner " + e.str());
        Certificate c;
        c.kind = CertificateKind::Presence;
        c.bidegree = e;
        c.region = R;
        c.verdict = true;
        c.witness = witness;
        out.push_back(std::move(c));
    }
    return out;
}

bool generator_bidegree_test(const MonomialIdeal& M, Bidegree d) {
    BiBorelCheck bc = biborel_check(M);
    if (!bc.ok)
        throw contract_error("generator test needs a bi-Borel ideal");
    if (d.a < 1 || d.b < 0)
        throw contract_error("generator test needs a bidegree with a >= 1");

    const RingDescriptor& ring = M.ring();
    Bidegree probe{d.a - 1, d.b};
    MonomialIdeal J = M;  // J_{k-1}
    for (int k = 0; k < ring.nx; ++k) {
        MonomialIdeal N = J.colon(Monomial::xvar(ring, k));
        MonomialIdeal rhs = J.plus(N.times_block(false));  // J + my*(J:x_k)
        // rhs is contained in N, so equality in the graded piece fails
        // exactly when some monomial lies in N but not in rhs.
        for (const auto& m : monomials_of_bidegree(ring, probe))
            if (N.contains(m) && !rhs.contains(m)) return true;
        J = J.plus({Monomial::xvar(ring, k)});
    }
    return false;
}

Certificate certify_exact(const MonomialIdeal& M, Bidegree d) {
    Certificate c;
    c.kind = CertificateKind::ExactCriterion;
    c.bidegree = d;
    c.verdict = generator_bidegree_test(M, d);
    if (c.verdict)
        for (const auto& g : M.min_gens())
            if (g.bidegree() == d) {
                c.witness = g;
                break;
            }
    if (c.verdict != (c.witness.has_value()))
        throw contradiction_error("graded colon criterion disagrees with the "
                                  "minimal generator list at " + d.str());
    return c;
}

namespace {

Bidegree tor_maxima(const MonomialIdeal& M) {
    if (!is_biborel(M)) throw contract_error("xtor/ytor need a bi-Borel ideal");
    if (M.is_zero_ideal()) throw contract_error("xtor/ytor of the zero ideal");
    Bidegree t{0, 0};
    for (const auto& d : M.gen_bidegrees()) t = join(t, d);
    return t;
}

} // namespace

int xtor(const MonomialIdeal& M) { return tor_maxima(M).a; }
int ytor(const MonomialIdeal& M) { return tor_maxima(M).b; }

} // namespace bigrade
