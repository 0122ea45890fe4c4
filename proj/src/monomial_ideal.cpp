#include "bigrade/monomial_ideal.hpp"

#include <algorithm>

namespace bigrade {

MonomialIdeal::MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)) {
    // Minimalize: drop every generator divisible by another.
    std::sort(gens.begin(), gens.end(), [this](const Monomial& l, const Monomial& r) {
        return mono_less(l, r, ring_);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : gens_)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(m);
    }
}

MonomialIdeal minimal_generators(const RingDescriptor& ring, std::vector<Monomial> gens) {
    return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(const RingDescriptor& ring) {
    return MonomialIdeal(ring, {Monomial::one(ring)});
}

MonomialIdeal MonomialIdeal::mx(const RingDescriptor& ring) {
    std::vector<Monomial> g;
    for (int i = 0; i < ring.nx; ++i) g.push_back(Monomial::xvar(ring, i));
    return MonomialIdeal(ring, std::move(g));
}

MonomialIdeal MonomialIdeal::my(const RingDescriptor& ring) {
    std::vector<Monomial> g;
    for (int j = 0; j < ring.ny; ++j) g.push_back(Monomial::yvar(ring, j));
    return MonomialIdeal(ring, std::move(g));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
    for (const auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& o) const {
    check_same_ring(ring_, o.ring_);
    return plus(o.gens_);
}

MonomialIdeal MonomialIdeal::plus(const std::vector<Monomial>& extra) const {
    std::vector<Monomial> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return MonomialIdeal(ring_, std::move(g));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> g;
    g.reserve(gens_.size());
    for (const auto& gen : gens_)
        g.push_back(gcd(gen, m).quotient_of(gen));
    return MonomialIdeal(ring_, std::move(g));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
    check_same_ring(ring_, o.ring_);
    std::vector<Monomial> g;
    g.reserve(gens_.size() * o.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(lcm(a, b));
    return MonomialIdeal(ring_, std::move(g));
}

MonomialIdeal MonomialIdeal::times_block(bool x_block) const {
    std::vector<Monomial> g;
    int count = x_block ? ring_.nx : ring_.ny;
    for (const auto& gen : gens_)
        for (int v = 0; v < count; ++v)
            g.push_back(gen * (x_block ? Monomial::xvar(ring_, v)
                                       : Monomial::yvar(ring_, v)));
    return MonomialIdeal(ring_, std::move(g));
}

Bidegree MonomialIdeal::max_gen_bidegree() const {
    if (gens_.empty()) throw contract_error("zero ideal has no generator bidegrees");
    Bidegree d{0, 0};
    for (const auto& g : gens_) d = join(d, g.bidegree());
    return d;
}

std::vector<Bidegree> MonomialIdeal::gen_bidegrees() const {
    std::vector<Bidegree> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.bidegree());
    return out;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_;
}

Ideal MonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(Polynomial::monomial(ring_, g));
    return Ideal(ring_, std::move(gens));
}

BiBorelCheck biborel_check(const MonomialIdeal& M) {
    const auto& ring = M.ring();
    for (const auto& g : M.min_gens()) {
        for (int i = 0; i < ring.nx; ++i) {
            if (g.xexp(i) == 0) continue;
            for (int j = i + 1; j < ring.nx; ++j) {
                Monomial ex = Monomial::xvar(ring, i).quotient_of(g) * Monomial::xvar(ring, j);
                if (!M.contains(ex)) return {false, ex};
            }
        }
        for (int i = 0; i < ring.ny; ++i) {
            if (g.yexp(i) == 0) continue;
            for (int j = i + 1; j < ring.ny; ++j) {
                Monomial ex = Monomial::yvar(ring, i).quotient_of(g) * Monomial::yvar(ring, j);
                if (!M.contains(ex)) return {false, ex};
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace bigrade
