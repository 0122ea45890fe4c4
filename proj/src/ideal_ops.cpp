#include "bigrade/ideal_ops.hpp"

#include <algorithm>
#include <climits>

namespace bigrade {

namespace {

// splitmix64; fixed here so seeds mean the same thing on every platform.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform in [-2^16, 2^16].
    long entry() { return (long)(next() % 131073ull) - 65536; }
};

std::vector<std::vector<Coeff>> sample_block(SeededRng& rng, int n, FieldSpec field) {
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, Coeff::zero(field)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Coeff(rng.entry(), field);
    return m;
}

} // namespace

bool is_invertible(const std::vector<std::vector<Coeff>>& m, FieldSpec field) {
    auto a = m;
    int n = (int)a.size();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        std::swap(a[col], a[pivot]);
        Coeff inv = a[col][col].inv();
        for (int row = col + 1; row < n; ++row) {
            Coeff f = a[row][col] * inv;
            for (int j = col; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
        }
    }
    (void)field;
    return true;
}

BlockMatrix BlockMatrix::identity(const RingDescriptor& ring) {
    BlockMatrix u;
    auto ident = [&](int n) {
        std::vector<std::vector<Coeff>> m(
            n, std::vector<Coeff>(n, Coeff::zero(ring.field)));
        for (int i = 0; i < n; ++i) m[i][i] = Coeff::one(ring.field);
        return m;
    };
    u.ux = ident(ring.nx);
    u.uy = ident(ring.ny);
    u.seed = 0;
    return u;
}

BlockMatrix random_block_matrix(const RingDescriptor& ring, std::uint64_t seed) {
    SeededRng rng(seed);
    BlockMatrix u;
    u.seed = seed;
    auto sample = [&](int n) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto m = sample_block(rng, n, ring.field);
            if (is_invertible(m, ring.field)) return m;
        }
        throw genericity_error("could not sample an invertible block in 64 attempts");
    };
    u.ux = sample(ring.nx);
    u.uy = sample(ring.ny);
    return u;
}

Polynomial random_linear_xform(const RingDescriptor& ring, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Term> terms;
    for (int i = 0; i < ring.nx; ++i) {
        Coeff c(rng.entry(), ring.field);
        if (!c.is_zero()) terms.push_back({c, Monomial::xvar(ring, i)});
    }
    Polynomial f(ring, std::move(terms));
    if (f.is_zero())
        throw genericity_error("sampled linear x-form is zero; pick another seed");
    return f;
}

Polynomial change_coordinates(const Polynomial& f, const BlockMatrix& u) {
    const RingDescriptor& ring = f.ring();
    if ((int)u.ux.size() != ring.nx || (int)u.uy.size() != ring.ny)
        throw contract_error("block matrix does not match ring");
    if (!is_invertible(u.ux, ring.field) || !is_invertible(u.uy, ring.field))
        throw contract_error("singular block in change of coordinates");

    // Images of the variables.
    std::vector<Polynomial> img_x, img_y;
    for (int i = 0; i < ring.nx; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < ring.nx; ++j)
            if (!u.ux[i][j].is_zero())
                terms.push_back({u.ux[i][j], Monomial::xvar(ring, j)});
        img_x.push_back(Polynomial(ring, std::move(terms)));
    }
    for (int i = 0; i < ring.ny; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < ring.ny; ++j)
            if (!u.uy[i][j].is_zero())
                terms.push_back({u.uy[i][j], Monomial::yvar(ring, j)});
        img_y.push_back(Polynomial(ring, std::move(terms)));
    }

    // Power cache per variable.
    std::vector<std::vector<Polynomial>> pow_x(ring.nx), pow_y(ring.ny);
    auto power = [&](std::vector<Polynomial>& cache, const Polynomial& base, int e) {
        if (cache.empty()) cache.push_back(Polynomial::constant(base.ring(), Coeff::one(base.ring().field)));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };

    Polynomial out(ring);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(ring, t.c);
        for (int i = 0; i < ring.nx; ++i)
            if (t.m.xexp(i) > 0) prod = prod * power(pow_x[i], img_x[i], t.m.xexp(i));
        for (int j = 0; j < ring.ny; ++j)
            if (t.m.yexp(j) > 0) prod = prod * power(pow_y[j], img_y[j], t.m.yexp(j));
        if (t.m.texp() > 0)
            prod = prod.times_monomial(
                Monomial(std::vector<int>(ring.nx, 0), std::vector<int>(ring.ny, 0), t.m.texp()));
        out = out + prod;
    }
    return out;
}

Ideal change_coordinates(const Ideal& I, const BlockMatrix& u) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(change_coordinates(g, u));
    return Ideal(I.ring, std::move(gens));
}

namespace {

// Re-sorts a polynomial's terms for a different descriptor of the same
// variable set (order change, aux toggle with zero t-exponents).
Polynomial reinterpret(const Polynomial& f, const RingDescriptor& ring) {
    return Polynomial(ring, f.terms());
}

Ideal reinterpret(const Ideal& I, const RingDescriptor& ring) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(reinterpret(g, ring));
    return Ideal(ring, std::move(gens));
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I.ring, J.ring);
    if (I.ring.aux_var)
        throw contract_error("nested elimination is not supported");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring);

    RingDescriptor ext = I.ring.with_aux();
    Polynomial t = Polynomial::monomial(ext, Monomial::tvar(ext));
    Polynomial one_minus_t =
        Polynomial::constant(ext, Coeff::one(ext.field)) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators) gens.push_back(t * reinterpret(f, ext));
    for (const auto& g : J.generators) gens.push_back(one_minus_t * reinterpret(g, ext));

    GroebnerBasis G = reduced_basis(Ideal(ext, std::move(gens)));
    std::vector<Polynomial> out;
    for (const auto& g : G.elements)
        if (g.leading_monomial().texp() == 0) out.push_back(reinterpret(g, I.ring));
    return Ideal(I.ring, std::move(out));
}

Ideal colon_poly(const Ideal& I, const Polynomial& f) {
    check_same_ring(I.ring, f.ring());
    if (f.is_zero()) throw contract_error("colon by zero polynomial");
    if (!f.is_bihomogeneous()) throw contract_error("colon divisor must be bihomogeneous");
    if (f.size() == 1 && f.leading_monomial().is_one()) return I;  // unit divisor

    Ideal meet = intersect(I, Ideal(I.ring, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : meet.generators) {
        auto q = g.divided_exact(f);
        if (!q)
            throw contradiction_error("element of I n (f) not divisible by f");
        if (!q->is_zero()) gens.push_back(std::move(*q));
    }
    return Ideal(I.ring, std::move(gens));
}

Ideal saturate_poly(const Ideal& I, const Polynomial& f) {
    Ideal cur = I;
    GroebnerBasis prev = reduced_basis(cur);
    for (;;) {
        Ideal next = colon_poly(Ideal(I.ring, prev.elements), f);
        GroebnerBasis nb = reduced_basis(next);
        if (nb == prev) return Ideal(I.ring, nb.elements);
        prev = std::move(nb);
    }
}

Ideal saturate_variable(const Ideal& I, bool x_block, int index) {
    const RingDescriptor& ring = I.ring;
    if (ring.aux_var) throw contract_error("saturation needs a plain ring");
    I.require_bihomogeneous();
    int n = x_block ? ring.nx : ring.ny;
    if (index < 0 || index >= n) throw contract_error("variable index out of range");

    // Work in the order that makes the target variable globally
    // smallest, conjugating it into position 0 of its block.
    RingDescriptor work = ring.with_order(x_block ? BlockOrder::XBlockLow
                                                  : BlockOrder::YBlockLow);
    BlockMatrix perm = BlockMatrix::identity(work);
    auto& blk = x_block ? perm.ux : perm.uy;
    std::swap(blk[0], blk[index]);

    Ideal moved = change_coordinates(reinterpret(I, work), perm);
    GroebnerBasis G = reduced_basis(moved);

    // Divide each basis element by its full power of the smallest
    // variable; the result is a basis of the saturation.
    std::vector<Polynomial> sat;
    for (const auto& g : G.elements) {
        int e = INT_MAX;
        for (const auto& t : g.terms())
            e = std::min(e, x_block ? t.m.xexp(0) : t.m.yexp(0));
        if (e == 0) {
            sat.push_back(g);
            continue;
        }
        std::vector<int> a(work.nx, 0), b(work.ny, 0);
        (x_block ? a[0] : b[0]) = e;
        Polynomial div = Polynomial::monomial(work, Monomial(a, b));
        sat.push_back(*g.divided_exact(div));
    }

    Ideal back = change_coordinates(Ideal(work, std::move(sat)), perm);
    return reinterpret(back, ring);
}

Ideal saturate(const Ideal& I, SaturationMode mode) {
    switch (mode) {
        case SaturationMode::ByMx:
        case SaturationMode::ByMy: {
            bool x_block = mode == SaturationMode::ByMx;
            int n = x_block ? I.ring.nx : I.ring.ny;
            Ideal acc = saturate_variable(I, x_block, 0);
            for (int i = 1; i < n; ++i)
                acc = intersect(acc, saturate_variable(I, x_block, i));
            return Ideal(I.ring, reduced_basis(acc).elements);
        }
        case SaturationMode::ByB:
            return saturate(saturate(I, SaturationMode::ByMx), SaturationMode::ByMy);
    }
    throw contract_error("unknown saturation mode");
}

bool is_empty_variety(const Ideal& I) {
    I.require_bihomogeneous();
    GroebnerBasis G = reduced_basis(saturate(I, SaturationMode::ByB));
    return G.elements.size() == 1 && G.elements[0].size() == 1 &&
           G.elements[0].leading_monomial().is_one();
}

Ideal add_linear_forms(const Ideal& I, const std::vector<Polynomial>& forms) {
    std::vector<Polynomial> gens = I.generators;
    for (const auto& f : forms) {
        check_same_ring(I.ring, f.ring());
        if (f.is_zero() || !f.is_bihomogeneous() || !(f.bidegree() == Bidegree{1, 0}))
            throw contract_error("expected a linear x-form of bidegree (1,0)");
        gens.push_back(f);
    }
    return Ideal(I.ring, std::move(gens));
}

} // namespace bigrade
