// Acceptance checks, one pass/fail line each. Exit code is the number
// of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>

#include "bigrade/parse.hpp"
#include "bigrade/regularity.hpp"
#include "helpers.hpp"

using namespace bigrade;
using namespace bigrade::testing;

namespace {

int failures = 0;

void criterion(int number, const char* label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", number, label,
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

Ideal curve_ideal() {
    RingDescriptor r(3, 2);
    return Ideal(r, {parse_polynomial("x0^2*y0^2 + x1^2*y1^2 + x2^2*y0*y1", r),
                     parse_polynomial("x2*y0^3 + (x0+x1)*y1^3", r)});
}

Ideal empty_variety_ideal(std::uint64_t seed) {
    RingDescriptor r(2, 2);
    TestRng rng(seed);
    auto form = [&](int xd, int yd) {
        std::vector<Term> ts;
        for (const auto& m : monomials_of_bidegree(r, {xd, yd})) {
            long c = rng.uniform(-50, 50);
            if (c != 0) ts.push_back({Coeff(c, r.field), m});
        }
        return Polynomial(r, ts);
    };
    return Ideal(r, {form(3, 0) * form(0, 1), form(3, 0) * form(0, 1),
                     form(1, 0) * form(0, 3), form(1, 0) * form(0, 3)});
}

// For every bidegree in the window, does some monomial lie in N but not
// in J? Single pass over all monomials up to the window corner.
std::vector<std::vector<char>> witness_table(const MonomialIdeal& J,
                                             const MonomialIdeal& N,
                                             Bidegree window) {
    std::vector<std::vector<char>> t(window.a + 1,
                                     std::vector<char>(window.b + 1, 0));
    for (int a = 0; a <= window.a; ++a)
        for (int b = 0; b <= window.b; ++b)
            for (const auto& m : monomials_of_bidegree(J.ring(), {a, b}))
                if (!J.contains(m) && N.contains(m)) {
                    t[a][b] = 1;
                    break;
                }
    return t;
}

// Pointwise partial regularity region over the box, from scratch.
std::vector<std::vector<char>> brute_xreg_table(const MonomialIdeal& M, int box) {
    const RingDescriptor& ring = M.ring();
    Bidegree margin = M.max_gen_bidegree();
    Bidegree window{box + margin.a + 1, box + margin.b + 1};
    std::vector<std::vector<char>> in(box + 1, std::vector<char>(box + 1, 1));
    MonomialIdeal J = M;
    for (int k = 0; k < ring.nx; ++k) {
        MonomialIdeal N = J.colon(Monomial::xvar(ring, k));
        auto wt = witness_table(J, N, window);
        // suffix-OR: any witness dominating (a,b)
        for (int a = window.a; a >= 0; --a)
            for (int b = window.b; b >= 0; --b) {
                if (a < window.a && wt[a + 1][b]) wt[a][b] = 1;
                if (b < window.b && wt[a][b + 1]) wt[a][b] = 1;
            }
        for (int a = 0; a <= box; ++a)
            for (int b = 0; b <= box; ++b)
                if (wt[a][b]) in[a][b] = 0;
        J = J.plus({Monomial::xvar(ring, k)});
        if (J.contains(MonomialIdeal::mx(ring))) break;
    }
    for (int b = 0; b <= box; ++b) in[0][b] = 0;  // outside Z^2 with a >= 1
    return in;
}

bool check_curve(std::string& detail) {
    Ideal I = curve_ideal();
    Ideal J = saturate(I, SaturationMode::ByB);
    BiginResult bx = bigin(J, BlockOrder::XBlockLow, 42);
    if (xtor(bx.ideal) != 8) {
        detail = "xtor(x<y bigin) = " + std::to_string(xtor(bx.ideal));
        return false;
    }
    if (ytor(bx.ideal) == 3) {
        detail = "ytor(x<y bigin) unexpectedly equals 3";
        return false;
    }
    BiginResult by = bigin(J, BlockOrder::YBlockLow, 42);
    int maxy = 0;
    for (const auto& d : by.ideal.gen_bidegrees()) maxy = std::max(maxy, d.b);
    if (maxy != 3) {
        detail = "max y-degree of y<x bigin = " + std::to_string(maxy);
        return false;
    }
    // the two block orders genuinely differ on this ideal
    if (bx.ideal == by.ideal) {
        detail = "x<y and y<x bigins coincide";
        return false;
    }
    return true;
}

bool check_empty_variety(std::string& detail) {
    Ideal I = empty_variety_ideal(2024);
    if (!is_empty_variety(I)) {
        detail = "variety not empty";
        return false;
    }
    BiginResult b = bigin(I, BlockOrder::XBlockLow, 42);
    auto gens = b.ideal.gen_bidegrees();
    auto has = [&](Bidegree d) {
        return std::find(gens.begin(), gens.end(), d) != gens.end();
    };
    if (!has({3, 5}) || !has({5, 3})) {
        detail = "expected generators at (3,5) and (5,3)";
        return false;
    }
    MonomialIdeal in = initial_ideal(I);
    if (hilbert_function(in, {4, 4}) <= 0) {
        detail = "HF(4,4) not positive";
        return false;
    }
    Region reg = reg_empty(I);
    if (reg.contains({4, 4})) {
        detail = "(4,4) inside reg";
        return false;
    }
    for (const auto& d : gens)
        for (int a = 0; a <= 10; ++a)
            for (int bb = 0; bb <= 10; ++bb)
                if (reg.contains({a, bb}) && d.gneq({a, bb})) {
                    detail = "generator " + d.str() + " strictly above reg point " +
                             Bidegree{a, bb}.str();
                    return false;
                }
    return true;
}

bool check_criterion_equivalence(std::string& detail) {
    RingDescriptor r(3, 2);
    TestRng rng(777);
    int done = 0;
    while (done < 200) {
        MonomialIdeal M = random_biborel_ideal(r, rng.uniform(1, 10), {5, 5}, rng);
        if (M.is_zero_ideal() || M.is_unit_ideal()) continue;
        if ((int)M.min_gens().size() > 10) continue;
        ++done;

        Region fast = xreg_region(M);
        auto slow = brute_xreg_table(M, 12);
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; b <= 12; ++b)
                if (fast.contains({a, b}) != (bool)slow[a][b]) {
                    detail = "xreg mismatch at " + Bidegree{a, b}.str() +
                             " (ideal " + std::to_string(done) + ")";
                    return false;
                }

        auto gens = M.gen_bidegrees();
        for (int a = 1; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b) {
                bool listed = std::find(gens.begin(), gens.end(), Bidegree{a, b}) !=
                              gens.end();
                if (generator_bidegree_test(M, {a, b}) != listed) {
                    detail = "generator criterion mismatch at " +
                             Bidegree{a, b}.str();
                    return false;
                }
            }

        try {
            certify_absence(M, fast);
            certify_presence(M, fast);
        } catch (const contradiction_error& e) {
            detail = std::string("contradiction: ") + e.what();
            return false;
        }
    }
    return true;
}

bool check_structural_invariants(std::string& detail) {
    RingDescriptor r(2, 2);
    TestRng rng(888);
    auto random_ideal = [&](const RingDescriptor& ring, int ngens, int maxd) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < ngens; ++i)
            gens.push_back(random_poly(
                ring, {rng.uniform(1, maxd), rng.uniform(0, maxd)}, rng, 6));
        return Ideal(ring, std::move(gens));
    };

    // 100 bigins: bi-Borel, and Hilbert functions of I, in(I), bigin(I)
    // agree on the 10x10 box. HF of I is pinned two ways: initial
    // ideals under both block orders (each equals HF of I), and an
    // exact rank computation at sample bidegrees.
    for (int it = 0; it < 100; ++it) {
        Ideal I = random_ideal(r, rng.uniform(1, 2), 2);
        if (I.is_zero_ideal()) continue;
        BiginResult b = bigin(I, BlockOrder::XBlockLow, 10000 + it);
        if (!is_biborel(b.ideal)) {
            detail = "bigin not bi-Borel (iteration " + std::to_string(it) + ")";
            return false;
        }
        MonomialIdeal in_x = initial_ideal(I);
        RingDescriptor ry = r.with_order(BlockOrder::YBlockLow);
        std::vector<Polynomial> ygens;
        for (const auto& g : I.generators) ygens.push_back(Polynomial(ry, g.terms()));
        MonomialIdeal in_y = initial_ideal(Ideal(ry, ygens));
        for (int a = 0; a <= 10; ++a)
            for (int bb = 0; bb <= 10; ++bb) {
                long h = hilbert_function(in_x, {a, bb});
                if (h != hilbert_function(b.ideal, {a, bb}) ||
                    h != hilbert_function(in_y, {a, bb})) {
                    detail = "HF mismatch at " + Bidegree{a, bb}.str();
                    return false;
                }
            }
        if (it % 10 == 0)
            for (int s = 0; s < 3; ++s) {
                Bidegree d{rng.uniform(0, 4), rng.uniform(0, 4)};
                if (hf_rank_oracle(I, d) != hilbert_function(in_x, d)) {
                    detail = "rank oracle disagrees at " + d.str();
                    return false;
                }
            }
    }

    // in(I + (x_0..x_k)) = (in(I), x_0..x_k) on 50 ideals
    RingDescriptor r32(3, 2);
    for (int it = 0; it < 50; ++it) {
        Ideal I = random_ideal(r32, 2, 2);
        if (I.is_zero_ideal()) continue;
        std::vector<Polynomial> gens = I.generators;
        std::vector<Monomial> vars;
        for (int k = 0; k < r32.nx; ++k) {
            gens.push_back(Polynomial::monomial(r32, Monomial::xvar(r32, k)));
            vars.push_back(Monomial::xvar(r32, k));
            if (!(initial_ideal(Ideal(r32, gens)) == initial_ideal(I).plus(vars))) {
                detail = "initial ideal of sum mismatch at k=" + std::to_string(k);
                return false;
            }
        }
    }

    // reverse-lex divisibility on 10^4 random polynomials
    for (int it = 0; it < 10000; ++it) {
        Polynomial f = random_poly(r, {rng.uniform(1, 4), rng.uniform(0, 4)}, rng);
        if (f.is_zero()) continue;
        if (f.leading_monomial().xexp(0) > 0)
            for (const auto& t : f.terms())
                if (t.m.xexp(0) == 0) {
                    detail = "smallest-variable divisibility violated";
                    return false;
                }
    }
    return true;
}

bool check_micro_example(std::string& detail) {
    RingDescriptor r(2, 2);
    MonomialIdeal M(r, {Monomial({0, 2}, {0, 0}), Monomial({0, 1}, {0, 1})});
    Region xr = xreg_region(M);
    if (!(xr == Region({1, 0}, {{2, 0}}))) {
        detail = "xreg = " + xr.str();
        return false;
    }
    Certificate abs = certify_absence(M, xr);
    if (!(abs.region == Region({2, 0}, {{3, 0}}))) {
        detail = "absence region = " + abs.region.str();
        return false;
    }
    auto pres = certify_presence(M, xr);
    if (pres.size() != 1 || !(*pres[0].bidegree == Bidegree{2, 0}) ||
        !(*pres[0].witness == Monomial({0, 2}, {0, 0}))) {
        detail = "presence certificate wrong";
        return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "curve example xtor/ytor", 300, check_curve);
    criterion(2, "empty-variety example", 300, check_empty_variety);
    criterion(3, "criterion equivalence on 200 random ideals", 600,
              check_criterion_equivalence);
    criterion(4, "structural invariants", 600, check_structural_invariants);
    criterion(5, "worked micro-example", 1, check_micro_example);
    return failures;
}
