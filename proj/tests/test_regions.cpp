#include <doctest.h>

#include "helpers.hpp"

using namespace bigrade;
using namespace bigrade::testing;

namespace {
const RingDescriptor R22(2, 2);

MonomialIdeal from_exprs(const RingDescriptor& r,
                         std::vector<std::pair<std::vector<int>, std::vector<int>>> es) {
    std::vector<Monomial> gens;
    for (auto& [a, b] : es) gens.push_back(Monomial(a, b));
    return MonomialIdeal(r, std::move(gens));
}
} // namespace

TEST_CASE("monomial ideal membership and minimalization") {
    MonomialIdeal M = from_exprs(R22, {{{2, 0}, {0, 0}}, {{1, 0}, {0, 1}},
                                       {{3, 0}, {0, 0}}});  // x0^3 redundant
    CHECK(M.min_gens().size() == 2);
    CHECK(M.contains(Monomial({2, 1}, {0, 0})));
    CHECK_FALSE(M.contains(Monomial({1, 1}, {1, 0})));
    CHECK(M.contains(from_exprs(R22, {{{2, 0}, {0, 1}}})));
}

TEST_CASE("monomial colon and intersection by enumeration") {
    TestRng rng(31);
    for (int it = 0; it < 20; ++it) {
        MonomialIdeal M = random_biborel_ideal(R22, 3, {3, 3}, rng);
        MonomialIdeal N = random_biborel_ideal(R22, 3, {3, 3}, rng);
        Monomial q = random_monomial(R22, {2, 2}, rng);
        MonomialIdeal C = M.colon(q);
        MonomialIdeal X = M.intersect(N);
        MonomialIdeal S = M.plus(N);
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (const auto& m : monomials_of_bidegree(R22, {a, b})) {
                    CHECK(C.contains(m) == M.contains(m * q));
                    CHECK(X.contains(m) == (M.contains(m) && N.contains(m)));
                    if (S.contains(m) != (M.contains(m) || N.contains(m))) {
                        // sums of monomial ideals are generated by unions
                        CHECK(false);
                    }
                }
    }
}

TEST_CASE("times_block multiplies by the other block's variables") {
    MonomialIdeal M = from_exprs(R22, {{{1, 0}, {0, 0}}});
    MonomialIdeal myM = M.times_block(false);
    CHECK(myM == from_exprs(R22, {{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}}));
    MonomialIdeal mxM = M.times_block(true);
    CHECK(mxM == from_exprs(R22, {{{2, 0}, {0, 0}}, {{1, 1}, {0, 0}}}));
}

TEST_CASE("bi-Borel check") {
    // (x1^2, x1y1) is bi-Borel; (x0) is not (x0 -> x1 leaves it)
    CHECK(is_biborel(from_exprs(R22, {{{0, 2}, {0, 0}}, {{0, 1}, {0, 1}}})));
    CHECK_FALSE(is_biborel(from_exprs(R22, {{{1, 0}, {0, 0}}})));
    CHECK(is_biborel(MonomialIdeal::mx(R22)));
    CHECK(is_biborel(MonomialIdeal::unit(R22)));
    auto bc = biborel_check(from_exprs(R22, {{{1, 0}, {0, 0}}}));
    REQUIRE(bc.missing_witness.has_value());
    CHECK(*bc.missing_witness == Monomial({0, 1}, {0, 0}));

    TestRng rng(32);
    for (int it = 0; it < 30; ++it)
        CHECK(is_biborel(random_biborel_ideal(R22, 4, {4, 4}, rng)));
}

TEST_CASE("region antichain canonicalization") {
    Region r({0, 0}, {{2, 3}, {3, 1}, {4, 4}, {2, 3}});
    CHECK(r.minimal_elements() == std::vector<Bidegree>{{2, 3}, {3, 1}});
    CHECK(r.contains({4, 4}));
    CHECK(r.contains({3, 1}));
    CHECK_FALSE(r.contains({2, 2}));
    CHECK_FALSE(r.contains({0, 5}));

    // floor clamping
    Region f({1, 0}, {{0, 2}});
    CHECK(f.minimal_elements() == std::vector<Bidegree>{{1, 2}});

    // intersect/unite against pointwise semantics
    Region s({0, 0}, {{1, 4}, {5, 0}});
    Region meet = r.intersect(s), uni = r.unite(s);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            CHECK(meet.contains({a, b}) == (r.contains({a, b}) && s.contains({a, b})));
            CHECK(uni.contains({a, b}) == (r.contains({a, b}) || s.contains({a, b})));
        }

    CHECK(r.shift({1, 2}).contains({3, 5}));
    CHECK_FALSE(r.shift({1, 2}).contains({2, 3}));
}

TEST_CASE("down-set complement") {
    DownSet d({{3, 1}, {1, 4}, {2, 2}});
    Region c = d.complement({0, 0});
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            CHECK(c.contains({a, b}) == !d.contains({a, b}));
}

TEST_CASE("hilbert function routes agree") {
    TestRng rng(33);
    RingDescriptor r32(3, 2);
    for (int it = 0; it < 10; ++it) {
        MonomialIdeal M = random_biborel_ideal(r32, 5, {4, 4}, rng);
        for (int a = 0; a <= 7; ++a)
            for (int b = 0; b <= 7; ++b) {
                long e = hilbert_function_enumerate(M, {a, b});
                CHECK(e == hilbert_function_inclusion_exclusion(M, {a, b}));
                CHECK(e == hilbert_function(M, {a, b}));
            }
    }
    // and against the rank oracle through the polynomial side
    MonomialIdeal M = random_biborel_ideal(R22, 3, {3, 3}, rng);
    if (!M.is_zero_ideal())
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                CHECK(hilbert_function(M, {a, b}) ==
                      hf_rank_oracle(M.to_ideal(), {a, b}));
}

TEST_CASE("hilbert zero region") {
    // (x1^2, x1y1): never zero (x0^a y^b survive everywhere)
    MonomialIdeal M = from_exprs(R22, {{{0, 2}, {0, 0}}, {{0, 1}, {0, 1}}});
    CHECK(hf_zero_region(M).is_empty());

    CHECK(hf_zero_region(MonomialIdeal::mx(R22)) ==
          Region({0, 0}, {{1, 0}}));
    CHECK(hf_zero_region(MonomialIdeal::unit(R22)).is_full());
    CHECK(hf_zero_region(MonomialIdeal(R22)).is_empty());

    // random ideals against the direct scan, inside the certified box
    TestRng rng(34);
    for (int it = 0; it < 25; ++it) {
        MonomialIdeal R = random_biborel_ideal(R22, 4, {3, 3}, rng);
        Region z = hf_zero_region(R);
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b)
                CHECK(z.contains({a, b}) ==
                      (hilbert_function(R, {a, b}) == 0));
    }
}

TEST_CASE("colon equality region on worked examples") {
    // M = (x0, x1) and k = 0: (M:x0) = (1) differs from M only in
    // bidegree (0,0), so the region is everything above (1,0).
    CHECK(colon_equality_region(MonomialIdeal::mx(R22), 0).is_full());

    // M = (x1^2, x1y1, x0), k = 1: region {a >= 2}
    MonomialIdeal J1 = from_exprs(R22, {{{0, 2}, {0, 0}}, {{0, 1}, {0, 1}},
                                        {{1, 0}, {0, 0}}});
    CHECK(colon_equality_region(J1, 1) == Region({1, 0}, {{2, 0}}));
}

TEST_CASE("colon equality region against witness scan") {
    TestRng rng(35);
    for (int it = 0; it < 15; ++it) {
        MonomialIdeal M = random_biborel_ideal(R22, 4, {3, 3}, rng);
        if (M.is_zero_ideal() || M.is_unit_ideal()) continue;
        Bidegree margin = M.max_gen_bidegree();
        for (int k = 0; k < R22.nx; ++k) {
            Region r = colon_equality_region(M, k);
            MonomialIdeal N = M.colon(Monomial::xvar(R22, k));
            Bidegree window{8 + margin.a + 1, 8 + margin.b + 1};
            for (int a = 1; a <= 8; ++a)
                for (int b = 0; b <= 8; ++b)
                    CHECK(r.contains({a, b}) ==
                          brute_colon_equality_at(M, N, {a, b}, window));
        }
    }
}
