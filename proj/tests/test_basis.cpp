#include <doctest.h>

#include <random>

#include "selforth/basis.hpp"

using namespace selforth;

namespace {

FieldTower::Ptr gf4() { return FieldTower::make_default(2, 1, 2); }
FieldTower::Ptr gf9() { return FieldTower::make_default(3, 1, 2); }
FieldTower::Ptr gf8() { return FieldTower::make_default(2, 1, 3); }
FieldTower::Ptr gf16_over_gf4() { return FieldTower::make_default(2, 2, 2); }
FieldTower::Ptr gf64_over_gf4() { return FieldTower::make_default(2, 2, 3); }

Basis mk(const FieldTower::Ptr& t, std::initializer_list<long long> powers) {
    Basis b;
    for (long long k : powers) b.elems.push_back(t->from_power(k));
    return b;
}

} // namespace

TEST_CASE("is_basis") {
    auto t4 = gf4();
    FElem one = t4->one(), w = t4->primitive();
    CHECK(is_basis({one, w}));
    CHECK_FALSE(is_basis({one, one}));
    CHECK_THROWS_AS((void)is_basis({one}), error); // wrong count

    auto t9 = gf9();
    CHECK(is_basis({t9->one(), t9->primitive().pow(2)}));
}

TEST_CASE("dual basis of {1, w} is {w^2, 1}") {
    auto t = gf4();
    Basis b{{t->one(), t->primitive()}};
    Basis d = dual_basis(b);
    CHECK(d.elems[0] == t->primitive().pow(2));
    CHECK(d.elems[1] == t->one());
    // duality relations Tr(b_i d_j) = delta_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(t->trace_rel(b.elems[i] * d.elems[j]) ==
                  (i == j ? t->one() : t->zero()));
}

TEST_CASE("{w, w^2} is self-dual") {
    auto t = gf4();
    Basis b = mk(t, {1, 2});
    Basis d = dual_basis(b);
    CHECK(d.elems == b.elems);
}

TEST_CASE("dual_basis is an involution on every GF(9) basis") {
    auto t = gf9();
    for (const auto& b : all_bases(t, false)) {
        Basis d = dual_basis(b);
        CHECK(dual_basis(d).elems == b.elems);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(t->trace_rel(b.elems[i] * d.elems[j]) ==
                      (i == j ? t->one() : t->zero()));
    }
    Basis bad{{t->one(), t->one()}};
    CHECK_THROWS_AS((void)dual_basis(bad), error);
}

TEST_CASE("power sums of the dual {w^2, 1}") {
    auto t = gf4();
    Basis dual = mk(t, {2, 0});
    CHECK(power_sum(dual, 0) == t->from_power(2)); // w^4 + 1 = w^2
    CHECK(power_sum(dual, 1) == t->zero());        // w^6 + 1 = 0
}

TEST_CASE("power sums of {1, g^2} over GF(9)") {
    auto t = gf9();
    Basis dual = mk(t, {0, 2});
    CHECK(power_sum(dual, 0) == t->zero());     // 1 + g^4 = 0
    CHECK(power_sum(dual, 1) == t->element(2)); // 1 + g^8 = 2
}

TEST_CASE("power sums of the two GF(64)/GF(4) dual bases") {
    auto t = gf64_over_gf4();
    Basis b1 = mk(t, {0, 3, 15}); // exponents 3 and 33 vanish, 9 does not
    CHECK(power_sum(b1, 1).is_zero());
    CHECK_FALSE(power_sum(b1, 3).is_zero());
    CHECK(power_sum(b1, 5).is_zero());

    Basis b2 = mk(t, {0, 1, 5}); // only exponent 9 vanishes
    CHECK_FALSE(power_sum(b2, 1).is_zero());
    CHECK(power_sum(b2, 3).is_zero());
    CHECK_FALSE(power_sum(b2, 5).is_zero());

    CHECK(is_basis(b1.elems));
    CHECK(is_basis(b2.elems));

    auto prof = power_sum_profile(b1);
    CHECK(prof.vanishing == std::set<int>{1, 5});
}

TEST_CASE("basis enumeration counts") {
    auto t4 = gf4();
    auto u = all_bases(t4, true);
    REQUIRE(u.size() == 3);
    // exactly {1,w}, {1,w^2}, {w,w^2}
    auto key = [](const Basis& b) {
        return std::pair<std::uint32_t, std::uint32_t>{b.elems[0].index(), b.elems[1].index()};
    };
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& b : u) got.insert(key(b));
    std::set<std::pair<std::uint32_t, std::uint32_t>> want{{1, 2}, {1, 3}, {2, 3}};
    CHECK(got == want);

    CHECK(all_bases(t4, false).size() == 6);
    CHECK(all_bases(gf9(), false).size() == 48);
    CHECK(all_bases(gf8(), false).size() == 168);
    CHECK(all_bases(gf16_over_gf4(), false).size() == 180);
}

TEST_CASE("basis enumeration guard") {
    auto big = FieldTower::make_default(2, 1, 10); // 1024 elements
    CHECK_THROWS_AS((void)all_bases(big, true), error);
}

TEST_CASE("per-residue power sums cannot all vanish") {
    for (auto t : {gf9(), gf8(), gf16_over_gf4(), gf64_over_gf4()}) {
        std::mt19937 rng(5);
        std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
        int tested = 0;
        while (tested < 25) {
            std::vector<FElem> elems;
            for (int i = 0; i < t->m(); ++i) elems.push_back(t->element(dist(rng)));
            Basis b{elems};
            if (!is_basis(elems)) continue;
            ++tested;
            auto prof = power_sum_profile(b);
            for (int j0 = 0; j0 < t->r(); ++j0) {
                bool some_nonzero = false;
                for (int w = 0; w < t->m(); ++w)
                    some_nonzero = some_nonzero || !prof.sums[(j0 + t->r() * w) % t->rm()].is_zero();
                CHECK(some_nonzero);
            }
        }
    }
}

TEST_CASE("self-dual bases have power sums delta_0k at exponents 1 + q^k") {
    int found = 0;
    for (auto t : {gf4(), gf16_over_gf4()}) {
        for (const auto& b : all_bases(t, false)) {
            if (dual_basis(b).elems != b.elems) continue;
            ++found;
            for (int k = 0; k < t->m(); ++k) {
                FElem want = (k == 0) ? t->one() : t->zero();
                CHECK(power_sum(b, t->r() * k) == want);
            }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("even q: the squared power sum never vanishes") {
    for (auto t : {gf4(), gf8(), gf16_over_gf4()}) {
        for (const auto& b : all_bases(t, true))
            CHECK_FALSE(power_sum(b, 0).is_zero());
    }
}

TEST_CASE("4 | q-1 quadratic towers: the squared power sum never vanishes") {
    // exhaustive over GF(81)/GF(9), sampled over GF(625)/GF(25)
    auto t81 = FieldTower::make_default(3, 2, 2);
    REQUIRE((t81->q() - 1) % 4 == 0);
    for (const auto& b : all_bases(t81, true))
        CHECK_FALSE(power_sum(b, 0).is_zero());

    auto t625 = FieldTower::make_default(5, 2, 2);
    REQUIRE((t625->q() - 1) % 4 == 0);
    std::mt19937 rng(2027);
    std::uniform_int_distribution<std::uint32_t> dist(0, t625->size() - 1);
    int tested = 0;
    while (tested < 200) {
        std::vector<FElem> elems{t625->element(dist(rng)), t625->element(dist(rng))};
        if (!is_basis(elems)) continue;
        ++tested;
        CHECK_FALSE(power_sum(Basis{elems}, 0).is_zero());
    }
}

TEST_CASE("quadratic power-sum classification agrees with the stated instances") {
    CHECK(classify_quadratic_power_sum(2, 2, 1) == QuadPowerSum::always_nonvanishing);
    CHECK(classify_quadratic_power_sum(3, 1, 0) == QuadPowerSum::can_vanish);
    CHECK(classify_quadratic_power_sum(2, 1, 1) == QuadPowerSum::can_vanish);
    CHECK_THROWS_AS((void)classify_quadratic_power_sum(2, 2, 4), error);
}

TEST_CASE("classification matches the exhaustive root search on small fields") {
    struct Shape { long long p; int r; };
    for (auto [p, r] : {Shape{2, 1}, Shape{2, 2}, Shape{3, 1}, Shape{5, 1}}) {
        auto t = FieldTower::make_default(p, r, 2);
        for (int l = 0; l < 2 * r; ++l)
            CHECK(classify_quadratic_power_sum(p, r, l) ==
                  classify_quadratic_power_sum_oracle(t, l));
    }
}

TEST_CASE("classification matches basis search") {
    // can_vanish iff some basis of GF(q^2)/GF(q) has a vanishing power sum
    for (auto t : {gf9(), gf16_over_gf4()}) {
        for (int l = 0; l < t->rm(); ++l) {
            bool vanish_somewhere = false;
            for (const auto& b : all_bases(t, true))
                vanish_somewhere = vanish_somewhere || power_sum(b, l).is_zero();
            auto cls = classify_quadratic_power_sum(t->p(), t->r(), l);
            CHECK(vanish_somewhere == (cls == QuadPowerSum::can_vanish));
        }
    }
}

TEST_CASE("gcd reductions") {
    CHECK(gcd_pm(2, 5, +1, 2, +1) == 1);  // gcd(33, 5)
    CHECK(gcd_pm(2, 3, +1, 3, +1) == 9);  // gcd(x, x) = x
    CHECK(gcd_pm(3, 4, -1, 2, +1) == 10); // gcd(80, 10)
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int l = 1; l <= 8; ++l)
            for (int r = 1; r <= 8; ++r)
                for (int s1 : {+1, -1})
                    for (int s2 : {+1, -1}) {
                        long long g = gcd_pm(p, r, s1, l, s2);
                        int d = std::gcd(l, r);
                        long long pg = 1;
                        for (int i = 0; i < d; ++i) pg *= p;
                        bool ok = g == 1 || g == 2 || g == pg + 1 || g == pg - 1;
                        CHECK(ok);
                    }
    }
}

TEST_CASE("power-of-two divisibility test") {
    CHECK(divides_power_of_two_test(2, 1));
    CHECK_FALSE(divides_power_of_two_test(3, 1));
    CHECK(divides_power_of_two_test(4, 2));
    CHECK_FALSE(divides_power_of_two_test(4, 0)); // l = 0 excluded
    CHECK_FALSE(divides_power_of_two_test(6, 2));
    // sufficient condition for the nonvanishing classification
    for (long long p : {2LL, 3LL, 5LL})
        for (int r = 1; r <= 4; ++r)
            for (int l = 1; l < 2 * r; ++l)
                if (divides_power_of_two_test(r, l))
                    CHECK(classify_quadratic_power_sum(p, r, l) ==
                          QuadPowerSum::always_nonvanishing);
}
