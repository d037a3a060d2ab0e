#include <doctest.h>

#include <functional>
#include <random>

#include "selforth/ff.hpp"

using namespace selforth;

namespace {

FieldTower::Ptr gf4() { return FieldTower::make_default(2, 1, 2); }
FieldTower::Ptr gf9() { return FieldTower::make_default(3, 1, 2); }
FieldTower::Ptr gf64_over_gf4() { return FieldTower::make_default(2, 2, 3); }
FieldTower::Ptr gf64_over_gf2() { return FieldTower::make_default(2, 1, 6); }

} // namespace

namespace {

errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return errc::internal;
}

} // namespace

TEST_CASE("tower construction rejects bad inputs") {
    CHECK(thrown_code([] { (void)FieldTower::make(4, {1, 1}, {1, 1}); }) == errc::not_prime);
    // x^2 + x = x(x+1)
    CHECK(thrown_code([] { (void)FieldTower::make(2, {0, 1, 1}, {1, 1}); }) ==
          errc::reducible_modulus);
    CHECK(thrown_code([] { (void)FieldTower::make(2, {1}, {1, 1}); }) == errc::degree_zero);
    CHECK(thrown_code([] { (void)FieldTower::make(2, {1, 1}, {1}); }) == errc::degree_zero);
    // reducible outer: x^2 + 1 = (x+1)^2 over GF(2)
    CHECK(thrown_code([] { (void)FieldTower::make(2, {0, 1}, {1, 0, 1}); }) ==
          errc::reducible_modulus);
}

TEST_CASE("degree-1 inner modulus gives GF(2^m) directly") {
    auto t = FieldTower::make(2, {1, 1}, {1, 1, 1}); // inner x+1, outer x^2+x+1
    CHECK(t->r() == 1);
    CHECK(t->q() == 2);
    CHECK(t->size() == 4);
}

TEST_CASE("GF(4) arithmetic") {
    auto t = gf4();
    FElem w = t->primitive();
    CHECK(w.index() == 2); // the polynomial generator x
    CHECK(w * w == w + t->one());        // x^2 = x + 1
    CHECK(w * w.pow(2) == t->one());     // w^3 = 1
    CHECK(w.pow(3) == t->one());
    CHECK((w / w) == t->one());
    CHECK_THROWS_AS((void)(w / t->zero()), error);
    for (std::uint32_t i = 0; i < 4; ++i) {
        FElem a = t->element(i);
        CHECK(a + t->zero() == a);
        CHECK(a * t->one() == a);
        CHECK(a + a == t->zero()); // characteristic 2
    }
}

TEST_CASE("GF(9) arithmetic and primitive") {
    auto t = gf9();
    FElem g = t->primitive();
    // gamma^2 + gamma + 2 = 0, so gamma^2 = 2*gamma + 1
    FElem two = t->element(2);
    CHECK(g * g == two * g + t->one());
    CHECK(t->order_of(g.index()) == 8);
    CHECK(g.pow(4) == -t->one());
    CHECK(g.pow(8) == t->one());
}

TEST_CASE("GF(64) over GF(2): root of x^6+x+1") {
    auto t = gf64_over_gf2();
    FElem a = t->primitive();
    CHECK(a.pow(6) + a + t->one() == t->zero());
    CHECK(a.frob(6) == a);
    CHECK(t->order_of(a.index()) == 63);
}

TEST_CASE("GF(64) over GF(4): canonical generator matches the binary presentation") {
    auto t = gf64_over_gf4();
    CHECK(t->q() == 4);
    CHECK(t->m() == 3);
    FElem a = t->primitive();
    // the pinned cubic makes the generator a root of x^6 + x + 1
    CHECK(a.pow(6) + a + t->one() == t->zero());
    CHECK(t->order_of(a.index()) == 63);
    // constants are exactly the GF(4) subfield
    for (std::uint32_t i = 0; i < t->size(); ++i) {
        FElem e = t->element(i);
        CHECK(e.in_base() == (i < 4));
        CHECK((e.frob(t->r()) == e) == (i < 4));
    }
}

TEST_CASE("trace values on GF(4)") {
    auto t = gf4();
    FElem w = t->primitive();
    CHECK(t->trace_rel(w) == t->one());
    CHECK(t->trace_rel(w * w) == t->one());
    CHECK(t->trace_rel(t->zero()) == t->zero());
    CHECK(t->trace_rel(t->one()) == t->zero()); // 1 + 1^2 = 0 in characteristic 2
}

TEST_CASE("field axioms on random triples") {
    for (auto t : {gf4(), gf9(), gf64_over_gf4(), FieldTower::make_default(2, 2, 2)}) {
        std::mt19937 rng(42);
        std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
        for (int it = 0; it < 200; ++it) {
            FElem a = t->element(dist(rng)), b = t->element(dist(rng)), c = t->element(dist(rng));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == t->zero());
            if (!a.is_zero()) CHECK(a * a.inv() == t->one());
        }
    }
}

TEST_CASE("frobenius is a field automorphism with period rm") {
    for (auto t : {gf9(), gf64_over_gf4()}) {
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
        for (int it = 0; it < 100; ++it) {
            FElem a = t->element(dist(rng)), b = t->element(dist(rng));
            int j = (int)(rng() % (2 * t->rm()));
            CHECK((a + b).frob(j) == a.frob(j) + b.frob(j));
            CHECK((a * b).frob(j) == a.frob(j) * b.frob(j));
            CHECK(a.frob(t->rm()) == a);
            CHECK(a.frob(j).frob(t->rm() - j % t->rm()) == a);
        }
        // frob fixes GF(p) elementwise
        for (long long c = 0; c < t->p(); ++c) {
            FElem e = t->element((std::uint32_t)c);
            CHECK(e.frob(1) == e);
        }
    }
}

TEST_CASE("relative trace is GF(q)-linear into GF(q)") {
    for (auto t : {gf4(), gf9(), gf64_over_gf4()}) {
        std::mt19937 rng(11);
        std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
        std::uniform_int_distribution<std::uint32_t> bdist(0, t->q() - 1);
        for (int it = 0; it < 200; ++it) {
            FElem a = t->element(dist(rng)), b = t->element(dist(rng));
            FElem lam = t->element(bdist(rng)), mu = t->element(bdist(rng));
            FElem tr = t->trace_rel(a);
            CHECK(tr.in_base());
            CHECK(tr.frob(t->r()) == tr); // image sits in GF(q)
            CHECK(t->trace_rel(lam * a + mu * b) == lam * t->trace_rel(a) + mu * t->trace_rel(b));
        }
        // surjectivity onto GF(q): every base value is hit
        std::vector<bool> hit(t->q(), false);
        for (std::uint32_t i = 0; i < t->size(); ++i) hit[t->trace_rel(i)] = true;
        for (std::uint32_t v = 0; v < t->q(); ++v) CHECK(hit[v]);
    }
}

TEST_CASE("primitive order equals q^m - 1 across stock towers") {
    for (auto t : {gf4(), gf9(), gf64_over_gf4(), gf64_over_gf2(),
                   FieldTower::make_default(2, 2, 2), FieldTower::make_default(2, 1, 3),
                   FieldTower::make_default(5, 1, 2), FieldTower::make_default(7, 1, 2)}) {
        CHECK(t->order_of(t->primitive().index()) == t->size() - 1);
    }
}

TEST_CASE("fields past the log-table cap fall back to polynomial arithmetic") {
    // 2^21 elements: no discrete-log tables, multiplication by reduction
    auto t = FieldTower::make_default(2, 1, 21);
    CHECK(t->size() == (1u << 21));
    FElem a = t->primitive();
    CHECK(a * a.inv() == t->one());
    CHECK(a.frob(21) == a);
    CHECK((a + a).is_zero());
    FElem b = a.pow(12345);
    CHECK(a.pow(6) * b == a.pow(12351));
    CHECK(t->trace_rel(b).in_base());
    CHECK_THROWS_AS((void)t->log(a.index()), error); // no tables to answer from
}

TEST_CASE("operations reject mixed towers") {
    auto t1 = gf4();
    auto t2 = gf4(); // equal parameters, distinct tower object
    CHECK(thrown_code([&] { (void)(t1->one() + t2->one()); }) == errc::tower_mismatch);
    CHECK(thrown_code([&] { (void)t1->trace_rel(t2->one()); }) == errc::tower_mismatch);
}

TEST_CASE("coordinates round-trip") {
    auto t = gf64_over_gf4();
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
    for (int it = 0; it < 50; ++it) {
        std::uint32_t idx = dist(rng);
        CHECK(t->from_coords(t->coords(idx)).index() == idx);
    }
}
