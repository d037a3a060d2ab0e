#include <doctest.h>

#include "oracles.hpp"

using namespace selforth;
using namespace selforth::testing;

namespace {

FieldTower::Ptr gf4() { return FieldTower::make_default(2, 1, 2); }
FieldTower::Ptr gf8() { return FieldTower::make_default(2, 1, 3); }
FieldTower::Ptr gf64() { return FieldTower::make_default(2, 2, 3); }

// the running example: the GF(4) line through (1, w, w^2)
LinearCode example_line(const FieldTower::Ptr& t) {
    FElem w = t->primitive();
    return make_linear(t, CodeLevel::top, 3, {{t->one(), w, w * w}});
}

} // namespace

TEST_CASE("cyclotomic cosets") {
    auto c7 = cyclotomic_cosets(7, 4);
    REQUIRE(c7.size() == 3);
    CHECK(c7[0] == std::vector<int>{0});
    CHECK(c7[1] == std::vector<int>{1, 2, 4});
    CHECK(c7[2] == std::vector<int>{3, 5, 6});

    auto c15 = cyclotomic_cosets(15, 16);
    CHECK(c15.size() == 15); // 16 = 1 mod 15: all singletons

    auto c63 = cyclotomic_cosets(63, 4);
    size_t total = 0;
    for (const auto& orbit : c63) {
        CHECK((orbit.size() == 1 || orbit.size() == 3));
        total += orbit.size();
    }
    CHECK(total == 63);

    CHECK_THROWS_AS((void)cyclotomic_cosets(4, 2), error);
}

TEST_CASE("cyclic generator matrix") {
    auto t = gf4();
    auto c = make_cyclic(t, 3, {1, 2});
    auto lin = cyclic_to_linear(c);
    CHECK(lin.dim() == 1);
    // g(x) = (x - w)(x - w^2) = x^2 + x + 1
    CHECK(lin.gens[0][0] == t->one());
    CHECK(lin.gens[0][1] == t->one());
    CHECK(lin.gens[0][2] == t->one());

    auto full = cyclic_to_linear(make_cyclic(t, 3, {}));
    CHECK(full.dim() == 3);
    auto zero = cyclic_to_linear(make_cyclic(t, 3, {0, 1, 2}));
    CHECK(zero.dim() == 0);
}

TEST_CASE("cyclic dual zero set") {
    auto t = gf8();
    auto c = make_cyclic(t, 7, {4, 5, 6});
    auto d = cyclic_dual(c);
    CHECK(d.zero_set() == std::set<int>{0, 4, 5, 6}); // -S for S = {0,1,2,3}
    CHECK(d.nonzero_set() == std::set<int>{1, 2, 3}); // -Z
    // matrix route agrees: same row space
    auto lhs = row_basis(dual_code(cyclic_to_linear(c)).gens);
    auto rhs = row_basis(cyclic_to_linear(d).gens);
    CHECK(lhs == rhs);
}

TEST_CASE("dual code involution and dimensions") {
    auto t = gf4();
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + (int)(rng() % 4);
        int k = (int)(rng() % (n + 1));
        auto c = rand_linear(t, n, k, rng);
        auto d = dual_code(c);
        CHECK(d.dim() == n - k);
        for (const auto& g : c.gens)
            for (const auto& h : d.gens) CHECK(dot(g, h).is_zero());
        CHECK(row_basis(dual_code(d).gens) == row_basis(c.gens));
    }
    auto full = make_linear(t, CodeLevel::top, 3,
                            {{t->one(), t->zero(), t->zero()},
                             {t->zero(), t->one(), t->zero()},
                             {t->zero(), t->zero(), t->one()}});
    CHECK(dual_code(full).dim() == 0);
}

TEST_CASE("bch bound") {
    CHECK(bch_bound({4, 5, 6}, 7) == 4);
    CHECK(bch_bound({}, 7) == 1);
    std::set<int> z;
    for (int i = 1; i <= 20; ++i) z.insert(i);
    CHECK(bch_bound(z, 63) == 21);
    CHECK(bch_bound({6, 0, 1}, 7) == 4); // wrap-around run
    CHECK(bch_bound({0, 1, 2}, 3) == 4); // full set
}

TEST_CASE("minimum distance brute force") {
    auto t = gf4();
    auto rep = make_linear(t, CodeLevel::top, 3, {{t->one(), t->one(), t->one()}});
    CHECK(min_distance_bruteforce(rep) == 3);
    CHECK_THROWS_AS((void)min_distance_bruteforce(make_linear(t, CodeLevel::top, 3, {})), error);

    // consecutive-run duals over GF(8) meet the run + Singleton bound exactly
    auto t8 = gf8();
    for (int s = 1; s <= 3; ++s) {
        std::set<int> S;
        for (int i = 1; i <= s; ++i) S.insert(i);
        std::vector<int> zeros;
        for (int i = 0; i < 7; ++i)
            if (!S.count(i)) zeros.push_back(i);
        auto c = make_cyclic(t8, 7, zeros); // nonzero set {1..s}
        auto dual = cyclic_to_linear(cyclic_dual(c));
        CHECK(min_distance_bruteforce(dual) == s + 1);
    }

    // guard fires
    std::mt19937 rng(1);
    auto t64 = gf64();
    auto big = make_linear(t64, CodeLevel::top, 4, {rand_vec(t64, 4, rng)});
    CHECK_THROWS_AS((void)min_distance_bruteforce(big, 10), error);
}

TEST_CASE("image of the example line matches the listed words up to interleaving") {
    auto t = gf4();
    auto c = example_line(t);
    FElem w = t->primitive();

    struct Case {
        Basis basis;
        std::vector<std::vector<int>> words; // listed in interleaved order
    };
    std::vector<Case> cases;
    cases.push_back({Basis{{t->one(), w}},
                     {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 1}, {0, 1, 1, 1, 1, 0}, {1, 1, 1, 0, 0, 1}}});
    cases.push_back({Basis{{w, w * w}},
                     {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 1}, {1, 0, 0, 1, 1, 1}, {0, 1, 1, 1, 1, 0}}});
    cases.push_back({Basis{{t->one(), w * w}},
                     {{0, 0, 0, 0, 0, 0}, {1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 1, 1}}});

    for (const auto& cs : cases) {
        auto img = image_code(c, cs.basis);
        CHECK(img.level == CodeLevel::base);
        CHECK(img.n == 6);
        CHECK(img.dim() == 2);
        auto words = codewords(img);
        REQUIRE(words.size() == 4);
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& bw : words) {
            Vec inter = interleave(bw, 3, 2);
            std::vector<std::uint32_t> key;
            for (const auto& e : inter) key.push_back(e.index());
            got.insert(key);
        }
        std::set<std::vector<std::uint32_t>> want;
        for (const auto& lw : cs.words)
            want.insert(std::vector<std::uint32_t>(lw.begin(), lw.end()));
        CHECK(got == want);
    }
}

TEST_CASE("trace of the example line") {
    auto t = gf4();
    auto tc = trace_code(example_line(t));
    auto got = word_set(codewords(tc));
    std::set<std::vector<std::uint32_t>> want{
        {0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1}};
    CHECK(got == want);

    auto zero_tr = trace_code(make_linear(t, CodeLevel::top, 3, {}));
    CHECK(zero_tr.dim() == 0);
}

TEST_CASE("scalable image and trace") {
    auto t = gf4();
    FElem w = t->primitive();
    auto sc = make_scalable(t, CodeLevel::top, 3, {{t->one(), w, w * w}});

    auto img = image_code(sc, Basis{{t->one(), w}});
    auto lin_img = image_code(example_line(t), Basis{{t->one(), w}});
    CHECK(word_set(codewords(img)) == word_set(codewords(lin_img)));

    auto tr = trace_code(sc);
    auto lin_tr = trace_code(example_line(t));
    CHECK(word_set(codewords(tr)) == word_set(codewords(lin_tr)));
}

TEST_CASE("imaging is injective and respects dimensions") {
    std::mt19937 rng(23);
    for (auto t : {gf4(), FieldTower::make_default(3, 1, 2)}) {
        for (int it = 0; it < 10; ++it) {
            auto sc = rand_scalable(t, 3, 1 + (int)(rng() % 3), rng);
            auto b = rand_basis(t, rng);
            CHECK(codewords(image_code(sc, b)).size() == codewords(sc).size());

            auto lc = rand_linear(t, 3, 1 + (int)(rng() % 2), rng);
            auto img = image_code(lc, b);
            CHECK(img.dim() == t->m() * lc.dim());
            CHECK(img.n == t->m() * lc.n);
        }
    }
}

TEST_CASE("image of a scalable code is closed under base scalars") {
    auto t = FieldTower::make_default(3, 1, 2);
    std::mt19937 rng(31);
    auto sc = rand_scalable(t, 2, 2, rng);
    auto img = image_code(sc, rand_basis(t, rng));
    auto words = word_set(codewords(img));
    for (const auto& w : codewords(img)) {
        for (std::uint32_t s = 0; s < t->q(); ++s) {
            Vec scaled(w.size(), t->zero());
            for (size_t i = 0; i < w.size(); ++i) scaled[i] = t->element(s) * w[i];
            std::vector<std::uint32_t> key;
            for (const auto& e : scaled) key.push_back(e.index());
            CHECK(words.count(key));
        }
    }
}

TEST_CASE("expanding through {1} reproduces the trace") {
    auto t = gf4();
    std::mt19937 rng(37);
    for (int it = 0; it < 20; ++it) {
        Vec v = rand_vec(t, 4, rng);
        Vec via_one = expand_vector(v, {t->one()});
        REQUIRE(via_one.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(via_one[i] == t->trace_rel(v[i]));
    }
}

TEST_CASE("coordinate-wise trace of base-valued words is m * identity") {
    auto t = gf4(); // m = 2, p = 2: Tr(a) = 2a = 0 on GF(2)
    for (std::uint32_t i = 0; i < t->q(); ++i)
        CHECK(t->trace_rel(t->element(i)) == t->zero());
    auto t9 = FieldTower::make_default(3, 1, 2); // Tr(a) = 2a on GF(3)
    for (std::uint32_t i = 0; i < t9->q(); ++i)
        CHECK(t9->trace_rel(t9->element(i)) == t9->element(i) + t9->element(i));
}

TEST_CASE("trace zero sets via cosets") {
    auto t = gf64();
    auto c = make_cyclic(t, 7, {0, 4, 5, 6}); // S = {1,2,3}
    auto sets = cyclic_trace_zero_set(c);
    CHECK(sets.Sc == std::set<int>{1, 2, 3, 4, 5, 6});
    CHECK(sets.Zc == std::set<int>{0});

    auto empty = cyclic_trace_zero_set(make_cyclic(t, 7, {0, 1, 2, 3, 4, 5, 6}));
    CHECK(empty.Sc.empty());
    CHECK(empty.Zc.size() == 7);

    // coset-closed nonzero set maps to itself
    auto closed = make_cyclic(t, 7, {0, 3, 5, 6}); // S = {1,2,4} = one coset
    CHECK(cyclic_trace_zero_set(closed).Sc == std::set<int>{1, 2, 4});
}

TEST_CASE("coset trace zero sets agree with direct evaluation") {
    std::mt19937 rng(41);
    for (auto t : {gf64(), FieldTower::make_default(2, 2, 2)}) {
        std::vector<int> lengths;
        for (int n : {3, 5, 7, 9, 15, 21, 63})
            if ((t->size() - 1) % n == 0) lengths.push_back(n);
        for (int n : lengths) {
            for (int it = 0; it < 5; ++it) {
                std::vector<int> zeros;
                for (int i = 0; i < n; ++i)
                    if (rng() % 2) zeros.push_back(i);
                auto c = make_cyclic(t, n, zeros);
                auto sets = cyclic_trace_zero_set(c);
                auto tc = trace_code(cyclic_to_linear(c));
                auto direct = eval_zero_set(tc.gens, n, c.alpha);
                CHECK(direct == sets.Zc);
            }
        }
    }
}

TEST_CASE("minimum distance respects the run bound on cyclic codes") {
    auto t = gf8();
    std::mt19937 rng(43);
    for (int it = 0; it < 10; ++it) {
        std::vector<int> zeros;
        for (int i = 0; i < 7; ++i)
            if (rng() % 2) zeros.push_back(i);
        auto c = make_cyclic(t, 7, zeros);
        auto lin = cyclic_to_linear(c);
        if (lin.dim() == 0) continue;
        CHECK(min_distance_bruteforce(lin) >= bch_bound(c.zero_set(), 7));
    }
}

TEST_CASE("cyclic construction validates lengths and residues") {
    auto t = gf4();
    CHECK_THROWS_AS((void)make_cyclic(t, 5, {}), error);  // 5 does not divide 3
    CHECK_THROWS_AS((void)make_cyclic(t, 3, {7}), error); // residue out of range
    auto c = make_cyclic(t, 3, {});
    CHECK(t->order_of(c.alpha.index()) == 3);
}
