#include "selforth/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "selforth/codes.hpp"
#include "selforth/forms.hpp"

namespace selforth {

namespace {

struct Shape {
    long long p;
    int r, m;
    int n_max;     // random-family code length cap
    int dup_k_max; // duplicated-family generator cap
};

FElem rand_elem(const FieldTower::Ptr& t, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, t->size() - 1);
    return t->element(d(rng));
}

Basis rand_basis(const FieldTower::Ptr& t, std::mt19937& rng) {
    while (true) {
        std::vector<FElem> elems;
        for (int i = 0; i < t->m(); ++i) elems.push_back(rand_elem(t, rng));
        if (is_basis(elems)) return Basis{std::move(elems)};
    }
}

AnyCode random_code(const FieldTower::Ptr& t, int n_max, std::mt19937& rng) {
    int n = 2 + (int)(rng() % (n_max - 1));
    if (rng() % 2) {
        int k = 1 + (int)(rng() % 2);
        while (true) {
            Mat rows;
            for (int i = 0; i < k; ++i) {
                Vec v;
                for (int j = 0; j < n; ++j) v.push_back(rand_elem(t, rng));
                rows.push_back(std::move(v));
            }
            if (rank(rows) == k) return make_linear(t, CodeLevel::top, n, std::move(rows));
        }
    }
    int reps = 1 + (int)(rng() % 3);
    Mat rows;
    while ((int)rows.size() < reps) {
        Vec v;
        for (int j = 0; j < n; ++j) v.push_back(rand_elem(t, rng));
        if (hamming_weight(v) > 0) rows.push_back(std::move(v));
    }
    return make_scalable(t, CodeLevel::top, n, std::move(rows));
}

// coordinates repeated p times: every diagonal product sums to p * (...) = 0,
// so trace and all images are self-orthogonal and the brute force cannot
// exit early
AnyCode duplicated_code(const FieldTower::Ptr& t, int k_max, std::mt19937& rng) {
    const int copies = (int)t->p() == 2 ? 2 : (int)t->p();
    const int h = 1 + (int)(rng() % 2);
    const int n = h * copies;
    int k = 1 + (int)(rng() % std::min(k_max, h)); // rank of the duplicated rows caps at h
    while (true) {
        Mat rows;
        for (int i = 0; i < k; ++i) {
            Vec base;
            for (int j = 0; j < h; ++j) base.push_back(rand_elem(t, rng));
            Vec v;
            for (int c = 0; c < copies; ++c) v.insert(v.end(), base.begin(), base.end());
            rows.push_back(std::move(v));
        }
        if (rank(rows) == k) return make_linear(t, CodeLevel::top, n, std::move(rows));
    }
}

// single orbit of a vector with vanishing square sum, so the orbit is
// canonically self-orthogonal while the conjugate products are left to
// chance; in characteristic 2 a zero coordinate sum does it, otherwise the
// last coordinate is a square root of minus the partial square sum
AnyCode zero_sum_orbit(const FieldTower::Ptr& t, int n_max, std::mt19937& rng) {
    int n = 2 + (int)(rng() % (n_max - 1));
    while (true) {
        Vec v;
        for (int j = 0; j + 1 < n; ++j) v.push_back(rand_elem(t, rng));
        if (t->p() == 2) {
            FElem sum = t->zero();
            for (const auto& e : v) sum += e;
            v.push_back(sum);
        } else {
            FElem sq = t->zero();
            for (const auto& e : v) sq += e * e;
            FElem target = -sq;
            if (target.is_zero()) {
                v.push_back(t->zero());
            } else {
                std::uint32_t lg = t->log(target.index());
                if (lg % 2 != 0) continue; // not a square, redraw
                v.push_back(t->from_power(lg / 2));
            }
        }
        if (hamming_weight(v) == 0) continue;
        return make_scalable(t, CodeLevel::top, n, {v});
    }
}

} // namespace

VerifyOutcome verify_against_oracle(std::uint64_t seed, int instances, std::uint64_t pair_guard) {
    const std::vector<Shape> shapes{
        {2, 1, 2, 6, 2}, // GF(4)/GF(2)
        {3, 1, 2, 6, 2}, // GF(9)/GF(3)
        {2, 2, 2, 6, 2}, // GF(16)/GF(4)
        {2, 2, 3, 4, 2}, // GF(64)/GF(4)
    };
    std::vector<FieldTower::Ptr> towers;
    for (const auto& s : shapes) towers.push_back(FieldTower::make_default(s.p, s.r, s.m));

    std::mt19937 rng((std::uint32_t)seed);
    VerifyOutcome out;
    out.instances = instances;

    for (int i = 0; i < instances; ++i) {
        const size_t si = i % shapes.size();
        const auto& t = towers[si];
        const auto& sh = shapes[si];
        const int family = (i / (int)shapes.size()) % 3;

        AnyCode c = family == 0 ? random_code(t, sh.n_max, rng)
                   : family == 1 ? duplicated_code(t, sh.dup_k_max, rng)
                                 : zero_sum_orbit(t, sh.n_max, rng);
        Basis b = rand_basis(t, rng);
        int l = (int)(rng() % t->r());
        const int n = code_length(c);

        bool img_criterion = image_selforth_hermitian(c, b, l).overall;
        bool img_oracle =
            selforth_bruteforce(codewords(image_code(c, b), pair_guard),
                                induce_form(t, hermitian_form(n, l), t->m()), pair_guard);
        bool tr_criterion = trace_selforth_hermitian(c, l).overall;
        bool tr_oracle = selforth_bruteforce(codewords(trace_code(c), pair_guard),
                                             hermitian_form(n, l), pair_guard);

        if (img_criterion == img_oracle && tr_criterion == tr_oracle) {
            ++out.agreements;
        } else {
            std::ostringstream os;
            os << "instance " << i << ": GF(" << t->size() << ")/GF(" << t->q() << ") family "
               << family << " n=" << n << " l=" << l << " image " << img_criterion << "/"
               << img_oracle << " trace " << tr_criterion << "/" << tr_oracle;
            out.failures.push_back(os.str());
        }
    }
    return out;
}

} // namespace selforth
