#include "selforth/basis.hpp"

#include <algorithm>
#include <limits>

#include "selforth/linalg.hpp"

namespace selforth {

std::vector<std::string> Basis::strs() const {
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.str());
    return out;
}

namespace {

const FieldTower* check_elems(const std::vector<FElem>& elems) {
    if (elems.empty()) fail(errc::wrong_count, "empty element list");
    const FieldTower* tw = elems[0].tower();
    for (const auto& e : elems)
        if (e.tower() != tw) fail(errc::tower_mismatch, "mixed towers in basis");
    if ((int)elems.size() != tw->m())
        fail(errc::wrong_count, "need exactly m elements");
    return tw;
}

// m x m matrix of GF(q) coordinates w.r.t. the monomial basis {1, y, ...}
Mat coord_matrix(const FieldTower* tw, const std::vector<FElem>& elems) {
    Mat a(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        auto c = tw->coords(elems[i].index());
        a[i].reserve(c.size());
        for (auto ci : c) a[i].emplace_back(tw, ci);
    }
    return a;
}

} // namespace

bool is_basis(const std::vector<FElem>& elems) {
    const FieldTower* tw = check_elems(elems);
    return rank(coord_matrix(tw, elems)) == tw->m();
}

Basis dual_basis(const Basis& b) {
    const FieldTower* tw = check_elems(b.elems);
    const int m = tw->m();
    Mat gram(m, Vec(m, tw->zero()));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            gram[i][j] = tw->trace_rel(b.elems[i] * b.elems[j]);
    auto inv = invert(gram);
    if (!inv) fail(errc::not_a_basis, "trace form is degenerate on the given elements");
    Basis dual;
    dual.elems.assign(m, tw->zero());
    for (int j = 0; j < m; ++j) {
        FElem acc = tw->zero();
        for (int i = 0; i < m; ++i) acc += (*inv)[j][i] * b.elems[i];
        dual.elems[j] = acc;
    }
    return dual;
}

FElem power_sum(const Basis& dual, int j) {
    const FieldTower* tw = check_elems(dual.elems);
    if (!is_basis(dual.elems)) fail(errc::not_a_basis, "power sum of a non-basis");
    FElem acc = tw->zero();
    for (const auto& b : dual.elems) acc += b * b.frob(j);
    return acc;
}

PowerSumProfile power_sum_profile(const Basis& dual) {
    const FieldTower* tw = check_elems(dual.elems);
    PowerSumProfile prof;
    prof.dual = dual;
    prof.sums.reserve(tw->rm());
    for (int j = 0; j < tw->rm(); ++j) {
        prof.sums.push_back(power_sum(dual, j));
        if (prof.sums.back().is_zero()) prof.vanishing.insert(j);
    }
    return prof;
}

void enumerate_bases(const FieldTower::Ptr& t, bool unordered,
                     const std::function<bool(const Basis&)>& yield) {
    if (t->size() > 512 || t->m() > 3)
        fail(errc::too_large, "basis enumeration guarded to q^m <= 512, m <= 3");
    const std::uint32_t N = t->size(), q = t->q();
    const int m = t->m();

    std::vector<std::uint32_t> chosen;
    bool stop = false;
    // span: GF(q)-span of the chosen prefix, as a flat membership table
    std::function<void(const std::vector<bool>&, std::uint32_t)> rec =
        [&](const std::vector<bool>& span, std::uint32_t min_idx) {
            if (stop) return;
            if ((int)chosen.size() == m) {
                Basis b;
                for (auto idx : chosen) b.elems.push_back(t->element(idx));
                if (!yield(b)) stop = true;
                return;
            }
            for (std::uint32_t cand = unordered ? min_idx : 1; cand < N && !stop; ++cand) {
                if (span[cand]) continue;
                std::vector<bool> next = span;
                for (std::uint32_t s = 0; s < N; ++s) {
                    if (!span[s]) continue;
                    for (std::uint32_t c = 1; c < q; ++c)
                        next[t->add(s, t->mul(c, cand))] = true;
                }
                chosen.push_back(cand);
                rec(next, cand + 1);
                chosen.pop_back();
            }
        };
    std::vector<bool> initial(N, false);
    initial[0] = true;
    rec(initial, 1);
}

std::vector<Basis> all_bases(const FieldTower::Ptr& t, bool unordered) {
    std::vector<Basis> out;
    enumerate_bases(t, unordered, [&](const Basis& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

namespace {

long long pow_checked(long long p, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > (std::numeric_limits<long long>::max() - 1) / p)
            fail(errc::too_large, "p^e overflows 64 bits");
        v *= p;
    }
    return v;
}

int v2(long long n) {
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    return v;
}

long long igcd(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

} // namespace

QuadPowerSum classify_quadratic_power_sum(long long p, int r, int l) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (r < 1 || l < 0 || l >= 2 * r) fail(errc::bad_range, "need 0 <= l < 2r");
    if (p == 2) {
        long long g = igcd(pow_checked(2, l) + 1, pow_checked(2, r) + 1);
        return g == 1 ? QuadPowerSum::always_nonvanishing : QuadPowerSum::can_vanish;
    }
    long long pl1 = pow_checked(p, l) + 1;
    long long pr1 = pow_checked(p, r) + 1;
    long long prm1 = pow_checked(p, r) - 1;
    bool clause_a = v2(prm1) > v2(pl1) && igcd(pl1, pr1) == 2;
    bool clause_b = v2(prm1) + v2(pr1) <= v2(pl1); // v2(p^{2r}-1) = v2(p^r-1) + v2(p^r+1)
    return (clause_a || clause_b) ? QuadPowerSum::always_nonvanishing : QuadPowerSum::can_vanish;
}

QuadPowerSum classify_quadratic_power_sum_oracle(const FieldTower::Ptr& t, int l) {
    if (t->m() != 2) fail(errc::bad_range, "oracle needs a quadratic tower");
    if (l < 0 || l >= t->rm()) fail(errc::bad_range, "need 0 <= l < 2r");
    FElem minus_one = -t->one();
    for (std::uint32_t x = 1; x < t->size(); ++x) {
        if (t->in_base(x)) continue;
        FElem xe = t->element(x);
        if (xe * xe.frob(l) == minus_one) return QuadPowerSum::can_vanish;
    }
    return QuadPowerSum::always_nonvanishing;
}

bool divides_power_of_two_test(int r, int l) {
    if (r < 1 || l < 0) fail(errc::bad_range, "need r >= 1, l >= 0");
    if (l == 0) return false;
    return v2(r) > v2(l);
}

long long gcd_pm(long long p, int e1, int s1, int e2, int s2) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (e1 < 1 || e2 < 1) fail(errc::bad_range, "exponents must be >= 1");
    if (s1 != 1 && s1 != -1) fail(errc::bad_range, "sign must be +-1");
    if (s2 != 1 && s2 != -1) fail(errc::bad_range, "sign must be +-1");

    long long direct = igcd(pow_checked(p, e1) + s1, pow_checked(p, e2) + s2);

    // Euclidean descent on exponents carrying the signs
    long long a1 = e1, g1 = s1, a2 = e2, g2 = s2;
    long long reduced = -1;
    while (true) {
        if (a1 == 0) { reduced = igcd(1 + g1, pow_checked(p, (int)a2) + g2); break; }
        if (a2 == 0) { reduced = igcd(pow_checked(p, (int)a1) + g1, 1 + g2); break; }
        if (a1 < a2) { std::swap(a1, a2); std::swap(g1, g2); }
        if (a1 == a2 && g1 == g2) { reduced = pow_checked(p, (int)a1) + g1; break; }
        long long quot = a1 / a2, rem = a1 % a2;
        if (g2 == 1 && quot % 2 == 1) g1 = -g1;
        a1 = rem;
    }
    if (reduced != direct)
        fail(errc::internal, "gcd reduction disagrees with direct value");
    return direct;
}

} // namespace selforth
