#include "selforth/codes.hpp"

#include <algorithm>
#include <map>

namespace selforth {

namespace {

void check_rows(const FieldTower::Ptr& t, CodeLevel level, int n, const Mat& rows,
                const char* what) {
    if (n < 1) fail(errc::bad_range, "code length must be >= 1");
    for (const auto& row : rows) {
        if ((int)row.size() != n) fail(errc::length_mismatch, std::string(what) + " row length != n");
        for (const auto& e : row) {
            if (e.tower() != t.get()) fail(errc::tower_mismatch, std::string(what) + " entry from another tower");
            if (level == CodeLevel::base && !e.in_base())
                fail(errc::bad_range, std::string(what) + " entry not in the base field");
        }
    }
}

} // namespace

LinearCode make_linear(const FieldTower::Ptr& t, CodeLevel level, int n, Mat rows) {
    check_rows(t, level, n, rows, "generator");
    if (!rows.empty() && rank(rows) != (int)rows.size())
        fail(errc::not_a_basis, "generator rows are dependent");
    return LinearCode{t, level, n, std::move(rows)};
}

ScalableCode make_scalable(const FieldTower::Ptr& t, CodeLevel level, int n, Mat reps) {
    check_rows(t, level, n, reps, "representative");
    return ScalableCode{t, level, n, std::move(reps)};
}

CyclicCode make_cyclic(const FieldTower::Ptr& t, int n, std::vector<int> zeros) {
    if (n < 1) fail(errc::bad_range, "cyclic length must be >= 1");
    if ((t->size() - 1) % (std::uint32_t)n != 0)
        fail(errc::bad_range, "cyclic length must divide q^m - 1");
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    for (int z : zeros)
        if (z < 0 || z >= n) fail(errc::bad_set, "zero-set residue out of range");
    FElem alpha = t->primitive().pow((long long)(t->size() - 1) / n);
    return CyclicCode{t, n, std::move(zeros), alpha};
}

std::vector<int> CyclicCode::nonzeros() const {
    std::vector<int> out;
    size_t zi = 0;
    for (int i = 0; i < n; ++i) {
        if (zi < zeros.size() && zeros[zi] == i) { ++zi; continue; }
        out.push_back(i);
    }
    return out;
}

std::set<int> CyclicCode::nonzero_set() const {
    auto nz = nonzeros();
    return {nz.begin(), nz.end()};
}

const FieldTower::Ptr& code_tower(const AnyCode& c) {
    return std::visit([](const auto& cc) -> const FieldTower::Ptr& { return cc.tower; }, c);
}

CodeLevel code_level(const AnyCode& c) {
    return std::visit([](const auto& cc) { return cc.level; }, c);
}

int code_length(const AnyCode& c) {
    return std::visit([](const auto& cc) { return cc.n; }, c);
}

std::uint32_t scalar_count(const FieldTower::Ptr& t, CodeLevel level) {
    return level == CodeLevel::top ? t->size() : t->q();
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, long long q) {
    if (n < 1) fail(errc::bad_range, "modulus must be >= 1");
    long long g = q % n;
    {
        long long a = n, b = g;
        while (b) { long long tmp = a % b; a = b; b = tmp; }
        if (a != 1) fail(errc::not_coprime, "gcd(n, q) != 1");
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cosets;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit;
        long long cur = s;
        do {
            orbit.push_back((int)cur);
            seen[cur] = true;
            cur = cur * g % n;
        } while (cur != s);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

LinearCode cyclic_to_linear(const CyclicCode& c) {
    const FieldTower* tw = c.tower.get();
    // g(x) = prod_{i in Z} (x - alpha^i), constant first
    Vec g{tw->one()};
    for (int z : c.zeros) {
        FElem root = c.alpha.pow(z);
        Vec next(g.size() + 1, tw->zero());
        for (size_t i = 0; i < g.size(); ++i) {
            next[i + 1] += g[i];
            next[i] -= g[i] * root;
        }
        g = std::move(next);
    }
    const int k = c.n - (int)c.zeros.size();
    Mat rows;
    for (int s = 0; s < k; ++s) {
        Vec row(c.n, tw->zero());
        for (size_t i = 0; i < g.size(); ++i) row[s + i] = g[i];
        rows.push_back(std::move(row));
    }
    return make_linear(c.tower, CodeLevel::top, c.n, std::move(rows));
}

CyclicCode cyclic_dual(const CyclicCode& c) {
    std::vector<int> dz;
    for (int s : c.nonzeros()) dz.push_back(((-s) % c.n + c.n) % c.n);
    return make_cyclic(c.tower, c.n, std::move(dz));
}

LinearCode dual_code(const LinearCode& c) {
    const FieldTower* tw = c.tower.get();
    if (c.gens.empty()) {
        Mat id(c.n, Vec(c.n, tw->zero()));
        for (int i = 0; i < c.n; ++i) id[i][i] = tw->one();
        return make_linear(c.tower, c.level, c.n, std::move(id));
    }
    Mat ns = nullspace(c.gens, tw);
    return make_linear(c.tower, c.level, c.n, std::move(ns));
}

Vec expand_vector(const Vec& v, const std::vector<FElem>& mults) {
    const FieldTower* tw = mults.at(0).tower();
    Vec out;
    out.reserve(v.size() * mults.size());
    for (const auto& mu : mults)
        for (const auto& x : v) out.push_back(tw->trace_rel(mu * x));
    return out;
}

namespace {

std::vector<FElem> dual_multipliers(const FieldTower::Ptr& t, const Basis& b) {
    if (b.tower() != t.get()) fail(errc::tower_mismatch, "basis from another tower");
    return dual_basis(b).elems;
}

// the monomial GF(q)-basis {1, y, ..., y^{m-1}} of GF(q^m)
std::vector<FElem> monomial_basis(const FieldTower::Ptr& t) {
    std::vector<FElem> out;
    std::uint32_t idx = 1;
    for (int i = 0; i < t->m(); ++i) {
        out.push_back(t->element(idx));
        idx *= t->q();
    }
    return out;
}

Mat scalable_orbit_images(const ScalableCode& c, const std::vector<FElem>& mults) {
    std::set<std::vector<std::uint32_t>> seen;
    Mat out;
    for (const auto& v : c.reps) {
        for (std::uint32_t s = 1; s < c.tower->size(); ++s) {
            FElem lambda = c.tower->element(s);
            Vec scaled(v.size(), c.tower->zero());
            for (size_t i = 0; i < v.size(); ++i) scaled[i] = lambda * v[i];
            Vec img = expand_vector(scaled, mults);
            std::vector<std::uint32_t> key;
            key.reserve(img.size());
            for (const auto& e : img) key.push_back(e.index());
            if (seen.insert(std::move(key)).second && hamming_weight(img) > 0)
                out.push_back(std::move(img));
        }
    }
    return out;
}

} // namespace

LinearCode image_code(const LinearCode& c, const Basis& b) {
    if (c.level != CodeLevel::top) fail(errc::bad_range, "imaging expects a code over the top field");
    auto mults = dual_multipliers(c.tower, b);
    auto mono = monomial_basis(c.tower);
    Mat rows;
    for (const auto& g : c.gens) {
        for (const auto& beta : mono) {
            Vec scaled(g.size(), c.tower->zero());
            for (size_t i = 0; i < g.size(); ++i) scaled[i] = beta * g[i];
            rows.push_back(expand_vector(scaled, mults));
        }
    }
    return make_linear(c.tower, CodeLevel::base, c.n * c.tower->m(), std::move(rows));
}

ScalableCode image_code(const ScalableCode& c, const Basis& b) {
    if (c.level != CodeLevel::top) fail(errc::bad_range, "imaging expects a code over the top field");
    auto mults = dual_multipliers(c.tower, b);
    return make_scalable(c.tower, CodeLevel::base, c.n * c.tower->m(),
                         scalable_orbit_images(c, mults));
}

AnyCode image_code(const AnyCode& c, const Basis& b) {
    return std::visit([&](const auto& cc) -> AnyCode { return image_code(cc, b); }, c);
}

LinearCode trace_code(const LinearCode& c) {
    if (c.level != CodeLevel::top) fail(errc::bad_range, "trace expects a code over the top field");
    auto mono = monomial_basis(c.tower);
    std::vector<FElem> one{c.tower->one()};
    Mat rows;
    for (const auto& g : c.gens) {
        for (const auto& beta : mono) {
            Vec scaled(g.size(), c.tower->zero());
            for (size_t i = 0; i < g.size(); ++i) scaled[i] = beta * g[i];
            rows.push_back(expand_vector(scaled, one));
        }
    }
    rows = row_basis(std::move(rows));
    return make_linear(c.tower, CodeLevel::base, c.n, std::move(rows));
}

ScalableCode trace_code(const ScalableCode& c) {
    if (c.level != CodeLevel::top) fail(errc::bad_range, "trace expects a code over the top field");
    std::vector<FElem> one{c.tower->one()};
    return make_scalable(c.tower, CodeLevel::base, c.n, scalable_orbit_images(c, one));
}

AnyCode trace_code(const AnyCode& c) {
    return std::visit([&](const auto& cc) -> AnyCode { return trace_code(cc); }, c);
}

int hamming_weight(const Vec& v) {
    int w = 0;
    for (const auto& e : v)
        if (!e.is_zero()) ++w;
    return w;
}

namespace {

// depth-first span enumeration with partial sums
void span_rec(const LinearCode& c, std::uint32_t nscalars, size_t row, Vec& acc,
              const std::function<void(const Vec&)>& emit) {
    if (row == c.gens.size()) {
        emit(acc);
        return;
    }
    const FieldTower* tw = c.tower.get();
    for (std::uint32_t s = 0; s < nscalars; ++s) {
        Vec next = acc;
        if (s != 0) {
            FElem lambda = tw->element(s);
            for (int i = 0; i < c.n; ++i) next[i] += lambda * c.gens[row][i];
        }
        span_rec(c, nscalars, row + 1, next, emit);
    }
}

} // namespace

std::vector<Vec> codewords(const LinearCode& c, std::uint64_t guard) {
    const std::uint32_t ns = scalar_count(c.tower, c.level);
    std::uint64_t count = 1;
    for (int i = 0; i < c.dim(); ++i) {
        count *= ns;
        if (count > guard) fail(errc::too_large, "codeword enumeration past guard");
    }
    std::vector<Vec> out;
    out.reserve(count);
    Vec zero(c.n, c.tower->zero());
    span_rec(c, ns, 0, zero, [&](const Vec& v) { out.push_back(v); });
    return out;
}

std::vector<Vec> codewords(const ScalableCode& c, std::uint64_t guard) {
    const std::uint32_t ns = scalar_count(c.tower, c.level);
    if ((std::uint64_t)ns * (c.reps.size() + 1) > guard)
        fail(errc::too_large, "codeword enumeration past guard");
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Vec> out;
    out.emplace_back(c.n, c.tower->zero());
    seen.insert(std::vector<std::uint32_t>(c.n, 0));
    for (const auto& v : c.reps) {
        for (std::uint32_t s = 1; s < ns; ++s) {
            FElem lambda = c.tower->element(s);
            Vec w(c.n, c.tower->zero());
            std::vector<std::uint32_t> key(c.n);
            for (int i = 0; i < c.n; ++i) {
                w[i] = lambda * v[i];
                key[i] = w[i].index();
            }
            if (seen.insert(std::move(key)).second) out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Vec> codewords(const AnyCode& c, std::uint64_t guard) {
    return std::visit([&](const auto& cc) { return codewords(cc, guard); }, c);
}

int min_distance_bruteforce(const LinearCode& c, std::uint64_t guard) {
    if (c.dim() == 0) fail(errc::empty_code, "zero code has no nonzero codeword");
    const std::uint32_t ns = scalar_count(c.tower, c.level);
    std::uint64_t count = 1;
    for (int i = 0; i < c.dim(); ++i) {
        count *= ns;
        if (count > guard) fail(errc::too_large, "distance search past guard");
    }
    int best = c.n + 1;
    Vec zero(c.n, c.tower->zero());
    span_rec(c, ns, 0, zero, [&](const Vec& v) {
        int w = hamming_weight(v);
        if (w > 0 && w < best) best = w;
    });
    return best;
}

int bch_bound(const std::set<int>& zset, int n) {
    if (n < 1) fail(errc::bad_range, "modulus must be >= 1");
    for (int z : zset)
        if (z < 0 || z >= n) fail(errc::bad_set, "residue out of range");
    if ((int)zset.size() == n) return n + 1;
    if (zset.empty()) return 1;
    int best = 0, run = 0;
    for (int i = 0; i < 2 * n; ++i) { // doubled scan handles the wrap-around
        if (zset.count(i % n)) {
            run = std::min(run + 1, n);
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return 1 + best;
}

CyclicTraceSets cyclic_trace_zero_set(const CyclicCode& c) {
    auto cosets = cyclotomic_cosets(c.n, c.tower->q());
    auto S = c.nonzero_set();
    CyclicTraceSets out;
    for (const auto& orbit : cosets) {
        bool meets_s = false;
        for (int x : orbit)
            if (S.count(x)) { meets_s = true; break; }
        for (int x : orbit) (meets_s ? out.Sc : out.Zc).insert(x);
    }
    return out;
}

} // namespace selforth
