#include "selforth/quantum.hpp"

#include <algorithm>

namespace selforth {

namespace {

void check_residues(int n, const std::set<int>& s) {
    if (n < 1) fail(errc::bad_range, "length must be >= 1");
    for (int x : s)
        if (x < 0 || x >= n) fail(errc::bad_set, "residue out of range");
}

std::set<int> complement(int n, const std::set<int>& s) {
    std::set<int> out;
    for (int i = 0; i < n; ++i)
        if (!s.count(i)) out.insert(i);
    return out;
}

// (-u * S) mod n inside Z, for S the complement of Z
bool neg_multiple_inside(int n, const std::set<int>& zeros, long long u) {
    u %= n;
    for (int i = 0; i < n; ++i) {
        if (zeros.count(i)) continue; // the survivors are exactly S
        int img = (int)(((-(u * i)) % n + n) % n);
        if (!zeros.count(img)) return false;
    }
    return true;
}

void check_gf4m(const FieldTower* t, int m) {
    if (t->p() != 2 || t->r() != 2 || t->m() != m)
        fail(errc::bad_range, "expected a GF(4^m)/GF(4) tower");
}

} // namespace

bool cyclic_hermitian_selforth(int n, const std::set<int>& zeros, long long p, int frob_j) {
    check_residues(n, zeros);
    long long u = 1;
    for (int i = 0; i < frob_j; ++i) u = u * p % n;
    return neg_multiple_inside(n, zeros, u);
}

bool image_condition_cyclic(int n, const std::set<int>& S, const PowerSumProfile& dual_profile,
                            int m) {
    check_residues(n, S);
    check_gf4m(dual_profile.dual.tower(), m);
    std::set<int> Z = complement(n, S);
    for (int k = 0; k < m; ++k) {
        int j = 2 * k + 1; // exponent 1 + 2*4^k = 1 + 2^(2k+1)
        if (dual_profile.sums[j].is_zero()) continue;
        if (!cyclic_hermitian_selforth(n, Z, 2, j)) return false;
    }
    return true;
}

bool trace_condition_cyclic(int n, const std::set<int>& S, int m) {
    check_residues(n, S);
    (void)m;
    auto cosets = cyclotomic_cosets(n, 4);
    std::set<int> Sc, Zc;
    for (const auto& orbit : cosets) {
        bool meets_s = false;
        for (int x : orbit)
            if (S.count(x)) { meets_s = true; break; }
        for (int x : orbit) (meets_s ? Sc : Zc).insert(x);
    }
    return cyclic_hermitian_selforth(n, Zc, 2, 1);
}

std::vector<BasisPoolEntry> default_basis_pool(const FieldTower::Ptr& t) {
    std::vector<BasisPoolEntry> pool;
    if (t->p() == 2 && t->r() == 2 && t->m() == 3) {
        pool.push_back({"B'1", Basis{{t->from_power(0), t->from_power(3), t->from_power(15)}}});
        pool.push_back({"B'2", Basis{{t->from_power(0), t->from_power(1), t->from_power(5)}}});
    }
    return pool;
}

namespace {

int longest_run(const std::set<int>& s, int n) {
    if ((int)s.size() == n) return n;
    if (s.empty()) return 0;
    int best = 0, run = 0;
    for (int i = 0; i < 2 * n; ++i) {
        if (s.count(i % n)) {
            ++run;
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return best;
}

} // namespace

QuantumParams quantum_params(const FieldTower::Ptr& t, int n0, const std::set<int>& S,
                             const std::optional<BasisPoolEntry>& basis) {
    const int m = t->m();
    check_gf4m(t.get(), m);
    if (n0 < 1 || (t->size() - 1) % (std::uint32_t)n0 != 0)
        fail(errc::bad_range, "n0 must divide 4^m - 1");
    check_residues(n0, S);

    QuantumParams qp;
    qp.m = m;
    qp.n0 = n0;
    qp.S = S;
    qp.n_q = m * n0;
    qp.k_q = m * n0 - 2 * m * (int)S.size();
    qp.trace_selforth = trace_condition_cyclic(n0, S, m);

    if (!basis) {
        if (!qp.trace_selforth)
            fail(errc::condition_not_met, "trace condition fails; a specific basis is required");
        qp.basis_label = "All";
    } else {
        auto prof = power_sum_profile(basis->dual);
        if (!image_condition_cyclic(n0, S, prof, m))
            fail(errc::condition_not_met, "image condition fails for basis " + basis->label);
        qp.basis_label = basis->label;
        qp.basis_elems = basis->dual.strs();
        for (int k = 0; k < m; ++k) {
            int j = 2 * k + 1;
            int exponent = 1 + (1 << (2 * k + 1));
            if (prof.sums[j].is_zero()) qp.vanishing_exponents.push_back(exponent);
            else qp.gated_exponents.push_back(exponent);
        }
    }

    int run = longest_run(S, n0);
    qp.d_q = run + 1;
    qp.d_exact = (run == (int)S.size()); // a single consecutive run: run bound meets Singleton
    return qp;
}

std::vector<QuantumParams> search_table(const FieldTower::Ptr& t, int n0,
                                        const std::vector<BasisPoolEntry>& pool) {
    const int m = t->m();
    check_gf4m(t.get(), m);
    if (n0 < 1 || (t->size() - 1) % (std::uint32_t)n0 != 0)
        fail(errc::bad_range, "n0 must divide 4^m - 1");

    std::vector<PowerSumProfile> profiles;
    profiles.reserve(pool.size());
    for (const auto& entry : pool) profiles.push_back(power_sum_profile(entry.dual));

    std::vector<QuantumParams> rows;
    for (int delta = 1; m * n0 - 2 * m * delta > 0 && delta < n0; ++delta) {
        std::set<int> S;
        for (int i = 1; i <= delta; ++i) S.insert(i);
        if (trace_condition_cyclic(n0, S, m)) {
            rows.push_back(quantum_params(t, n0, S, std::nullopt));
            continue;
        }
        for (size_t bi = 0; bi < pool.size(); ++bi) {
            if (image_condition_cyclic(n0, S, profiles[bi], m))
                rows.push_back(quantum_params(t, n0, S, pool[bi]));
        }
    }
    return rows;
}

} // namespace selforth
