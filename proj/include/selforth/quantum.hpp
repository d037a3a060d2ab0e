#pragma once

#include <optional>
#include <set>
#include <string>

#include "selforth/codes.hpp"

namespace selforth {

// Zero-set test for self-orthogonality of a cyclic code w.r.t. the product
// sum x_i y_i^(p^j): true iff (-p^j S) mod n is contained in Z.
// errc::bad_set for residues outside [0, n).
bool cyclic_hermitian_selforth(int n, const std::set<int>& zeros, long long p, int frob_j);

// Hermitian (l = 1, q = 4) image condition for a cyclic code over GF(4^m):
// for every k < m with a non-vanishing dual power sum at exponent
// 1 + 2*4^k, require (-2^(2k+1) S) mod n inside Z. The profile must come
// from a GF(4^m)/GF(4) tower.
bool image_condition_cyclic(int n, const std::set<int>& S, const PowerSumProfile& dual_profile,
                            int m);

// Hermitian trace condition: (-2 S^c) mod n inside Z^c, with S^c, Z^c the
// coset closures under multiplication by 4.
bool trace_condition_cyclic(int n, const std::set<int>& S, int m);

// A labelled dual basis for the search (the power-sum carrier).
struct BasisPoolEntry {
    std::string label;
    Basis dual;
};

// The stock pool: the two GF(64)/GF(4) dual bases {1, a^3, a^15} and
// {1, a, a^5} for m = 3; empty otherwise. User-extensible via the CLI.
std::vector<BasisPoolEntry> default_basis_pool(const FieldTower::Ptr& t);

struct QuantumParams {
    int m = 0, n0 = 0;
    int n_q = 0, k_q = 0, d_q = 0;
    bool d_exact = false;  // consecutive-run regime: d is exact, else a lower bound
    std::set<int> S;
    std::string basis_label;                // "All" when the trace condition holds
    std::vector<std::string> basis_elems;   // dual basis elements, empty for "All"
    std::vector<int> gated_exponents;       // 1 + 2^(2k+1) with non-vanishing sums
    std::vector<int> vanishing_exponents;
    bool trace_selforth = false;
};

// Parameters n = m*n0, k = n - 2m|S|, d = |S|+1 for a consecutive nonzero
// set {1..delta} (otherwise d falls back to the run-length bound and
// d_exact is cleared). The certificate condition is re-checked:
// errc::condition_not_met when the requested route does not hold.
// basis = nullopt requests the trace route (label "All").
QuantumParams quantum_params(const FieldTower::Ptr& t, int n0, const std::set<int>& S,
                             const std::optional<BasisPoolEntry>& basis);

// Scan delta = 1, 2, ... with S = {1..delta} while k stays positive; emit
// one "All" row when the trace condition holds, else one row per pool basis
// whose image condition fires. Rows are ordered by delta, then pool order.
std::vector<QuantumParams> search_table(const FieldTower::Ptr& t, int n0,
                                        const std::vector<BasisPoolEntry>& pool);

} // namespace selforth
