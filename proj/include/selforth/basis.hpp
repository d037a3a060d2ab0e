#pragma once

#include <functional>
#include <set>
#include <vector>

#include "selforth/ff.hpp"

namespace selforth {

// Ordered basis of GF(q^m) over GF(q). Construction does not validate;
// call is_basis or rely on the consuming operation's check.
struct Basis {
    std::vector<FElem> elems;

    const FieldTower* tower() const { return elems.empty() ? nullptr : elems[0].tower(); }
    std::vector<std::string> strs() const;
};

// errc::wrong_count if not exactly m elements, errc::tower_mismatch on mixed towers.
bool is_basis(const std::vector<FElem>& elems);

// Trace-dual partner: Tr(b_i * dual_j) = delta_ij. errc::not_a_basis.
Basis dual_basis(const Basis& b);

// sum_s beta_s^(1 + p^j) over the given (dual) basis, j taken mod rm.
FElem power_sum(const Basis& dual, int j);

struct PowerSumProfile {
    Basis dual;
    std::vector<FElem> sums;    // index j in [0, rm)
    std::set<int> vanishing;    // { j : sums[j] == 0 }
};

PowerSumProfile power_sum_profile(const Basis& dual);

// Yields each basis once (ordered, or sorted-by-index representatives when
// unordered). Return false from the callback to stop. Guarded to q^m <= 512,
// m <= 3 (errc::too_large).
void enumerate_bases(const FieldTower::Ptr& t, bool unordered,
                     const std::function<bool(const Basis&)>& yield);

std::vector<Basis> all_bases(const FieldTower::Ptr& t, bool unordered);

// Quadratic-extension power sums alpha^(1+p^l) + beta^(1+p^l) over bases of
// GF(q^2)/GF(q), q = p^r: either no basis makes the sum vanish, or some does.
enum class QuadPowerSum { always_nonvanishing, can_vanish };

// Arithmetic criterion (no field enumeration):
//   p = 2: nonvanishing iff gcd(2^l+1, 2^r+1) = 1
//   p odd: nonvanishing iff [v2(p^r-1) > v2(p^l+1) and gcd(p^l+1, p^r+1) = 2]
//          or v2(p^{2r}-1) <= v2(p^l+1)
// errc::bad_range unless 0 <= l < 2r.
QuadPowerSum classify_quadratic_power_sum(long long p, int r, int l);

// Exhaustive cross-check: true iff no x in GF(q^2)\GF(q) solves x^(1+p^l) = -1.
QuadPowerSum classify_quadratic_power_sum_oracle(const FieldTower::Ptr& quadratic, int l);

// gcd(p^e1 + s1, p^e2 + s2), s in {+1,-1}, computed by the exponent
// reduction gcd(p^(a*l+b) +- 1, p^l +- 1) -> gcd(p^b +- (-1)^a, p^l +- 1)
// and cross-checked against the direct integer gcd. errc::too_large on
// 64-bit overflow, errc::bad_range for exponents < 1.
long long gcd_pm(long long p, int e1, int s1, int e2, int s2);

// True iff some power of two divides r but not l (l = 0 counts as false).
bool divides_power_of_two_test(int r, int l);

} // namespace selforth
