#pragma once

#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "selforth/basis.hpp"
#include "selforth/linalg.hpp"

namespace selforth {

// Which field supplies the scalars: the top field GF(q^m) for codes as
// given, the middle field GF(q) for image/trace codes derived from them.
enum class CodeLevel { top, base };

struct LinearCode {
    FieldTower::Ptr tower;
    CodeLevel level = CodeLevel::top;
    int n = 0;
    Mat gens; // rows independent

    int dim() const { return (int)gens.size(); }
};

// Scalar-closed code given by orbit representatives; the codeword set is
// { lambda * v : lambda in scalars, v in reps } (zero code for empty reps).
struct ScalableCode {
    FieldTower::Ptr tower;
    CodeLevel level = CodeLevel::top;
    int n = 0;
    Mat reps;
};

// Cyclic code of length n | q^m - 1 described by its zero set.
struct CyclicCode {
    FieldTower::Ptr tower;
    int n = 0;
    std::vector<int> zeros; // sorted
    FElem alpha;            // fixed primitive n-th root of unity

    std::vector<int> nonzeros() const;
    std::set<int> zero_set() const { return {zeros.begin(), zeros.end()}; }
    std::set<int> nonzero_set() const;
};

using AnyCode = std::variant<LinearCode, ScalableCode>;

// Validating constructors. errc::{tower_mismatch, bad_range, length_mismatch,
// not_a_basis (dependent generator rows)}.
LinearCode make_linear(const FieldTower::Ptr& t, CodeLevel level, int n, Mat rows);
ScalableCode make_scalable(const FieldTower::Ptr& t, CodeLevel level, int n, Mat reps);
CyclicCode make_cyclic(const FieldTower::Ptr& t, int n, std::vector<int> zeros);

const FieldTower::Ptr& code_tower(const AnyCode& c);
CodeLevel code_level(const AnyCode& c);
int code_length(const AnyCode& c);

// Scalars of the given level, by index: [0, q^m) or [0, q).
std::uint32_t scalar_count(const FieldTower::Ptr& t, CodeLevel level);

// Orbits of Z_n under multiplication by q, sorted by least element.
// errc::not_coprime.
std::vector<std::vector<int>> cyclotomic_cosets(int n, long long q);

// Generator matrix of the cyclic shifts of g(x) = prod_{i in Z} (x - alpha^i).
LinearCode cyclic_to_linear(const CyclicCode& c);

// Dual cyclic code: zero set = (-S) mod n.
CyclicCode cyclic_dual(const CyclicCode& c);

// Canonical-inner-product annihilator, dim n - k.
LinearCode dual_code(const LinearCode& c);

// Block-ordered expansion: block s of the output holds Tr(mults[s] * v_i).
Vec expand_vector(const Vec& v, const std::vector<FElem>& mults);

// Image w.r.t. basis b (coordinates via dual_basis(b)); length n*m over GF(q).
LinearCode image_code(const LinearCode& c, const Basis& b);
ScalableCode image_code(const ScalableCode& c, const Basis& b);
AnyCode image_code(const AnyCode& c, const Basis& b);

// Coordinate-wise relative trace; length n over GF(q).
LinearCode trace_code(const LinearCode& c);
ScalableCode trace_code(const ScalableCode& c);
AnyCode trace_code(const AnyCode& c);

// Minimum Hamming weight over all nonzero codewords.
// errc::empty_code for the zero code, errc::too_large past the guard.
int min_distance_bruteforce(const LinearCode& c, std::uint64_t guard = (1ull << 22));

// 1 + longest cyclic run of consecutive residues inside zset.
int bch_bound(const std::set<int>& zset, int n);

struct CyclicTraceSets {
    std::set<int> Zc, Sc;
};

// Zero/non-zero sets of the trace code from the q-ary cyclotomic cosets.
CyclicTraceSets cyclic_trace_zero_set(const CyclicCode& c);

// Full codeword enumeration (deduplicated, deterministic order).
// errc::too_large when the count exceeds the guard.
std::vector<Vec> codewords(const LinearCode& c, std::uint64_t guard = (1ull << 22));
std::vector<Vec> codewords(const ScalableCode& c, std::uint64_t guard = (1ull << 22));
std::vector<Vec> codewords(const AnyCode& c, std::uint64_t guard = (1ull << 22));

int hamming_weight(const Vec& v);

} // namespace selforth
