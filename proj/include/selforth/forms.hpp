#pragma once

#include <cstdint>
#include <vector>

#include "selforth/codes.hpp"

namespace selforth {

// One monomial a * x_i^(p^k) * y_j^(p^l) of a biadditive form; coordinates
// are 0-based here (the CLI accepts the customary 1-based indices).
struct TableEntry {
    int i = 0, j = 0;
    int k = 0, l = 0;
    FElem a;
};

// Biadditive form on GF(q^m)^n x GF(q^m)^n. Canonical and Hermitian-type
// products are kept symbolic; arbitrary forms carry a sparse monomial table.
struct FormSpec {
    enum class Kind { canonical, hermitian, table };

    Kind kind = Kind::canonical;
    int n = 0;
    int frob_j = 0;                  // hermitian: sum_i x_i * frob(y_i, j)
    std::vector<TableEntry> entries; // table only

    bool hermitian_like() const { return kind != Kind::table; }
};

FormSpec canonical_form(int n);
FormSpec hermitian_form(int n, int frob_j);
FormSpec table_form(const FieldTower::Ptr& t, int n, std::vector<TableEntry> entries);

// The form induced on GF(q)^{nm} by summing over the m blocks of an image
// vector. For a table form this carries the folded coefficients
// b_{ijkl} = sum_{u,v} a_{ij(k+ur)(l+vr)} with k,l < r.
struct InducedFormSpec {
    FormSpec::Kind kind = FormSpec::Kind::canonical;
    int block_len = 0;
    int blocks = 0;
    int frob_l = 0;                    // hermitian: sum_t x_t * frob(y_t, l)
    std::vector<TableEntry> b_entries; // table only
};

// errc::length_mismatch on wrong vector lengths.
FElem eval_form(const FormSpec& f, const Vec& x, const Vec& y);

InducedFormSpec induce_form(const FieldTower::Ptr& t, const FormSpec& f, int m);

// Evaluation through the folded coefficient table (or symbolic shortcut).
// Arguments must be GF(q)-valued of length block_len * blocks.
FElem eval_induced(const InducedFormSpec& fi, const Vec& x, const Vec& y);

// Definitional route: sum of eval_form over the m coordinate blocks.
FElem eval_induced_blocksum(const FormSpec& f, int m, const Vec& x, const Vec& y);

// True iff the form vanishes on every ordered pair of the given words.
// errc::too_large when |words|^2 exceeds pair_guard.
bool selforth_bruteforce(const std::vector<Vec>& words, const FormSpec& f,
                         std::uint64_t pair_guard = (1ull << 24));
bool selforth_bruteforce(const std::vector<Vec>& words, const InducedFormSpec& fi,
                         std::uint64_t pair_guard = (1ull << 24));

// Linear-code reduction: Hermitian-type forms check generator row pairs
// (scalar law); table forms check the GF(p)-spanning set {lambda_t g_i}.
bool selforth_linear(const LinearCode& c, const FormSpec& f);

// All ordered codeword pairs of a scalable code.
bool selforth_scalable(const ScalableCode& c, const FormSpec& f,
                       std::uint64_t pair_guard = (1ull << 24));

bool selforth_code(const AnyCode& c, const FormSpec& f,
                   std::uint64_t pair_guard = (1ull << 24));

// GF(p)-basis of the scalar field of the given level, as elements.
std::vector<FElem> prime_field_basis(const FieldTower::Ptr& t, CodeLevel level);

} // namespace selforth
