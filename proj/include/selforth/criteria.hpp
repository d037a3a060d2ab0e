#pragma once

#include <optional>
#include <string>

#include "selforth/forms.hpp"

namespace selforth {

// One gated condition of a self-orthogonality criterion: the power sum of
// the dual basis at Frobenius index frob_j, and whether the matching
// conjugate form was checked on the code (or skipped because the sum
// vanishes).
struct Evidence {
    int k = -1, l = -1, w = -1;       // (k,l,w) for table forms; k for Hermitian
    int frob_j = 0;                   // conjugate exponent p^frob_j
    std::optional<FElem> power_sum;   // absent in trace mode
    enum class Check { skipped, passed, failed } check = Check::skipped;
};

struct Verdict {
    bool overall = false;
    bool image_mode = false;
    std::optional<Basis> imaging_basis;
    std::vector<Evidence> evidence;
};

// Image criterion for the induced Hermitian-type product sum x_t y_t^(p^l):
// for each k < m the code must be self-orthogonal w.r.t. sum x_i y_i^(p^l q^k)
// unless the dual-basis power sum at that exponent vanishes.
// errc::bad_range unless 0 <= l < r; errc::tower_mismatch.
Verdict image_selforth_hermitian(const AnyCode& c, const Basis& b, int l);

// Trace criterion: all m conjugate products must vanish, no gating.
Verdict trace_selforth_hermitian(const AnyCode& c, int l);

// General biadditive criteria through the folded b-table: conditions run
// over (k, l, w) in [0,r)^2 x [0,m) with conjugate exponent p^(l-k) q^w.
Verdict image_selforth_general(const AnyCode& c, const Basis& b, const FormSpec& table);
Verdict trace_selforth_general(const AnyCode& c, const FormSpec& table);

// Special-shape answers for the canonical inner product. `equivalence`
// shortcuts decide the image verdict outright; one-sided shortcuts only
// force a negative verdict when the code itself is not self-orthogonal.
struct ShortcutVerdict {
    std::string rule;
    bool equivalence = false;
    bool code_selforth = false;
    std::optional<bool> image_verdict; // absent when inconclusive
};

std::optional<ShortcutVerdict> shortcut_verdict(const AnyCode& c, const Basis& b,
                                                const FormSpec& f);

struct AllBasesRow {
    Basis basis;
    bool image_ok = false;
};

struct AllBasesReport {
    std::vector<AllBasesRow> rows;
    bool all_bases = false;
    bool some_basis = false;
    bool trace_ok = false;
    bool q2m2_exception = false; // image holds for every basis yet the trace fails
};

// Exhaustive per-basis image verdicts plus the trace verdict. Outside the
// q = m = 2 shape the two aggregate answers provably coincide and the
// report enforces it. errc::too_large via basis enumeration.
AllBasesReport all_bases_report(const AnyCode& c, const FormSpec& f);

} // namespace selforth
