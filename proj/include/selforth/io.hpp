#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "selforth/criteria.hpp"
#include "selforth/quantum.hpp"

namespace selforth {

using nlohmann::json;

// Element notation: "0", "1", "a", "a^k" with a the tower primitive;
// JSON arrays give coordinates (outer entries are inner indices or GF(p)
// digit lists, constant term first). errc::parse_error on bad syntax.
FElem parse_elem(const FieldTower::Ptr& t, const std::string& s);
FElem elem_from_json(const FieldTower::Ptr& t, const json& j);

// Field block: {p, r, m} picks stock moduli; explicit "inner_modulus" /
// "outer_modulus" (coefficient lists, constant term first) override them.
FieldTower::Ptr tower_from_json(const json& j);

struct ParsedBasis {
    Basis given;      // as listed
    bool is_dual;     // list is the trace-dual carrier B'
    Basis imaging() const { return is_dual ? dual_basis(given) : given; }
    Basis dual() const { return is_dual ? given : dual_basis(given); }
};

ParsedBasis basis_from_json(const FieldTower::Ptr& t, const json& j);

struct ParsedCode {
    std::optional<CyclicCode> cyclic; // populated for kind "cyclic"
    AnyCode code;                     // cyclic codes arrive as their generator matrix
};

ParsedCode code_from_json(const FieldTower::Ptr& t, const json& j);

// {variant: canonical} | {variant: hermitian, k, l} or {variant: hermitian, j}
// | {variant: table, entries: [[i, j, k, l, elem], ...]} (1-based i, j).
FormSpec form_from_json(const FieldTower::Ptr& t, int n, const json& j);

json verdict_record(const FieldTower::Ptr& t, const Verdict& v);
json quantum_record(const QuantumParams& qp);
json profile_record(const FieldTower::Ptr& t, const PowerSumProfile& prof);

} // namespace selforth
