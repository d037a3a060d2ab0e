#include "selforth/io.hpp"

namespace selforth {

FElem parse_elem(const FieldTower::Ptr& t, const std::string& s) {
    std::string v;
    for (char c : s)
        if (!isspace((unsigned char)c)) v.push_back(c);
    if (v == "0") return t->zero();
    if (v == "1") return t->one();
    if (v == "a") return t->primitive();
    if (v.rfind("a^", 0) == 0) {
        try {
            size_t pos = 0;
            long long k = std::stoll(v.substr(2), &pos);
            if (pos == v.size() - 2) return t->from_power(k);
        } catch (const std::exception&) {
        }
    }
    fail(errc::parse_error, "bad element '" + s + "' (want 0, 1, a or a^k)");
}

namespace {

std::uint32_t inner_index_from_json(const FieldTower::Ptr& t, const json& j) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0 || v >= (long long)t->q()) fail(errc::parse_error, "inner index out of range");
        return (std::uint32_t)v;
    }
    if (j.is_array()) { // GF(p) digits, constant first
        if ((int)j.size() > t->r()) fail(errc::parse_error, "too many inner digits");
        std::uint32_t v = 0;
        for (int i = (int)j.size() - 1; i >= 0; --i) {
            long long d = j[i].get<long long>();
            if (d < 0 || d >= t->p()) fail(errc::parse_error, "digit out of range");
            v = v * (std::uint32_t)t->p() + (std::uint32_t)d;
        }
        return v;
    }
    fail(errc::parse_error, "inner coefficient must be an integer or digit list");
}

} // namespace

FElem elem_from_json(const FieldTower::Ptr& t, const json& j) {
    if (j.is_string()) return parse_elem(t, j.get<std::string>());
    if (j.is_array()) {
        std::vector<std::uint32_t> coords;
        for (const auto& c : j) coords.push_back(inner_index_from_json(t, c));
        return t->from_coords(coords);
    }
    if (j.is_number_integer()) { // single base-field value
        return t->from_coords({inner_index_from_json(t, j)});
    }
    fail(errc::parse_error, "bad element value");
}

FieldTower::Ptr tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p")) fail(errc::parse_error, "field block needs p");
    long long p = j.at("p").get<long long>();
    int r = j.contains("inner_modulus") ? (int)j.at("inner_modulus").size() - 1 : j.value("r", 1);
    int m = j.contains("outer_modulus") ? (int)j.at("outer_modulus").size() - 1 : j.value("m", 1);
    if (j.contains("r") && j.at("r").get<int>() != r)
        fail(errc::parse_error, "r disagrees with inner modulus degree");
    if (j.contains("m") && j.at("m").get<int>() != m)
        fail(errc::parse_error, "m disagrees with outer modulus degree");

    auto [inner, outer] = default_moduli(p, r, m);
    if (j.contains("inner_modulus")) {
        inner.clear();
        for (const auto& c : j.at("inner_modulus")) inner.push_back(c.get<long long>());
    }
    if (j.contains("outer_modulus")) {
        // probe tower for packing the GF(q)-valued coefficients
        auto probe = FieldTower::make(p, inner, {0, 1});
        outer.clear();
        for (const auto& c : j.at("outer_modulus")) outer.push_back(inner_index_from_json(probe, c));
    }
    return FieldTower::make(p, inner, outer);
}

ParsedBasis basis_from_json(const FieldTower::Ptr& t, const json& j) {
    ParsedBasis out;
    out.is_dual = false;
    const json* elems = nullptr;
    if (j.is_array()) {
        elems = &j;
    } else if (j.is_object()) {
        if (!j.contains("elems")) fail(errc::parse_error, "basis block needs elems");
        elems = &j.at("elems");
        out.is_dual = j.value("dual", false);
    } else {
        fail(errc::parse_error, "bad basis block");
    }
    for (const auto& e : *elems) out.given.elems.push_back(elem_from_json(t, e));
    if (!is_basis(out.given.elems)) fail(errc::not_a_basis, "listed elements are dependent");
    return out;
}

ParsedCode code_from_json(const FieldTower::Ptr& t, const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(errc::parse_error, "code block needs kind");
    std::string kind = j.at("kind").get<std::string>();
    ParsedCode out;
    if (kind == "cyclic") {
        int n = j.at("n").get<int>();
        std::vector<int> zeros;
        if (j.contains("zeros")) {
            for (const auto& z : j.at("zeros")) zeros.push_back(z.get<int>());
        } else if (j.contains("nonzeros")) {
            std::set<int> nz;
            for (const auto& z : j.at("nonzeros")) nz.insert(z.get<int>());
            for (int i = 0; i < n; ++i)
                if (!nz.count(i)) zeros.push_back(i);
        } else {
            fail(errc::parse_error, "cyclic block needs zeros or nonzeros");
        }
        out.cyclic = make_cyclic(t, n, zeros);
        out.code = cyclic_to_linear(*out.cyclic);
        return out;
    }
    if (kind == "linear" || kind == "scalable") {
        const char* key = kind == "linear" ? "gens" : "reps";
        if (!j.contains(key)) fail(errc::parse_error, std::string("code block needs ") + key);
        Mat rows;
        for (const auto& row : j.at(key)) {
            Vec v;
            for (const auto& e : row) v.push_back(elem_from_json(t, e));
            rows.push_back(std::move(v));
        }
        int n = j.contains("n") ? j.at("n").get<int>()
                                : (rows.empty() ? 0 : (int)rows[0].size());
        if (kind == "linear")
            out.code = make_linear(t, CodeLevel::top, n, std::move(rows));
        else
            out.code = make_scalable(t, CodeLevel::top, n, std::move(rows));
        return out;
    }
    fail(errc::parse_error, "unknown code kind '" + kind + "'");
}

FormSpec form_from_json(const FieldTower::Ptr& t, int n, const json& j) {
    if (j.is_null()) return canonical_form(n);
    if (!j.is_object() || !j.contains("variant")) fail(errc::parse_error, "form block needs variant");
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "canonical") return canonical_form(n);
    if (variant == "hermitian") {
        int fj;
        if (j.contains("j")) {
            fj = j.at("j").get<int>();
        } else {
            int k = j.value("k", 0), l = j.value("l", 0);
            if (l < 0 || l >= t->r() || k < 0 || k >= t->m())
                fail(errc::bad_range, "need 0 <= l < r and 0 <= k < m");
            fj = l + t->r() * k;
        }
        return hermitian_form(n, ((fj % t->rm()) + t->rm()) % t->rm());
    }
    if (variant == "table") {
        std::vector<TableEntry> entries;
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 5)
                fail(errc::parse_error, "table entry is [i,j,k,l,elem]");
            TableEntry te;
            te.i = e[0].get<int>() - 1; // 1-based on the wire
            te.j = e[1].get<int>() - 1;
            te.k = e[2].get<int>();
            te.l = e[3].get<int>();
            te.a = elem_from_json(t, e[4]);
            entries.push_back(te);
        }
        return table_form(t, n, std::move(entries));
    }
    fail(errc::parse_error, "unknown form variant '" + variant + "'");
}

json verdict_record(const FieldTower::Ptr& t, const Verdict& v) {
    json rec;
    rec["schema"] = "selforth.verdict/1";
    rec["mode"] = v.image_mode ? "image" : "trace";
    rec["overall"] = v.overall;
    if (v.imaging_basis) {
        rec["basis"] = v.imaging_basis->strs();
        rec["dual_basis"] = dual_basis(*v.imaging_basis).strs();
    }
    json evid = json::array();
    for (const auto& ev : v.evidence) {
        json e;
        e["k"] = ev.k;
        if (ev.l >= 0) e["l"] = ev.l;
        if (ev.w >= 0) e["w"] = ev.w;
        e["frobenius_index"] = ev.frob_j;
        e["exponent"] = "1+" + std::to_string(t->p()) + "^" + std::to_string(ev.frob_j);
        if (ev.power_sum) e["power_sum"] = ev.power_sum->str();
        e["check"] = ev.check == Evidence::Check::skipped
                         ? "skipped"
                         : (ev.check == Evidence::Check::passed ? "passed" : "failed");
        evid.push_back(std::move(e));
    }
    rec["evidence"] = std::move(evid);
    return rec;
}

json quantum_record(const QuantumParams& qp) {
    json rec;
    rec["schema"] = "selforth.quantum/1";
    rec["m"] = qp.m;
    rec["n0"] = qp.n0;
    rec["n"] = qp.n_q;
    rec["k"] = qp.k_q;
    rec["d"] = qp.d_q;
    rec["d_exact"] = qp.d_exact;
    rec["S"] = qp.S;
    rec["basis"] = qp.basis_label;
    if (!qp.basis_elems.empty()) rec["dual_basis"] = qp.basis_elems;
    rec["gated_exponents"] = qp.gated_exponents;
    rec["vanishing_exponents"] = qp.vanishing_exponents;
    rec["trace_selforth"] = qp.trace_selforth;
    return rec;
}

json profile_record(const FieldTower::Ptr& t, const PowerSumProfile& prof) {
    json rec;
    rec["schema"] = "selforth.powersums/1";
    rec["dual_basis"] = prof.dual.strs();
    json sums = json::array();
    for (int j = 0; j < (int)prof.sums.size(); ++j) {
        json s;
        s["frobenius_index"] = j;
        s["exponent"] = "1+" + std::to_string(t->p()) + "^" + std::to_string(j);
        s["value"] = prof.sums[j].str();
        s["zero"] = prof.sums[j].is_zero();
        sums.push_back(std::move(s));
    }
    rec["sums"] = std::move(sums);
    return rec;
}

} // namespace selforth
