#include "selforth/forms.hpp"

#include <map>

namespace selforth {

FormSpec canonical_form(int n) {
    FormSpec f;
    f.kind = FormSpec::Kind::canonical;
    f.n = n;
    return f;
}

FormSpec hermitian_form(int n, int frob_j) {
    FormSpec f;
    f.kind = FormSpec::Kind::hermitian;
    f.n = n;
    f.frob_j = frob_j;
    return f;
}

FormSpec table_form(const FieldTower::Ptr& t, int n, std::vector<TableEntry> entries) {
    FormSpec f;
    f.kind = FormSpec::Kind::table;
    f.n = n;
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            fail(errc::bad_range, "table coordinate out of range");
        if (e.k < 0 || e.k >= t->rm() || e.l < 0 || e.l >= t->rm())
            fail(errc::bad_range, "table Frobenius exponent out of range");
        if (e.a.tower() != t.get()) fail(errc::tower_mismatch, "table coefficient from another tower");
    }
    f.entries = std::move(entries);
    return f;
}

namespace {

const FieldTower* form_tower(const Vec& x, const Vec& y, int want) {
    if ((int)x.size() != want || (int)y.size() != want)
        fail(errc::length_mismatch, "form arity mismatch");
    if (x.empty()) fail(errc::length_mismatch, "empty vectors");
    return x[0].tower();
}

} // namespace

FElem eval_form(const FormSpec& f, const Vec& x, const Vec& y) {
    const FieldTower* tw = form_tower(x, y, f.n);
    FElem acc = FElem(tw, 0);
    switch (f.kind) {
    case FormSpec::Kind::canonical:
        for (int i = 0; i < f.n; ++i) acc += x[i] * y[i];
        break;
    case FormSpec::Kind::hermitian:
        for (int i = 0; i < f.n; ++i) acc += x[i] * y[i].frob(f.frob_j);
        break;
    case FormSpec::Kind::table:
        for (const auto& e : f.entries)
            acc += e.a * x[e.i].frob(e.k) * y[e.j].frob(e.l);
        break;
    }
    return acc;
}

InducedFormSpec induce_form(const FieldTower::Ptr& t, const FormSpec& f, int m) {
    if (m != t->m()) fail(errc::bad_range, "block count must match the tower degree");
    InducedFormSpec fi;
    fi.kind = f.kind;
    fi.block_len = f.n;
    fi.blocks = m;
    if (f.kind == FormSpec::Kind::hermitian) fi.frob_l = ((f.frob_j % t->r()) + t->r()) % t->r();
    if (f.kind == FormSpec::Kind::table) {
        const int r = t->r();
        std::map<std::tuple<int, int, int, int>, FElem> bucket;
        for (const auto& e : f.entries) {
            auto key = std::make_tuple(e.i, e.j, e.k % r, e.l % r);
            auto it = bucket.find(key);
            if (it == bucket.end()) bucket.emplace(key, e.a);
            else it->second += e.a;
        }
        for (const auto& [key, val] : bucket) {
            if (val.is_zero()) continue;
            auto [i, j, k, l] = key;
            fi.b_entries.push_back(TableEntry{i, j, k, l, val});
        }
    }
    return fi;
}

namespace {

void check_base_vectors(const Vec& x, const Vec& y) {
    for (const auto& e : x)
        if (!e.in_base()) fail(errc::bad_range, "induced form argument not GF(q)-valued");
    for (const auto& e : y)
        if (!e.in_base()) fail(errc::bad_range, "induced form argument not GF(q)-valued");
}

} // namespace

FElem eval_induced(const InducedFormSpec& fi, const Vec& x, const Vec& y) {
    const int nm = fi.block_len * fi.blocks;
    const FieldTower* tw = form_tower(x, y, nm);
    check_base_vectors(x, y);
    FElem acc = FElem(tw, 0);
    switch (fi.kind) {
    case FormSpec::Kind::canonical:
        for (int i = 0; i < nm; ++i) acc += x[i] * y[i];
        break;
    case FormSpec::Kind::hermitian:
        for (int i = 0; i < nm; ++i) acc += x[i] * y[i].frob(fi.frob_l);
        break;
    case FormSpec::Kind::table:
        for (int s = 0; s < fi.blocks; ++s) {
            const int off = s * fi.block_len;
            for (const auto& e : fi.b_entries)
                acc += e.a * x[off + e.i].frob(e.k) * y[off + e.j].frob(e.l);
        }
        break;
    }
    return acc;
}

FElem eval_induced_blocksum(const FormSpec& f, int m, const Vec& x, const Vec& y) {
    const int nm = f.n * m;
    const FieldTower* tw = form_tower(x, y, nm);
    check_base_vectors(x, y);
    FElem acc = FElem(tw, 0);
    for (int s = 0; s < m; ++s) {
        Vec xb(x.begin() + s * f.n, x.begin() + (s + 1) * f.n);
        Vec yb(y.begin() + s * f.n, y.begin() + (s + 1) * f.n);
        acc += eval_form(f, xb, yb);
    }
    return acc;
}

namespace {

void check_pair_guard(size_t count, std::uint64_t pair_guard) {
    if ((std::uint64_t)count * count > pair_guard)
        fail(errc::too_large, "pair enumeration past guard");
}

// fast path shared by the canonical / Hermitian brute-force checks:
// precompute the Frobenius twist of every word once, then test dot products
bool pairs_vanish_twisted(const std::vector<Vec>& words, const FieldTower* tw, int frob_e) {
    const size_t n = words.empty() ? 0 : words[0].size();
    const size_t cnt = words.size();
    std::vector<std::uint32_t> plain(cnt * n), twisted(cnt * n);
    for (size_t w = 0; w < cnt; ++w)
        for (size_t i = 0; i < n; ++i) {
            std::uint32_t idx = words[w][i].index();
            plain[w * n + i] = idx;
            twisted[w * n + i] = tw->frob(idx, frob_e);
        }
    for (size_t a = 0; a < cnt; ++a) {
        const std::uint32_t* xa = &plain[a * n];
        for (size_t b = 0; b < cnt; ++b) {
            const std::uint32_t* yb = &twisted[b * n];
            std::uint32_t acc = 0;
            for (size_t i = 0; i < n; ++i) acc = tw->add(acc, tw->mul(xa[i], yb[i]));
            if (acc != 0) return false;
        }
    }
    return true;
}

} // namespace

bool selforth_bruteforce(const std::vector<Vec>& words, const FormSpec& f,
                         std::uint64_t pair_guard) {
    check_pair_guard(words.size(), pair_guard);
    if (words.empty()) return true;
    const FieldTower* tw = words[0][0].tower();
    if (f.hermitian_like())
        return pairs_vanish_twisted(words, tw, f.kind == FormSpec::Kind::canonical ? 0 : f.frob_j);
    for (const auto& x : words)
        for (const auto& y : words)
            if (!eval_form(f, x, y).is_zero()) return false;
    return true;
}

bool selforth_bruteforce(const std::vector<Vec>& words, const InducedFormSpec& fi,
                         std::uint64_t pair_guard) {
    check_pair_guard(words.size(), pair_guard);
    if (words.empty()) return true;
    const FieldTower* tw = words[0][0].tower();
    if (fi.kind != FormSpec::Kind::table)
        return pairs_vanish_twisted(words, tw,
                                    fi.kind == FormSpec::Kind::canonical ? 0 : fi.frob_l);
    for (const auto& x : words)
        for (const auto& y : words)
            if (!eval_induced(fi, x, y).is_zero()) return false;
    return true;
}

std::vector<FElem> prime_field_basis(const FieldTower::Ptr& t, CodeLevel level) {
    std::vector<FElem> out;
    const int digits = level == CodeLevel::top ? t->rm() : t->r();
    std::uint64_t idx = 1;
    for (int i = 0; i < digits; ++i) {
        out.push_back(t->element((std::uint32_t)idx));
        idx *= (std::uint64_t)t->p();
    }
    return out;
}

bool selforth_linear(const LinearCode& c, const FormSpec& f) {
    if (f.n != c.n) fail(errc::length_mismatch, "form arity differs from code length");
    if (c.gens.empty()) return true;
    if (f.hermitian_like()) {
        for (const auto& x : c.gens)
            for (const auto& y : c.gens)
                if (!eval_form(f, x, y).is_zero()) return false;
        return true;
    }
    auto lambdas = prime_field_basis(c.tower, c.level);
    Mat span;
    span.reserve(c.gens.size() * lambdas.size());
    for (const auto& g : c.gens)
        for (const auto& lam : lambdas) {
            Vec v(c.n, c.tower->zero());
            for (int i = 0; i < c.n; ++i) v[i] = lam * g[i];
            span.push_back(std::move(v));
        }
    for (const auto& x : span)
        for (const auto& y : span)
            if (!eval_form(f, x, y).is_zero()) return false;
    return true;
}

bool selforth_scalable(const ScalableCode& c, const FormSpec& f, std::uint64_t pair_guard) {
    if (f.n != c.n) fail(errc::length_mismatch, "form arity differs from code length");
    auto words = codewords(c, pair_guard);
    return selforth_bruteforce(words, f, pair_guard);
}

bool selforth_code(const AnyCode& c, const FormSpec& f, std::uint64_t pair_guard) {
    if (std::holds_alternative<LinearCode>(c))
        return selforth_linear(std::get<LinearCode>(c), f);
    return selforth_scalable(std::get<ScalableCode>(c), f, pair_guard);
}

} // namespace selforth
