#include "selforth/ff.hpp"

#include <algorithm>
#include <sstream>

namespace selforth {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_zero: return "DegreeZero";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::tower_mismatch: return "TowerMismatch";
    case errc::wrong_count: return "WrongCount";
    case errc::not_a_basis: return "NotABasis";
    case errc::too_large: return "TooLarge";
    case errc::bad_range: return "BadRange";
    case errc::not_coprime: return "NotCoprime";
    case errc::empty_code: return "EmptyCode";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::bad_set: return "BadSet";
    case errc::condition_not_met: return "ConditionNotMet";
    case errc::non_consecutive_s: return "NonConsecutiveS";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr std::uint64_t kMaxTower = 1u << 26;  // hard desk-scale cap
constexpr std::uint32_t kMaxLogs = 1u << 20;   // discrete-log table cap
constexpr std::uint32_t kMaxInner = 1u << 10;  // middle field cap (dense tables)

std::uint64_t checked_pow(std::uint64_t b, int e, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / b) fail(errc::too_large, "field exceeds desk scale");
        v *= b;
    }
    return v;
}

// ---- GF(p) polynomial helpers (coefficients 0..p-1, constant first) ----

using PolyP = std::vector<long long>;

int deg(const PolyP& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

PolyP polyp_mod(PolyP a, const PolyP& f, long long p) {
    int df = deg(f);
    long long lead_inv = 1;
    for (long long t = 1; t < p; ++t)
        if (t * f[df] % p == 1) { lead_inv = t; break; }
    for (int i = deg(a); i >= df; --i) {
        if (a[i] == 0) continue;
        long long c = a[i] * lead_inv % p;
        for (int j = 0; j <= df; ++j)
            a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p) % p;
    }
    a.resize(df > 0 ? df : 1, 0);
    return a;
}

PolyP polyp_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, long long p) {
    PolyP c(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return polyp_mod(std::move(c), f, p);
}

bool polyp_irreducible(const PolyP& f, long long p) {
    int d = deg(f);
    if (d <= 1) return d == 1;
    // exhaustive trial division by monic polynomials of degree 1..d/2
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= (std::uint64_t)p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            PolyP g(dd + 1, 0);
            std::uint64_t e = enc;
            for (int i = 0; i < dd; ++i) { g[i] = (long long)(e % p); e /= p; }
            g[dd] = 1;
            if (deg(polyp_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

// ---- FieldTower ----

FieldTower::Ptr FieldTower::make(long long p, const std::vector<long long>& inner_modulus,
                                 const std::vector<std::uint32_t>& outer_modulus) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (inner_modulus.size() < 2) fail(errc::degree_zero, "inner modulus must have degree >= 1");
    if (outer_modulus.size() < 2) fail(errc::degree_zero, "outer modulus must have degree >= 1");
    if (inner_modulus.back() != 1) fail(errc::bad_range, "inner modulus must be monic");
    for (long long c : inner_modulus)
        if (c < 0 || c >= p) fail(errc::bad_range, "inner modulus coefficient out of range");

    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->p_ = p;
    t->r_ = (int)inner_modulus.size() - 1;
    t->m_ = (int)outer_modulus.size() - 1;
    t->inner_mod_ = inner_modulus;
    t->outer_mod_ = outer_modulus;
    t->q_ = (std::uint32_t)checked_pow((std::uint64_t)p, t->r_, kMaxInner);
    t->size_ = (std::uint32_t)checked_pow(t->q_, t->m_, kMaxTower);

    if (outer_modulus.back() != 1) fail(errc::bad_range, "outer modulus must be monic");
    for (std::uint32_t c : outer_modulus)
        if (c >= t->q_) fail(errc::bad_range, "outer modulus coefficient out of range");

    if (!polyp_irreducible(inner_modulus, p))
        fail(errc::reducible_modulus, "inner modulus factors over GF(p)");

    t->build();
    return t;
}

FieldTower::Ptr FieldTower::make_default(long long p, int r, int m) {
    auto [inner, outer] = default_moduli(p, r, m);
    return make(p, inner, outer);
}

void FieldTower::build() {
    const std::uint32_t q = q_;
    const std::uint32_t N = size_;

    // middle field GF(q): dense add/mul tables from polynomial arithmetic
    inner_add_.assign((size_t)q * q, 0);
    inner_mul_.assign((size_t)q * q, 0);
    inner_neg_.assign(q, 0);
    inner_inv_.assign(q, 0);
    auto unpack = [&](std::uint32_t a) {
        PolyP f(r_, 0);
        for (int i = 0; i < r_; ++i) { f[i] = (long long)(a % p_); a /= (std::uint32_t)p_; }
        return f;
    };
    auto pack = [&](const PolyP& f) {
        std::uint32_t v = 0;
        for (int i = r_ - 1; i >= 0; --i) v = v * (std::uint32_t)p_ + (std::uint32_t)f[i];
        return v;
    };
    for (std::uint32_t a = 0; a < q; ++a) {
        PolyP fa = unpack(a);
        PolyP na(r_);
        for (int i = 0; i < r_; ++i) na[i] = (p_ - fa[i]) % p_;
        inner_neg_[a] = pack(na);
        for (std::uint32_t b = a; b < q; ++b) {
            PolyP fb = unpack(b);
            PolyP s(r_);
            for (int i = 0; i < r_; ++i) s[i] = (fa[i] + fb[i]) % p_;
            inner_add_[(size_t)a * q + b] = inner_add_[(size_t)b * q + a] = pack(s);
            std::uint32_t prod = pack(polyp_mulmod(fa, fb, inner_mod_, p_));
            inner_mul_[(size_t)a * q + b] = inner_mul_[(size_t)b * q + a] = prod;
            if (prod == 1) { inner_inv_[a] = b; inner_inv_[b] = a; }
        }
    }

    // outer modulus irreducibility by trial division over GF(q)
    {
        auto outer_mod_rem = [&](std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& g) {
            int dg = (int)g.size() - 1;
            for (int i = (int)a.size() - 1; i >= dg; --i) {
                std::uint32_t c = a[i]; // divisors are monic
                if (c == 0) continue;
                for (int j = 0; j <= dg; ++j) {
                    std::uint32_t t = inner_mul((std::uint32_t)c, g[j]);
                    a[i - dg + j] = inner_add(a[i - dg + j], inner_neg_[t]);
                }
            }
            for (int i = dg - 1; i >= 0; --i)
                if (a[i] != 0) return false;
            return true; // divides exactly
        };
        if (m_ > 1) {
            for (int dd = 1; 2 * dd <= m_; ++dd) {
                std::uint64_t count = 1;
                for (int i = 0; i < dd; ++i) count *= q;
                for (std::uint64_t enc = 0; enc < count; ++enc) {
                    std::vector<std::uint32_t> g(dd + 1, 0);
                    std::uint64_t e = enc;
                    for (int i = 0; i < dd; ++i) { g[i] = (std::uint32_t)(e % q); e /= q; }
                    g[dd] = 1;
                    if (outer_mod_rem(outer_mod_, g))
                        fail(errc::reducible_modulus, "outer modulus factors over GF(q)");
                }
            }
        }
    }

    // prime factors of the multiplicative group order
    {
        std::uint64_t n = N - 1;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                order_factors_.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) order_factors_.push_back(n);
    }

    // primitive element: first index of full multiplicative order
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t acc = 1;
        while (e) {
            if (e & 1) acc = poly_mul_outer(acc, a);
            a = poly_mul_outer(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint32_t cand = 2; cand < N; ++cand) {
        bool ok = true;
        for (std::uint64_t f : order_factors_) {
            if (slow_pow(cand, (N - 1) / f) == 1) { ok = false; break; }
        }
        if (ok) { primitive_ = cand; break; }
    }
    if (primitive_ == 0 && N == 2) primitive_ = 1;
    if (primitive_ == 0) fail(errc::internal, "no primitive element found");

    ppow_mod_.assign(rm(), 0);
    std::uint64_t pw = 1 % (N - 1 == 0 ? 1 : N - 1);
    for (int j = 0; j < rm(); ++j) {
        ppow_mod_[j] = pw;
        pw = (pw * (std::uint64_t)p_) % (N - 1);
    }

    if (N <= kMaxLogs) {
        have_logs_ = true;
        exp_.assign(N - 1, 0);
        log_.assign(N, 0);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < N - 1; ++i) {
            exp_[i] = v;
            log_[v] = i;
            v = poly_mul_outer(v, primitive_);
        }
        if (v != 1) fail(errc::internal, "primitive order check failed");
        zech_tbl_.assign(N - 1, kZechZero);
        for (std::uint32_t k = 0; k < N - 1; ++k) {
            // digit-wise 1 + a^k
            std::uint32_t a = exp_[k], s = 0, mul10 = 1;
            std::uint32_t tmp = a;
            for (int d = 0; d < m_; ++d) {
                std::uint32_t dig = tmp % q;
                tmp /= q;
                if (d == 0) dig = inner_add(dig, 1);
                s += dig * mul10;
                mul10 *= q;
            }
            zech_tbl_[k] = (s == 0) ? kZechZero : log_[s];
        }
        trace_tbl_.assign(N, 0);
        for (std::uint32_t a = 0; a < N; ++a) {
            std::uint32_t acc = 0;
            for (int w = 0; w < m_; ++w) {
                std::uint32_t c = frob(a, r_ * w);
                // digit-wise add (trace table is built once)
                std::uint32_t s = 0, mul10 = 1, x = acc, y = c;
                for (int d = 0; d < m_; ++d) {
                    s += inner_add(x % q, y % q) * mul10;
                    x /= q; y /= q; mul10 *= q;
                }
                acc = s;
            }
            trace_tbl_[a] = acc;
        }
    }
}

std::uint32_t FieldTower::poly_mul_outer(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<std::uint32_t> fa(m_, 0), fb(m_, 0), c(2 * m_, 0);
    for (int i = 0; i < m_; ++i) { fa[i] = a % q_; a /= q_; }
    for (int i = 0; i < m_; ++i) { fb[i] = b % q_; b /= q_; }
    for (int i = 0; i < m_; ++i) {
        if (fa[i] == 0) continue;
        for (int j = 0; j < m_; ++j)
            c[i + j] = inner_add(c[i + j], inner_mul(fa[i], fb[j]));
    }
    for (int i = 2 * m_ - 1; i >= m_; --i) {
        std::uint32_t coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (int j = 0; j < m_; ++j) {
            std::uint32_t t = inner_mul(coef, outer_mod_[j]);
            c[i - m_ + j] = inner_add(c[i - m_ + j], inner_neg_[t]);
        }
    }
    std::uint32_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * q_ + c[i];
    return v;
}

std::uint32_t FieldTower::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b; // digits never carry: q is a power of two
    if (a == 0) return b;
    if (b == 0) return a;
    if (have_logs_) {
        std::uint32_t la = log_[a], lb = log_[b];
        std::uint32_t d = lb >= la ? lb - la : lb + (size_ - 1) - la;
        std::uint32_t z = zech_tbl_[d];
        if (z == kZechZero) return 0;
        std::uint32_t s = la + z;
        if (s >= size_ - 1) s -= size_ - 1;
        return exp_[s];
    }
    std::uint32_t s = 0, mul10 = 1;
    for (int d = 0; d < m_; ++d) {
        s += inner_add(a % q_, b % q_) * mul10;
        a /= q_; b /= q_; mul10 *= q_;
    }
    return s;
}

std::uint32_t FieldTower::neg(std::uint32_t a) const {
    if (p_ == 2 || a == 0) return a;
    std::uint32_t s = 0, mul10 = 1;
    for (int d = 0; d < m_; ++d) {
        s += inner_neg_[a % q_] * mul10;
        a /= q_; mul10 *= q_;
    }
    return s;
}

std::uint32_t FieldTower::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!have_logs_) return poly_mul_outer(a, b);
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
}

std::uint32_t FieldTower::inv(std::uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (!have_logs_) return pow(a, (long long)size_ - 2);
    std::uint32_t la = log_[a];
    return exp_[la == 0 ? 0 : size_ - 1 - la];
}

std::uint32_t FieldTower::div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
}

std::uint32_t FieldTower::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) fail(errc::division_by_zero, "negative power of zero");
        return 0;
    }
    long long ord = (long long)size_ - 1;
    long long er = ((e % ord) + ord) % ord;
    if (have_logs_) {
        std::uint64_t le = ((std::uint64_t)log_[a] * (std::uint64_t)er) % (std::uint64_t)ord;
        return exp_[le];
    }
    std::uint32_t acc = 1, base = a;
    std::uint64_t ee = (std::uint64_t)er;
    while (ee) {
        if (ee & 1) acc = poly_mul_outer(acc, base);
        base = poly_mul_outer(base, base);
        ee >>= 1;
    }
    return acc;
}

std::uint32_t FieldTower::frob(std::uint32_t a, int j) const {
    if (a == 0) return 0;
    int jj = ((j % rm()) + rm()) % rm();
    if (jj == 0) return a;
    if (have_logs_) {
        std::uint64_t le = ((std::uint64_t)log_[a] * ppow_mod_[jj]) % (std::uint64_t)(size_ - 1);
        return exp_[le];
    }
    return pow(a, (long long)ppow_mod_[jj]);
}

std::uint32_t FieldTower::trace_rel(std::uint32_t a) const {
    if (have_logs_) return trace_tbl_[a];
    std::uint32_t acc = 0;
    for (int w = 0; w < m_; ++w) acc = add(acc, frob(a, r_ * w));
    return acc;
}

FElem FieldTower::trace_rel(const FElem& a) const {
    if (a.tower() != this) fail(errc::tower_mismatch, "trace of foreign element");
    return FElem(this, trace_rel(a.index()));
}

std::uint32_t FieldTower::log(std::uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "discrete log of zero");
    if (!have_logs_) fail(errc::too_large, "no log tables for this field size");
    return log_[a];
}

std::uint32_t FieldTower::order_of(std::uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "order of zero");
    std::uint64_t o = size_ - 1;
    for (std::uint64_t f : order_factors_)
        while (o % f == 0 && pow(a, (long long)(o / f)) == 1) o /= f;
    return (std::uint32_t)o;
}

FElem FieldTower::element(std::uint32_t idx) const {
    if (idx >= size_) fail(errc::bad_range, "element index out of range");
    return FElem(this, idx);
}

FElem FieldTower::from_power(long long k) const {
    return FElem(this, pow(primitive_, k));
}

FElem FieldTower::from_coords(const std::vector<std::uint32_t>& coords) const {
    if ((int)coords.size() > m_) fail(errc::bad_range, "too many coordinates");
    std::uint32_t v = 0;
    for (int i = (int)coords.size() - 1; i >= 0; --i) {
        if (coords[i] >= q_) fail(errc::bad_range, "coordinate out of range");
        v = v * q_ + coords[i];
    }
    return FElem(this, v);
}

std::vector<std::uint32_t> FieldTower::coords(std::uint32_t idx) const {
    std::vector<std::uint32_t> c(m_);
    for (int i = 0; i < m_; ++i) { c[i] = idx % q_; idx /= q_; }
    return c;
}

std::vector<std::vector<long long>> FieldTower::coeff_vectors(std::uint32_t idx) const {
    std::vector<std::vector<long long>> out(m_);
    for (int i = 0; i < m_; ++i) {
        std::uint32_t c = idx % q_;
        idx /= q_;
        out[i].resize(r_);
        for (int j = 0; j < r_; ++j) { out[i][j] = (long long)(c % p_); c /= (std::uint32_t)p_; }
    }
    return out;
}

std::string FieldTower::elem_str(std::uint32_t idx) const {
    if (idx == 0) return "0";
    if (idx == 1) return "1";
    if (have_logs_) {
        std::ostringstream os;
        os << "a^" << log_[idx];
        return os.str();
    }
    std::ostringstream os;
    auto c = coords(idx);
    os << "[";
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

// ---- FElem ----

namespace {
const FieldTower* same_tower(const FElem& a, const FElem& b) {
    if (a.tower() == nullptr || a.tower() != b.tower())
        fail(errc::tower_mismatch, "operands from different towers");
    return a.tower();
}
} // namespace

FElem FElem::operator+(const FElem& o) const {
    const FieldTower* t = same_tower(*this, o);
    return FElem(t, t->add(idx_, o.idx_));
}
FElem FElem::operator-(const FElem& o) const {
    const FieldTower* t = same_tower(*this, o);
    return FElem(t, t->sub(idx_, o.idx_));
}
FElem FElem::operator*(const FElem& o) const {
    const FieldTower* t = same_tower(*this, o);
    return FElem(t, t->mul(idx_, o.idx_));
}
FElem FElem::operator/(const FElem& o) const {
    const FieldTower* t = same_tower(*this, o);
    return FElem(t, t->div(idx_, o.idx_));
}
FElem FElem::operator-() const { return FElem(tw_, tw_->neg(idx_)); }
FElem FElem::inv() const { return FElem(tw_, tw_->inv(idx_)); }
FElem FElem::frob(int j) const { return FElem(tw_, tw_->frob(idx_, j)); }
FElem FElem::pow(long long e) const { return FElem(tw_, tw_->pow(idx_, e)); }
bool FElem::in_base() const { return tw_->in_base(idx_); }
std::string FElem::str() const { return tw_ ? tw_->elem_str(idx_) : "<null>"; }

// ---- default moduli ----

namespace {

std::vector<long long> first_irreducible_p(long long p, int d) {
    if (d == 1) return {0, 1}; // x
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= (std::uint64_t)p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        PolyP f(d + 1, 0);
        std::uint64_t e = enc;
        for (int i = 0; i < d; ++i) { f[i] = (long long)(e % p); e /= p; }
        f[d] = 1;
        if (polyp_irreducible(f, p)) return f;
    }
    fail(errc::internal, "no irreducible polynomial found");
}

// first monic irreducible of degree m over GF(q), searched via a throwaway
// tower with outer degree 1
std::vector<std::uint32_t> first_irreducible_q(long long p, const std::vector<long long>& inner, int m) {
    if (m == 1) return {0, 1};
    auto probe = FieldTower::make(p, inner, {0, 1});
    std::uint32_t q = probe->q();
    auto divides = [&](const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g) {
        // remainder of f by monic g over GF(q)
        std::vector<std::uint32_t> a = f;
        int dg = (int)g.size() - 1;
        for (int i = (int)a.size() - 1; i >= dg; --i) {
            std::uint32_t c = a[i];
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j) {
                std::uint32_t t = probe->inner_mul(c, g[j]);
                a[i - dg + j] = probe->inner_add(a[i - dg + j], probe->neg(t));
            }
        }
        for (int i = dg - 1; i >= 0; --i)
            if (a[i] != 0) return false;
        return true;
    };
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= q;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<std::uint32_t> f(m + 1, 0);
        std::uint64_t e = enc;
        for (int i = 0; i < m; ++i) { f[i] = (std::uint32_t)(e % q); e /= q; }
        f[m] = 1;
        bool red = false;
        for (int dd = 1; 2 * dd <= m && !red; ++dd) {
            std::uint64_t gcount = 1;
            for (int i = 0; i < dd; ++i) gcount *= q;
            for (std::uint64_t genc = 0; genc < gcount && !red; ++genc) {
                std::vector<std::uint32_t> g(dd + 1, 0);
                std::uint64_t ge = genc;
                for (int i = 0; i < dd; ++i) { g[i] = (std::uint32_t)(ge % q); ge /= q; }
                g[dd] = 1;
                if (divides(f, g)) red = true;
            }
        }
        if (!red) return f;
    }
    fail(errc::internal, "no irreducible polynomial found");
}

} // namespace

std::pair<std::vector<long long>, std::vector<std::uint32_t>>
default_moduli(long long p, int r, int m) {
    std::vector<long long> inner =
        (p == 2 && r == 2) ? std::vector<long long>{1, 1, 1} : first_irreducible_p(p, r);

    std::vector<std::uint32_t> outer;
    if (p == 2 && r == 1 && m == 2) outer = {1, 1, 1};                   // x^2+x+1
    else if (p == 3 && r == 1 && m == 2) outer = {2, 1, 1};              // x^2+x+2
    else if (p == 2 && r == 1 && m == 6) outer = {1, 1, 0, 0, 0, 0, 1};  // x^6+x+1
    else if (p == 2 && r == 2 && m == 3) outer = {2, 3, 1, 1};           // min poly over GF(4) of a root of x^6+x+1
    else outer = first_irreducible_q(p, inner, m);
    return {inner, outer};
}

} // namespace selforth
