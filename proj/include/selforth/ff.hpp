#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "selforth/errors.hpp"

namespace selforth {

class FieldTower;

// Value-semantic element of the top field GF(q^m) of a tower. Elements of
// the middle field GF(q) are the constants (index < q). The tower must
// outlive its elements.
class FElem {
public:
    FElem() : tw_(nullptr), idx_(0) {}
    FElem(const FieldTower* tw, std::uint32_t idx) : tw_(tw), idx_(idx) {}

    const FieldTower* tower() const { return tw_; }
    std::uint32_t index() const { return idx_; }

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    FElem operator+(const FElem& o) const;
    FElem operator-(const FElem& o) const;
    FElem operator*(const FElem& o) const;
    FElem operator/(const FElem& o) const; // errc::division_by_zero
    FElem operator-() const;
    FElem inv() const;                     // errc::division_by_zero

    FElem& operator+=(const FElem& o) { return *this = *this + o; }
    FElem& operator-=(const FElem& o) { return *this = *this - o; }
    FElem& operator*=(const FElem& o) { return *this = *this * o; }

    bool operator==(const FElem& o) const { return tw_ == o.tw_ && idx_ == o.idx_; }
    bool operator!=(const FElem& o) const { return !(*this == o); }

    FElem frob(int j) const;       // a^(p^j), j taken mod rm
    FElem pow(long long e) const;
    bool in_base() const;          // fixed by frob(r), i.e. lies in GF(q)
    std::string str() const;       // "0", "1" or "a^k" with a the tower primitive

private:
    const FieldTower* tw_;
    std::uint32_t idx_;
};

// The extension chain GF(p) < GF(q = p^r) < GF(q^m). Immutable after
// construction; all element operations are pure, so a tower may be shared
// freely between threads.
//
// Elements are packed indices: an element of GF(q^m) is a polynomial
// c_0 + c_1 y + ... + c_{m-1} y^{m-1} with c_i in GF(q), stored as
// sum c_i q^i where each c_i is itself packed base p. Index 0 is zero and
// index 1 is one. Multiplication runs on discrete logs; addition uses a
// Zech-log table for fields with at most 2^20 elements and falls back to
// digit arithmetic above that.
class FieldTower {
public:
    using Ptr = std::shared_ptr<const FieldTower>;

    // inner_modulus: monic irreducible of degree r over GF(p), constant first.
    // outer_modulus: monic irreducible of degree m over GF(q), coefficients as
    // packed inner indices, constant first.
    // Throws errc::{not_prime, degree_zero, reducible_modulus, bad_range, too_large}.
    static Ptr make(long long p, const std::vector<long long>& inner_modulus,
                    const std::vector<std::uint32_t>& outer_modulus);

    // Tower with the stock moduli for the requested shape (see default_moduli).
    static Ptr make_default(long long p, int r, int m);

    long long p() const { return p_; }
    int r() const { return r_; }
    int m() const { return m_; }
    int rm() const { return r_ * m_; }
    std::uint32_t q() const { return q_; }        // p^r
    std::uint32_t size() const { return size_; }  // q^m
    const std::vector<long long>& inner_modulus() const { return inner_mod_; }
    const std::vector<std::uint32_t>& outer_modulus() const { return outer_mod_; }

    FElem zero() const { return FElem(this, 0); }
    FElem one() const { return FElem(this, 1); }
    FElem primitive() const { return FElem(this, primitive_); }
    FElem element(std::uint32_t idx) const;
    FElem from_power(long long k) const;  // primitive^k, k may be negative
    // Outer coordinates (constant first), each an inner index; short rows padded.
    FElem from_coords(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> coords(std::uint32_t idx) const;          // m inner indices
    std::vector<std::vector<long long>> coeff_vectors(std::uint32_t idx) const; // m rows of r GF(p) digits

    // Raw index arithmetic.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, long long e) const;
    std::uint32_t frob(std::uint32_t a, int j) const;
    std::uint32_t trace_rel(std::uint32_t a) const;  // sum of the m conjugates a^(q^w)
    bool in_base(std::uint32_t a) const { return a < q_; }

    // Discrete log base the tower primitive; errc::division_by_zero on zero.
    std::uint32_t log(std::uint32_t a) const;

    std::string elem_str(std::uint32_t idx) const;

    // Relative trace as an operation on elements; result lies in GF(q).
    FElem trace_rel(const FElem& a) const;

    // Multiplicative order of a nonzero element.
    std::uint32_t order_of(std::uint32_t a) const;

    // Inner-field (GF(q)) arithmetic on inner indices, exposed for matrix
    // work over the base field.
    std::uint32_t inner_add(std::uint32_t a, std::uint32_t b) const { return inner_add_[a * q_ + b]; }
    std::uint32_t inner_mul(std::uint32_t a, std::uint32_t b) const { return inner_mul_[a * q_ + b]; }

    ~FieldTower() = default;
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

private:
    FieldTower() = default;
    void build();
    std::uint32_t poly_mul_outer(std::uint32_t a, std::uint32_t b) const; // table-free path

    long long p_ = 0;
    int r_ = 0, m_ = 0;
    std::uint32_t q_ = 0, size_ = 0;
    std::vector<long long> inner_mod_;
    std::vector<std::uint32_t> outer_mod_;
    std::uint32_t primitive_ = 0;

    // inner GF(q) tables
    std::vector<std::uint32_t> inner_add_, inner_mul_, inner_neg_, inner_inv_;
    // outer GF(q^m) discrete-log tables (size <= 2^20 fields only)
    bool have_logs_ = false;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint32_t> zech_;            // zech_[k] = log(1 + a^k), sentinel = size_-1 marker
    static constexpr std::uint32_t kZechZero = 0xffffffffu;
    std::vector<std::uint32_t> zech_tbl_;
    std::vector<std::uint64_t> ppow_mod_;        // p^j mod (size-1), j in [0, rm)
    std::vector<std::uint32_t> trace_tbl_;       // relative trace per element
    std::vector<std::uint64_t> order_factors_;   // prime factors of size-1
};

// Returns the default (inner, outer) moduli for the shape, as used by
// make_default and the CLI when moduli are omitted. Pinned choices keep the
// customary element labels: GF(4) uses x^2+x+1, GF(9) uses x^2+x+2,
// GF(64)/GF(2) uses x^6+x+1, and the GF(64)/GF(4) cubic is the minimal
// polynomial over GF(4) of a root of x^6+x+1, so that powers of the
// canonical generator agree between the two presentations. Everything else
// is the first irreducible monic polynomial in index order.
std::pair<std::vector<long long>, std::vector<std::uint32_t>>
default_moduli(long long p, int r, int m);

bool is_prime(long long n);

} // namespace selforth
