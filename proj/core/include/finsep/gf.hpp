#pragma once

// Arithmetic in F_q = F_p[u]/(m(u)), q = p^r <= 2^16.
//
// Elements are dense coefficient vectors in u, packed into one integer
// (sum of c_i * p^i) so that polynomials over F_q can store them flat.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finsep/errors.hpp"

namespace finsep {

using BigInt = boost::multiprecision::cpp_int;
using fq_t = std::uint32_t;

/// The exponent base^exponent, kept unexpanded. Powering by a QPower is done
/// as `exponent` successive base-th powers, which equals x^(base^exponent).
struct QPower {
    std::uint64_t base = 0;
    unsigned exponent = 0;

    BigInt value() const;
};

struct FieldSpec {
    std::uint32_t p = 0;
    unsigned r = 0;
    std::vector<std::uint32_t> modulus;  // ascending, monic, length r + 1

    std::uint64_t q() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Spec with the lexicographically least (ascending coefficient order) monic
/// irreducible modulus of degree r over F_p.
FieldSpec field_spec(std::uint32_t p, unsigned r);

/// Factor q = p^r and call field_spec(p, r). Throws InvalidArgument when q is
/// not a prime power or exceeds 2^16.
FieldSpec field_spec_for_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
   public:
    /// Validates primality of p and irreducibility of the modulus.
    static FieldPtr create(const FieldSpec& spec);
    static FieldPtr of_order(std::uint64_t q) { return create(field_spec_for_order(q)); }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    unsigned r() const noexcept { return spec_.r; }
    std::uint32_t q() const noexcept { return q_; }

    static constexpr fq_t zero() noexcept { return 0; }
    static constexpr fq_t one() noexcept { return 1; }

    /// Image of an integer in the prime field.
    fq_t from_int(std::int64_t n) const noexcept;
    std::vector<std::uint32_t> digits(fq_t a) const;
    fq_t pack(std::span<const std::uint32_t> digits) const;

    fq_t add(fq_t a, fq_t b) const noexcept {
        return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
    }
    fq_t neg(fq_t a) const noexcept { return neg_table_[a]; }
    fq_t sub(fq_t a, fq_t b) const noexcept { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const noexcept {
        return mul_table_.empty() ? mul_slow(a, b) : mul_table_[a * q_ + b];
    }
    /// Throws ZeroInverse on 0.
    fq_t inv(fq_t a) const;
    fq_t pow(fq_t a, std::uint64_t e) const noexcept;
    fq_t pow(fq_t a, const BigInt& e) const;
    fq_t pow(fq_t a, const QPower& e) const;
    fq_t frobenius(fq_t a) const noexcept { return frob_table_[a]; }
    fq_t pth_root(fq_t a) const noexcept { return root_table_[a]; }

    /// Sort key realising lexicographic order on the ascending digit list.
    std::uint32_t lex_key(fq_t a) const noexcept { return lex_key_[a]; }
    fq_t from_lex_key(std::uint32_t k) const noexcept { return lex_inverse_[k]; }

    bool same_as(const Field& other) const noexcept { return this == &other || spec_ == other.spec_; }

   private:
    explicit Field(const FieldSpec& spec);

    fq_t add_slow(fq_t a, fq_t b) const noexcept;
    fq_t mul_slow(fq_t a, fq_t b) const noexcept;

    FieldSpec spec_;
    std::uint32_t q_;
    std::vector<std::uint32_t> pow_p_;  // p^i, i <= r
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<fq_t> neg_table_;
    std::vector<fq_t> inv_table_;
    std::vector<fq_t> frob_table_;
    std::vector<fq_t> root_table_;
    std::vector<std::uint32_t> lex_key_;
    std::vector<fq_t> lex_inverse_;
};

/// A field element bound to its field; the checked API of this module.
class FqElem {
   public:
    FqElem(FieldPtr field, fq_t value);
    static FqElem from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs);
    static FqElem zero(FieldPtr field) { return FqElem(std::move(field), 0); }
    static FqElem one(FieldPtr field) { return FqElem(std::move(field), 1); }

    const FieldPtr& field() const noexcept { return field_; }
    fq_t value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.value_ == b.value_ && a.field_->same_as(*b.field_);
    }

   private:
    FieldPtr field_;
    fq_t value_;
};

FqElem fq_add(const FqElem& a, const FqElem& b);
FqElem fq_sub(const FqElem& a, const FqElem& b);
FqElem fq_neg(const FqElem& a);
FqElem fq_mul(const FqElem& a, const FqElem& b);
FqElem fq_inv(const FqElem& a);
FqElem fq_pow(const FqElem& a, const BigInt& e);
FqElem fq_pow(const FqElem& a, const QPower& e);
FqElem fq_pth_root(const FqElem& a);

inline FqElem operator+(const FqElem& a, const FqElem& b) { return fq_add(a, b); }
inline FqElem operator-(const FqElem& a, const FqElem& b) { return fq_sub(a, b); }
inline FqElem operator-(const FqElem& a) { return fq_neg(a); }
inline FqElem operator*(const FqElem& a, const FqElem& b) { return fq_mul(a, b); }

std::string to_string(const FqElem& a);

}  // namespace finsep
