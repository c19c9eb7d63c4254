#pragma once

// R = F_q[θ], K = F_q(θ) and polynomials over K.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finsep/detail/upoly.hpp"
#include "finsep/gf.hpp"

namespace finsep {

/// Coefficient ops for F_q (raw packed elements).
struct FqOps {
    const Field* field;

    using value_type = fq_t;
    fq_t zero() const noexcept { return 0; }
    fq_t one() const noexcept { return 1; }
    bool is_zero(fq_t a) const noexcept { return a == 0; }
    bool equal(fq_t a, fq_t b) const noexcept { return a == b; }
    fq_t add(fq_t a, fq_t b) const noexcept { return field->add(a, b); }
    fq_t sub(fq_t a, fq_t b) const noexcept { return field->sub(a, b); }
    fq_t neg(fq_t a) const noexcept { return field->neg(a); }
    fq_t mul(fq_t a, fq_t b) const noexcept { return field->mul(a, b); }
    fq_t inv(fq_t a) const { return field->inv(a); }
    fq_t from_int(std::int64_t n) const noexcept { return field->from_int(n); }
};

/// Element of R = F_q[θ]: ascending coefficients, trailing zeros stripped.
class Poly {
   public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<fq_t> coeffs);

    static Poly constant(FieldPtr field, fq_t c) { return Poly(std::move(field), std::vector<fq_t>{c}); }
    static Poly monomial(FieldPtr field, fq_t c, std::size_t degree);
    static Poly theta(const FieldPtr& field) { return monomial(field, 1, 1); }
    /// Integer coefficients reduced into the prime field.
    static Poly from_ints(FieldPtr field, std::span<const std::int64_t> coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<fq_t>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    fq_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    fq_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FqOps ops() const noexcept { return FqOps{field_.get()}; }

    fq_t eval(fq_t x) const noexcept;

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && a.field_->same_as(*b.field_);
    }

   private:
    FieldPtr field_;
    std::vector<fq_t> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(fq_t s, const Poly& a);

/// (quotient, remainder) with deg remainder < deg b. Throws DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd. Throws BothZero.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly derivative(const Poly& a);
Poly powmod(const Poly& base, const BigInt& e, const Poly& modulus);
Poly powmod(const Poly& base, const QPower& e, const Poly& modulus);

/// Canonical prime order: degree first, then lexicographic on the ascending
/// coefficient list with F_q elements compared by their ascending digit list.
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);
struct CanonicalLess {
    bool operator()(const Poly& a, const Poly& b) const { return canonical_compare(a, b) < 0; }
};

/// Rabin's test. Throws ConstantInput when deg f < 1.
bool is_irreducible(const Poly& f);

/// Monic irreducibles of degree exactly d in canonical order (sieve based).
std::vector<Poly> enumerate_monic_irreducibles(unsigned d, const FieldPtr& field);

/// All monic irreducibles of degree 1..max_degree in canonical order, from a
/// single degree-by-degree sieve.
std::vector<Poly> monic_irreducibles_up_to(unsigned max_degree, const FieldPtr& field);

/// Monic polynomial of degree d whose canonical rank among monic degree-d
/// polynomials is `index` (0 <= index < q^d).
Poly monic_from_index(const FieldPtr& field, unsigned d, std::uint64_t index);
std::uint64_t monic_index(const Poly& f);

/// "[1,0,1]" (entries are packed F_q codes).
std::string to_string(const Poly& a);
/// "θ^2+1".
std::string pretty(const Poly& a);
/// Accepts "[1,0,1]" or "1,0,1"; negative integers are reduced mod p. Each
/// entry is a packed F_q code sum(c_i p^i).
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// Element of K = F_q(θ), always in lowest terms with monic denominator.
class RationalFn {
   public:
    explicit RationalFn(const FieldPtr& field) : num_(field), den_(Poly::constant(field, 1)) {}
    explicit RationalFn(Poly num);
    /// Throws DivisionByZero when den = 0.
    RationalFn(Poly num, Poly den);

    static RationalFn constant(const FieldPtr& field, fq_t c) { return RationalFn(Poly::constant(field, c)); }
    static RationalFn from_int(const FieldPtr& field, std::int64_t n) {
        return constant(field, field->from_int(n));
    }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    Poly num_;
    Poly den_;
};

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a);
RationalFn operator*(const RationalFn& a, const RationalFn& b);
/// Throws DivisionByZero.
RationalFn operator/(const RationalFn& a, const RationalFn& b);
RationalFn inverse(const RationalFn& a);
RationalFn pow(const RationalFn& a, std::uint64_t e);

/// p-th root in K when c ∈ K^p.
std::optional<RationalFn> is_pth_power(const RationalFn& c);

std::string to_string(const RationalFn& a);
std::string pretty(const RationalFn& a);
/// "num" or "num/den" with each side in parse_poly syntax.
RationalFn parse_rational(const FieldPtr& field, std::string_view text);

/// Coefficient ops for K.
struct KOps {
    FieldPtr field;

    using value_type = RationalFn;
    RationalFn zero() const { return RationalFn(field); }
    RationalFn one() const { return RationalFn::constant(field, 1); }
    bool is_zero(const RationalFn& a) const noexcept { return a.is_zero(); }
    bool equal(const RationalFn& a, const RationalFn& b) const { return a == b; }
    RationalFn add(const RationalFn& a, const RationalFn& b) const { return a + b; }
    RationalFn sub(const RationalFn& a, const RationalFn& b) const { return a - b; }
    RationalFn neg(const RationalFn& a) const { return -a; }
    RationalFn mul(const RationalFn& a, const RationalFn& b) const { return a * b; }
    RationalFn inv(const RationalFn& a) const { return inverse(a); }
    RationalFn from_int(std::int64_t n) const { return RationalFn::from_int(field, n); }
};

/// Polynomial in x over K.
class PolyOverK {
   public:
    explicit PolyOverK(FieldPtr field) : field_(std::move(field)) {}
    PolyOverK(FieldPtr field, std::vector<RationalFn> coeffs);

    /// x^n
    static PolyOverK monomial(const FieldPtr& field, const RationalFn& c, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<RationalFn>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    KOps ops() const { return KOps{field_}; }
    RationalFn coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RationalFn(field_); }

    friend bool operator==(const PolyOverK& a, const PolyOverK& b) { return a.c_ == b.c_; }

   private:
    FieldPtr field_;
    std::vector<RationalFn> c_;
};

PolyOverK operator+(const PolyOverK& a, const PolyOverK& b);
PolyOverK operator-(const PolyOverK& a, const PolyOverK& b);
PolyOverK operator*(const PolyOverK& a, const PolyOverK& b);
std::pair<PolyOverK, PolyOverK> divrem(const PolyOverK& a, const PolyOverK& b);
PolyOverK poly_gcd(const PolyOverK& a, const PolyOverK& b);
PolyOverK derivative(const PolyOverK& f);
RationalFn eval(const PolyOverK& f, const RationalFn& x);
PolyOverK pow(const PolyOverK& f, unsigned e);

/// True iff every irreducible factor of f over K has nonzero derivative.
/// Throws ZeroPolynomial.
bool is_product_of_separable(const PolyOverK& f);

/// Coefficients separated by ';' in ascending x order, each in
/// parse_rational syntax, e.g. "0,-1;0;1" for x^2 - θ.
PolyOverK parse_poly_over_k(const FieldPtr& field, std::string_view text);
std::string to_string(const PolyOverK& f);
std::string pretty(const PolyOverK& f);

}  // namespace finsep
