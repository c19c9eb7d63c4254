#pragma once

// Residue fields F_P = R/(P) ≅ F_{q^d} for monic irreducible P.

#include <optional>
#include <random>
#include <vector>

#include "finsep/polyring.hpp"

namespace finsep {

class ResidueField;

struct ResidueElem {
    Poly rep;  // deg rep < deg P

    bool is_zero() const noexcept { return rep.is_zero(); }
    friend bool operator==(const ResidueElem&, const ResidueElem&) = default;
};

/// Coefficient ops over F_P on raw trimmed coefficient vectors, for use with
/// the upoly kernels (polynomials in x over F_P).
struct ResidueOps {
    const ResidueField* residue;

    using value_type = std::vector<fq_t>;
    value_type zero() const { return {}; }
    value_type one() const { return {1}; }
    bool is_zero(const value_type& a) const noexcept { return a.empty(); }
    bool equal(const value_type& a, const value_type& b) const noexcept { return a == b; }
    value_type add(const value_type& a, const value_type& b) const;
    value_type sub(const value_type& a, const value_type& b) const;
    value_type neg(const value_type& a) const;
    value_type mul(const value_type& a, const value_type& b) const;
    value_type inv(const value_type& a) const;
    value_type from_int(std::int64_t n) const;
};

class ResidueField {
   public:
    /// Throws InvalidArgument unless P is monic irreducible.
    explicit ResidueField(Poly P);
    /// Skips the irreducibility check (P comes from the sieve).
    static ResidueField trusted(Poly P);

    const Poly& modulus() const noexcept { return P_; }
    unsigned degree() const noexcept { return d_; }
    const FieldPtr& field() const noexcept { return P_.field(); }
    QPower order_power() const noexcept { return {P_.field()->q(), d_}; }
    BigInt order() const { return order_power().value(); }
    ResidueOps ops() const noexcept { return ResidueOps{this}; }
    FqOps base_ops() const noexcept { return FqOps{P_.field().get()}; }

    ResidueElem elem(const Poly& a) const;
    ResidueElem from_raw(std::vector<fq_t> raw) const;
    ResidueElem zero() const { return ResidueElem{Poly(field())}; }
    ResidueElem one() const { return ResidueElem{Poly::constant(field(), 1)}; }
    ResidueElem constant(fq_t c) const { return ResidueElem{Poly::constant(field(), c)}; }

    ResidueElem add(const ResidueElem& a, const ResidueElem& b) const;
    ResidueElem sub(const ResidueElem& a, const ResidueElem& b) const;
    ResidueElem neg(const ResidueElem& a) const;
    ResidueElem mul(const ResidueElem& a, const ResidueElem& b) const;
    /// Throws ZeroInverse.
    ResidueElem inv(const ResidueElem& a) const;

    std::vector<fq_t> reduce_raw(std::vector<fq_t> a) const;

   private:
    struct Trusted {};
    ResidueField(Poly P, Trusted);

    Poly P_;
    unsigned d_;
};

/// num * den^-1 mod P, or nullopt when P divides the denominator.
std::optional<ResidueElem> try_reduce(const RationalFn& c, const ResidueField& F);
/// Throws DenominatorVanishes when P divides the denominator.
ResidueElem reduce(const RationalFn& c, const ResidueField& F);

ResidueElem res_pow(const ResidueElem& a, const BigInt& e, const ResidueField& F);
ResidueElem res_pow(const ResidueElem& a, const QPower& e, const ResidueField& F);

/// Euler's criterion: a^((q^d - 1)/2) as -1, 0 or +1. Throws EvenCharacteristic
/// for even q, DenominatorVanishes when c has a pole at P.
int legendre_symbol(const RationalFn& c, const ResidueField& F);
int legendre_symbol(const ResidueElem& a, const ResidueField& F);

/// Coefficients of f reduced into F_P; nullopt when a denominator or the
/// leading coefficient vanishes mod P.
std::optional<std::vector<std::vector<fq_t>>> reduce_poly(const PolyOverK& f, const ResidueField& F);

struct RootCount {
    std::size_t count = 0;
    bool bad_prime = false;
};

/// Number of distinct roots of f mod P in F_P. Throws ZeroPolynomial.
RootCount root_count(const PolyOverK& f, const ResidueField& F);

/// Distinct roots in canonical order. Odd q uses random-shift equal-degree
/// splitting driven by `rng`; even q falls back to exhaustive search when
/// q^d <= 2^16. Throws BadPrime, ZeroPolynomial, EvenCharacteristic.
std::vector<ResidueElem> find_roots(const PolyOverK& f, const ResidueField& F, std::mt19937_64 rng = std::mt19937_64{0});

}  // namespace finsep
