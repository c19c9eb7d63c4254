#pragma once

// Linear recurrent sequences over K and their values a_{q^deg P} mod P.

#include <cstdint>
#include <optional>
#include <vector>

#include "finsep/polyring.hpp"
#include "finsep/residue.hpp"

namespace finsep {

/// a_n = c_1 a_{n-1} + ... + c_l a_{n-l}, with a_start .. a_{start+l-1} given.
struct LrsSpec {
    std::vector<RationalFn> coeffs;
    std::vector<RationalFn> initial;
    std::int64_t start = 0;

    std::size_t order() const noexcept { return coeffs.size(); }
    const FieldPtr& field() const;
    /// Throws InvalidArgument unless l >= 1, c_l != 0 and |initial| = l.
    void validate() const;

    friend bool operator==(const LrsSpec&, const LrsSpec&) = default;
};

struct EigenData {
    PolyOverK chi;  // x^l - c_1 x^(l-1) - ... - c_l
    bool separable_product = false;
};

PolyOverK eigen_polynomial(const LrsSpec& spec);
EigenData eigen(const LrsSpec& spec);

/// a_n by direct iteration in K (n >= start).
RationalFn term(const LrsSpec& spec, std::int64_t n);
/// a_start, ..., a_{start+count-1}.
std::vector<RationalFn> terms(const LrsSpec& spec, std::size_t count);

/// a_n mod P via x^(n - start) mod the reduced eigen polynomial. nullopt marks
/// a bad prime (a coefficient or initial value has a pole at P).
std::optional<ResidueElem> eval_at_index(const LrsSpec& spec, const ResidueField& F, const BigInt& n);

/// a_{q^deg P} mod P. Works for any eigen polynomial; separability (see
/// eigen()) is what certifies membership, not a precondition of the arithmetic.
std::optional<ResidueElem> eval_at_frobenius_index(const LrsSpec& spec, const ResidueField& F);

// Combinators. Operands with different `start` are aligned to the later one.

LrsSpec constant_sequence(const RationalFn& c, std::int64_t start = 0);
/// Same sequence, initial window moved to `new_start` (>= spec.start).
LrsSpec advance(const LrsSpec& spec, std::int64_t new_start);
/// a_n + b_n; eigen polynomial is the product of the operands'.
LrsSpec direct_sum(const LrsSpec& a, const LrsSpec& b);
/// a_n * b_n; eigen polynomial is the characteristic polynomial of the
/// Kronecker product of the companion matrices.
LrsSpec product(const LrsSpec& a, const LrsSpec& b);
LrsSpec scaled(const LrsSpec& spec, const RationalFn& c);

using KMatrix = std::vector<std::vector<RationalFn>>;

/// Companion matrix with first row (c_1, ..., c_l) and ones below the diagonal.
KMatrix companion_matrix(const LrsSpec& spec);
KMatrix kronecker(const KMatrix& a, const KMatrix& b);
/// det(x I - M), via reduction to Hessenberg form.
PolyOverK characteristic_polynomial(KMatrix m);

}  // namespace finsep
