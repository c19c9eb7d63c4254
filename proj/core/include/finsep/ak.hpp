#pragma once

// Truncated representatives of elements of A_K = prod_P R/(P) / sum_P R/(P):
// one residue per monic irreducible P of degree <= cutoff, plus the set of
// primes where the value is undefined ("bad").

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "finsep/lrs.hpp"
#include "finsep/polyring.hpp"
#include "finsep/residue.hpp"

namespace finsep {

class AkElement {
   public:
    struct Entry {
        Poly prime;
        std::optional<Poly> value;  // nullopt: bad prime

        bool bad() const noexcept { return !value.has_value(); }
    };

    /// Entries must list every monic irreducible of degree <= cutoff exactly
    /// once, in canonical order.
    AkElement(FieldPtr field, unsigned cutoff, std::vector<Entry> entries);

    /// Evaluate `component` at every prime of degree <= cutoff.
    static AkElement tabulate(const FieldPtr& field, unsigned cutoff,
                              const std::function<std::optional<ResidueElem>(const ResidueField&)>& component);

    const FieldPtr& field() const noexcept { return field_; }
    unsigned cutoff() const noexcept { return cutoff_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::vector<Poly> bad_primes() const;
    std::size_t good_count() const;
    /// Nullopt when P is bad or beyond the cutoff.
    std::optional<Poly> value_at(const Poly& P) const;
    /// Same element cut down to a smaller cutoff.
    AkElement truncate(unsigned cutoff) const;

   private:
    FieldPtr field_;
    unsigned cutoff_;
    std::vector<Entry> entries_;
};

AkElement from_rational(const RationalFn& c, const FieldPtr& field, unsigned cutoff);
AkElement from_lrs(const LrsSpec& spec, unsigned cutoff);
/// Per-degree values: entry at P is value(deg P) mod P.
AkElement from_degree_values(const FieldPtr& field, unsigned cutoff, const std::function<RationalFn(unsigned)>& value);

enum class AkOp { Add, Sub, Mul };
/// Componentwise on common good primes; cutoff = min; bad = union.
AkElement ak_arith(const AkElement& x, const AkElement& y, AkOp op);
AkElement ak_scale(const RationalFn& c, const AkElement& x);
inline AkElement operator+(const AkElement& x, const AkElement& y) { return ak_arith(x, y, AkOp::Add); }
inline AkElement operator-(const AkElement& x, const AkElement& y) { return ak_arith(x, y, AkOp::Sub); }
inline AkElement operator*(const AkElement& x, const AkElement& y) { return ak_arith(x, y, AkOp::Mul); }

/// Horner evaluation per prime; coefficient poles mark the prime bad.
AkElement poly_eval(const PolyOverK& f, const AkElement& x);

struct ZeroCheck {
    bool zero = true;
    std::vector<Poly> witnesses;  // good primes with deg >= d0 and nonzero entry
};
ZeroCheck is_zero_up_to_finite(const AkElement& x, unsigned ignore_degree_below);

/// Polynomials a with deg a <= max_lift_degree that equal the entry at two or
/// more good primes of degree > max_lift_degree, with those counts, sorted by
/// count (descending) then canonically. A roster that keeps growing with the
/// cutoff is the signature of a transcendental element.
std::vector<std::pair<Poly, std::size_t>> repeat_witnesses(const AkElement& x, unsigned max_lift_degree = 3);

/// Element with per-degree values 1, 1, θ, 1, θ, θ^2, 1, θ, θ^2, θ^3, ...
/// (degree n gets the n-th term of the concatenated blocks (θ^0..θ^(k-1))_k).
AkElement staircase_element(const FieldPtr& field, unsigned cutoff);

}  // namespace finsep
