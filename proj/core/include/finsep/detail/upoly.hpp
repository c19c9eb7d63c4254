#pragma once

// Dense univariate polynomial kernels over an arbitrary coefficient field.
//
// A coefficient domain is described by an "ops" object:
//   using value_type = ...;
//   value_type zero() const; value_type one() const; bool is_zero(const value_type&) const;
//   value_type add(a, b), sub(a, b), neg(a), mul(a, b), inv(a), from_int(std::int64_t)
//   bool equal(a, b)
// Coefficient vectors are ascending and trimmed (no trailing zeros); the zero
// polynomial is the empty vector.

#include <cstdint>
#include <utility>
#include <vector>

#include "finsep/errors.hpp"
#include "finsep/gf.hpp"

namespace finsep::upoly {

template <class Ops>
using Coeffs = std::vector<typename Ops::value_type>;

template <class Ops>
void trim(const Ops& ops, Coeffs<Ops>& a) {
    while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

template <class Ops>
long degree(const Coeffs<Ops>& a) {
    return static_cast<long>(a.size()) - 1;
}

template <class Ops>
bool equal(const Ops& ops, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!ops.equal(a[i], b[i])) return false;
    }
    return true;
}

template <class Ops>
Coeffs<Ops> add(const Ops& ops, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
    Coeffs<Ops> out(std::max(a.size(), b.size()), ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = ops.add(out[i], b[i]);
    trim(ops, out);
    return out;
}

template <class Ops>
Coeffs<Ops> neg(const Ops& ops, Coeffs<Ops> a) {
    for (auto& c : a) c = ops.neg(c);
    return a;
}

template <class Ops>
Coeffs<Ops> sub(const Ops& ops, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
    Coeffs<Ops> out(std::max(a.size(), b.size()), ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = ops.sub(out[i], b[i]);
    trim(ops, out);
    return out;
}

template <class Ops>
Coeffs<Ops> scale(const Ops& ops, const Coeffs<Ops>& a, const typename Ops::value_type& s) {
    if (ops.is_zero(s)) return {};
    Coeffs<Ops> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(ops.mul(c, s));
    trim(ops, out);
    return out;
}

template <class Ops>
Coeffs<Ops> mul(const Ops& ops, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs<Ops> out(a.size() + b.size() - 1, ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ops.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
    }
    trim(ops, out);
    return out;
}

/// In-place remainder; b must be nonzero.
template <class Ops>
void rem_inplace(const Ops& ops, Coeffs<Ops>& a, const Coeffs<Ops>& b) {
    if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    trim(ops, a);
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return;
    const auto lead_inv = ops.inv(b.back());
    const bool monic = ops.equal(b.back(), ops.one());
    while (a.size() > db) {
        const auto c = monic ? a.back() : ops.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] = ops.sub(a[shift + i], ops.mul(c, b[i]));
        a.pop_back();
        trim(ops, a);
    }
}

template <class Ops>
std::pair<Coeffs<Ops>, Coeffs<Ops>> divrem(const Ops& ops, Coeffs<Ops> a, const Coeffs<Ops>& b) {
    if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    trim(ops, a);
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {Coeffs<Ops>{}, std::move(a)};
    Coeffs<Ops> quot(a.size() - db, ops.zero());
    const auto lead_inv = ops.inv(b.back());
    while (a.size() > db) {
        const auto c = ops.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        quot[shift] = c;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] = ops.sub(a[shift + i], ops.mul(c, b[i]));
        a.pop_back();
        trim(ops, a);
    }
    trim(ops, quot);
    return {std::move(quot), std::move(a)};
}

template <class Ops>
Coeffs<Ops> make_monic(const Ops& ops, const Coeffs<Ops>& a) {
    if (a.empty()) return a;
    return scale(ops, a, ops.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) raises BothZero.
template <class Ops>
Coeffs<Ops> gcd(const Ops& ops, Coeffs<Ops> a, Coeffs<Ops> b) {
    trim(ops, a);
    trim(ops, b);
    if (a.empty() && b.empty()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.empty()) {
        rem_inplace(ops, a, b);
        std::swap(a, b);
    }
    return make_monic(ops, a);
}

template <class Ops>
Coeffs<Ops> derivative(const Ops& ops, const Coeffs<Ops>& a) {
    if (a.size() <= 1) return {};
    Coeffs<Ops> out(a.size() - 1, ops.zero());
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = ops.mul(ops.from_int(static_cast<std::int64_t>(i)), a[i]);
    trim(ops, out);
    return out;
}

template <class Ops>
typename Ops::value_type eval(const Ops& ops, const Coeffs<Ops>& a, const typename Ops::value_type& x) {
    auto acc = ops.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = ops.add(ops.mul(acc, x), a[i]);
    return acc;
}

template <class Ops>
Coeffs<Ops> mulmod(const Ops& ops, const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Coeffs<Ops>& m) {
    auto out = mul(ops, a, b);
    rem_inplace(ops, out, m);
    return out;
}

/// base^e mod m, left-to-right square-and-multiply over the bits of e.
template <class Ops>
Coeffs<Ops> powmod(const Ops& ops, Coeffs<Ops> base, const BigInt& e, const Coeffs<Ops>& m) {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    rem_inplace(ops, base, m);
    Coeffs<Ops> result{ops.one()};
    rem_inplace(ops, result, m);
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1u;
    for (unsigned i = bits; i-- > 0;) {
        result = mulmod(ops, result, result, m);
        if (boost::multiprecision::bit_test(e, i)) result = mulmod(ops, result, base, m);
    }
    return result;
}

/// x^e mod m; multiplication by x is a shift, so only squarings cost a product.
template <class Ops>
Coeffs<Ops> powmod_x(const Ops& ops, const BigInt& e, const Coeffs<Ops>& m) {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    Coeffs<Ops> result{ops.one()};
    rem_inplace(ops, result, m);
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1u;
    for (unsigned i = bits; i-- > 0;) {
        result = mulmod(ops, result, result, m);
        if (boost::multiprecision::bit_test(e, i)) {
            result.insert(result.begin(), ops.zero());
            rem_inplace(ops, result, m);
        }
    }
    return result;
}

template <class Ops>
Coeffs<Ops> powmod(const Ops& ops, Coeffs<Ops> base, const QPower& e, const Coeffs<Ops>& m) {
    rem_inplace(ops, base, m);
    const BigInt step = e.base;
    for (unsigned i = 0; i < e.exponent; ++i) base = powmod(ops, std::move(base), step, m);
    return base;
}

}  // namespace finsep::upoly
