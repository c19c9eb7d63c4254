#include "finsep/residue.hpp"

#include <algorithm>

namespace finsep {

namespace {

using Raw = std::vector<fq_t>;

// a^-1 mod m by the extended Euclidean algorithm over F_q.
Raw inverse_mod(const FqOps& ops, const Raw& a, const Raw& m) {
    Raw r0 = m, r1 = a;
    Raw s0, s1{1};
    upoly::rem_inplace(ops, r1, m);
    if (r1.empty()) throw Error(Errc::ZeroInverse, "inverse of zero in residue field");
    while (r1.size() > 1) {
        auto [q, r] = upoly::divrem(ops, r0, r1);
        Raw s = upoly::sub(ops, s0, upoly::mul(ops, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw Error(Errc::ZeroInverse, "element is not invertible modulo P");
    Raw out = upoly::scale(ops, s1, ops.inv(r1[0]));
    upoly::rem_inplace(ops, out, m);
    return out;
}

std::optional<Raw> reduce_raw_rational(const RationalFn& c, const ResidueField& F) {
    const FqOps ops = F.base_ops();
    Raw den = F.reduce_raw(c.den().coeffs());
    if (den.empty()) return std::nullopt;
    Raw num = F.reduce_raw(c.num().coeffs());
    if (num.empty()) return Raw{};
    if (den.size() == 1 && den[0] == 1) return num;
    return F.reduce_raw(upoly::mul(ops, num, inverse_mod(ops, den, F.modulus().coeffs())));
}

}  // namespace

ResidueOps::value_type ResidueOps::add(const value_type& a, const value_type& b) const {
    return upoly::add(residue->base_ops(), a, b);
}
ResidueOps::value_type ResidueOps::sub(const value_type& a, const value_type& b) const {
    return upoly::sub(residue->base_ops(), a, b);
}
ResidueOps::value_type ResidueOps::neg(const value_type& a) const { return upoly::neg(residue->base_ops(), a); }
ResidueOps::value_type ResidueOps::mul(const value_type& a, const value_type& b) const {
    return residue->reduce_raw(upoly::mul(residue->base_ops(), a, b));
}
ResidueOps::value_type ResidueOps::inv(const value_type& a) const {
    return inverse_mod(residue->base_ops(), a, residue->modulus().coeffs());
}
ResidueOps::value_type ResidueOps::from_int(std::int64_t n) const {
    const fq_t c = residue->field()->from_int(n);
    return c == 0 ? value_type{} : value_type{c};
}

ResidueField::ResidueField(Poly P, Trusted) : P_(std::move(P)), d_(static_cast<unsigned>(P_.degree())) {}

ResidueField::ResidueField(Poly P) : P_(std::move(P)), d_(0) {
    if (P_.degree() < 1 || !P_.is_monic() || !is_irreducible(P_)) {
        throw Error(Errc::InvalidArgument, "residue field modulus must be monic irreducible: " + pretty(P_));
    }
    d_ = static_cast<unsigned>(P_.degree());
}

ResidueField ResidueField::trusted(Poly P) { return ResidueField(std::move(P), Trusted{}); }

std::vector<fq_t> ResidueField::reduce_raw(std::vector<fq_t> a) const {
    upoly::rem_inplace(base_ops(), a, P_.coeffs());
    return a;
}

ResidueElem ResidueField::elem(const Poly& a) const {
    if (!a.field()->same_as(*field())) throw Error(Errc::FieldMismatch, "element over a different field");
    return from_raw(a.coeffs());
}

ResidueElem ResidueField::from_raw(std::vector<fq_t> raw) const { return ResidueElem{Poly(field(), reduce_raw(std::move(raw)))}; }

ResidueElem ResidueField::add(const ResidueElem& a, const ResidueElem& b) const { return ResidueElem{a.rep + b.rep}; }
ResidueElem ResidueField::sub(const ResidueElem& a, const ResidueElem& b) const { return ResidueElem{a.rep - b.rep}; }
ResidueElem ResidueField::neg(const ResidueElem& a) const { return ResidueElem{-a.rep}; }
ResidueElem ResidueField::mul(const ResidueElem& a, const ResidueElem& b) const {
    return from_raw(upoly::mul(base_ops(), a.rep.coeffs(), b.rep.coeffs()));
}
ResidueElem ResidueField::inv(const ResidueElem& a) const {
    return ResidueElem{Poly(field(), inverse_mod(base_ops(), a.rep.coeffs(), P_.coeffs()))};
}

std::optional<ResidueElem> try_reduce(const RationalFn& c, const ResidueField& F) {
    if (!c.field()->same_as(*F.field())) throw Error(Errc::FieldMismatch, "rational function over a different field");
    auto raw = reduce_raw_rational(c, F);
    if (!raw) return std::nullopt;
    return ResidueElem{Poly(F.field(), std::move(*raw))};
}

ResidueElem reduce(const RationalFn& c, const ResidueField& F) {
    auto r = try_reduce(c, F);
    if (!r) throw Error(Errc::DenominatorVanishes, "denominator of " + pretty(c) + " vanishes mod " + pretty(F.modulus()));
    return std::move(*r);
}

ResidueElem res_pow(const ResidueElem& a, const BigInt& e, const ResidueField& F) {
    return ResidueElem{Poly(F.field(), upoly::powmod(F.base_ops(), a.rep.coeffs(), e, F.modulus().coeffs()))};
}

ResidueElem res_pow(const ResidueElem& a, const QPower& e, const ResidueField& F) {
    return ResidueElem{Poly(F.field(), upoly::powmod(F.base_ops(), a.rep.coeffs(), e, F.modulus().coeffs()))};
}

int legendre_symbol(const ResidueElem& a, const ResidueField& F) {
    if (F.field()->p() == 2) throw Error(Errc::EvenCharacteristic, "quadratic residue symbol needs odd q");
    if (a.is_zero()) return 0;
    const ResidueElem e = res_pow(a, (F.order() - 1) / 2, F);
    if (e.rep.is_one()) return 1;
    // Euler's criterion leaves only ±1 for a nonzero element.
    return -1;
}

int legendre_symbol(const RationalFn& c, const ResidueField& F) {
    if (F.field()->p() == 2) throw Error(Errc::EvenCharacteristic, "quadratic residue symbol needs odd q");
    return legendre_symbol(reduce(c, F), F);
}

std::optional<std::vector<std::vector<fq_t>>> reduce_poly(const PolyOverK& f, const ResidueField& F) {
    std::vector<std::vector<fq_t>> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        auto r = reduce_raw_rational(c, F);
        if (!r) return std::nullopt;
        out.push_back(std::move(*r));
    }
    if (!out.empty() && out.back().empty()) return std::nullopt;
    return out;
}

namespace {

using XPoly = upoly::Coeffs<ResidueOps>;

// gcd(f mod P, x^(q^d) - x): the product of the distinct linear factors.
std::optional<XPoly> linear_part(const PolyOverK& f, const ResidueField& F) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "root search for the zero polynomial");
    auto reduced = reduce_poly(f, F);
    if (!reduced) return std::nullopt;
    const ResidueOps ops = F.ops();
    XPoly fbar = upoly::make_monic(ops, *reduced);
    if (fbar.size() <= 1) return XPoly{ops.one()};
    const XPoly x{ops.zero(), ops.one()};
    XPoly h = upoly::powmod(ops, x, F.order_power(), fbar);
    h = upoly::sub(ops, h, x);
    return upoly::gcd(ops, fbar, h);
}

void split_linear(const ResidueField& F, const XPoly& g, const BigInt& half, std::mt19937_64& rng, std::vector<ResidueElem>& out) {
    const ResidueOps ops = F.ops();
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(ResidueElem{Poly(F.field(), ops.neg(g[0]))});
        return;
    }
    std::uniform_int_distribution<std::uint32_t> coin(0, F.field()->q() - 1);
    while (true) {
        std::vector<fq_t> delta(F.degree());
        for (auto& c : delta) c = coin(rng);
        upoly::trim(F.base_ops(), delta);
        const XPoly shifted = upoly::add(ops, XPoly{ops.zero(), ops.one()}, XPoly{delta});
        XPoly h = upoly::powmod(ops, shifted, half, g);
        h = upoly::sub(ops, h, XPoly{ops.one()});
        if (h.empty()) continue;
        XPoly s = upoly::gcd(ops, g, h);
        if (s.size() <= 1 || s.size() == g.size()) continue;
        XPoly rest = upoly::divrem(ops, g, s).first;
        split_linear(F, s, half, rng, out);
        split_linear(F, upoly::make_monic(ops, rest), half, rng, out);
        return;
    }
}

}  // namespace

RootCount root_count(const PolyOverK& f, const ResidueField& F) {
    auto g = linear_part(f, F);
    if (!g) return RootCount{0, true};
    return RootCount{g->size() - 1, false};
}

std::vector<ResidueElem> find_roots(const PolyOverK& f, const ResidueField& F, std::mt19937_64 rng) {
    auto g = linear_part(f, F);
    if (!g) throw Error(Errc::BadPrime, "coefficients of " + pretty(f) + " degenerate mod " + pretty(F.modulus()));
    std::vector<ResidueElem> out;
    const ResidueOps ops = F.ops();
    if (F.field()->p() == 2) {
        if (F.order() > (1u << 16)) throw Error(Errc::EvenCharacteristic, "root finding for even q needs q^d <= 2^16");
        const std::uint64_t total = F.order().convert_to<std::uint64_t>();
        const std::uint64_t q = F.field()->q();
        for (std::uint64_t code = 0; code < total && out.size() + 1 < g->size(); ++code) {
            std::vector<fq_t> a(F.degree());
            std::uint64_t c = code;
            for (auto& x : a) {
                x = static_cast<fq_t>(c % q);
                c /= q;
            }
            upoly::trim(F.base_ops(), a);
            if (upoly::eval(ops, *g, a).empty()) out.push_back(ResidueElem{Poly(F.field(), std::move(a))});
        }
    } else {
        split_linear(F, *g, (F.order() - 1) / 2, rng, out);
    }
    std::sort(out.begin(), out.end(), [](const ResidueElem& a, const ResidueElem& b) { return canonical_compare(a.rep, b.rep) < 0; });
    return out;
}

}  // namespace finsep
