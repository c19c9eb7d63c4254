#include "finsep/ak.hpp"

#include <algorithm>
#include <map>

namespace finsep {

namespace {

// Number of monic irreducibles of degree d over F_q (Moebius inversion).
BigInt irreducible_count(std::uint64_t q, unsigned d) {
    auto mu = [](unsigned n) {
        int m = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        return n > 1 ? -m : m;
    };
    BigInt s = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e == 0) s += mu(e) * boost::multiprecision::pow(BigInt(q), d / e);
    }
    return s / d;
}

}  // namespace

AkElement::AkElement(FieldPtr field, unsigned cutoff, std::vector<Entry> entries)
    : field_(std::move(field)), cutoff_(cutoff), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.prime.degree() < 1 || static_cast<unsigned>(e.prime.degree()) > cutoff_) {
            throw Error(Errc::InvalidArgument, "prime outside the cutoff window");
        }
        if (i > 0 && !(canonical_compare(entries_[i - 1].prime, e.prime) < 0)) {
            throw Error(Errc::InvalidArgument, "entries must be in canonical prime order");
        }
        if (e.value && e.value->degree() >= e.prime.degree()) {
            throw Error(Errc::InvalidArgument, "entry value not reduced modulo its prime");
        }
    }
    std::vector<std::size_t> per_degree(cutoff_ + 1, 0);
    for (const auto& e : entries_) ++per_degree[static_cast<std::size_t>(e.prime.degree())];
    for (unsigned d = 1; d <= cutoff_; ++d) {
        if (BigInt(per_degree[d]) != irreducible_count(field_->q(), d)) {
            throw Error(Errc::InvalidArgument, "entries miss primes of degree " + std::to_string(d));
        }
    }
}

AkElement AkElement::tabulate(const FieldPtr& field, unsigned cutoff,
                              const std::function<std::optional<ResidueElem>(const ResidueField&)>& component) {
    std::vector<Entry> entries;
    for (Poly& P : monic_irreducibles_up_to(cutoff, field)) {
        const ResidueField F = ResidueField::trusted(P);
        auto v = component(F);
        entries.push_back(Entry{std::move(P), v ? std::optional<Poly>(std::move(v->rep)) : std::nullopt});
    }
    return AkElement(field, cutoff, std::move(entries));
}

std::vector<Poly> AkElement::bad_primes() const {
    std::vector<Poly> out;
    for (const auto& e : entries_) {
        if (e.bad()) out.push_back(e.prime);
    }
    return out;
}

std::size_t AkElement::good_count() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const Entry& e) { return !e.bad(); }));
}

std::optional<Poly> AkElement::value_at(const Poly& P) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), P,
                               [](const Entry& e, const Poly& key) { return canonical_compare(e.prime, key) < 0; });
    if (it == entries_.end() || !(it->prime == P)) return std::nullopt;
    return it->value;
}

AkElement AkElement::truncate(unsigned cutoff) const {
    if (cutoff >= cutoff_) return *this;
    std::vector<Entry> kept;
    for (const auto& e : entries_) {
        if (static_cast<unsigned>(e.prime.degree()) <= cutoff) kept.push_back(e);
    }
    return AkElement(field_, cutoff, std::move(kept));
}

AkElement from_rational(const RationalFn& c, const FieldPtr& field, unsigned cutoff) {
    return AkElement::tabulate(field, cutoff, [&](const ResidueField& F) { return try_reduce(c, F); });
}

AkElement from_lrs(const LrsSpec& spec, unsigned cutoff) {
    spec.validate();
    return AkElement::tabulate(spec.field(), cutoff, [&](const ResidueField& F) { return eval_at_frobenius_index(spec, F); });
}

AkElement from_degree_values(const FieldPtr& field, unsigned cutoff, const std::function<RationalFn(unsigned)>& value) {
    std::vector<RationalFn> per_degree;
    for (unsigned d = 1; d <= cutoff; ++d) per_degree.push_back(value(d));
    return AkElement::tabulate(field, cutoff, [&](const ResidueField& F) { return try_reduce(per_degree[F.degree() - 1], F); });
}

namespace {

void require_same(const AkElement& x, const AkElement& y) {
    if (!x.field()->same_as(*y.field())) throw Error(Errc::FieldMismatch, "A_K elements over different fields");
}

}  // namespace

AkElement ak_arith(const AkElement& x, const AkElement& y, AkOp op) {
    require_same(x, y);
    const unsigned cutoff = std::min(x.cutoff(), y.cutoff());
    const AkElement xs = x.truncate(cutoff), ys = y.truncate(cutoff);
    std::vector<AkElement::Entry> out;
    out.reserve(xs.entries().size());
    for (std::size_t i = 0; i < xs.entries().size(); ++i) {
        const auto& a = xs.entries()[i];
        const auto& b = ys.entries()[i];
        if (a.bad() || b.bad()) {
            out.push_back({a.prime, std::nullopt});
            continue;
        }
        Poly v(x.field());
        switch (op) {
            case AkOp::Add: v = *a.value + *b.value; break;
            case AkOp::Sub: v = *a.value - *b.value; break;
            case AkOp::Mul: v = (*a.value * *b.value) % a.prime; break;
        }
        out.push_back({a.prime, std::move(v)});
    }
    return AkElement(x.field(), cutoff, std::move(out));
}

AkElement ak_scale(const RationalFn& c, const AkElement& x) {
    std::vector<AkElement::Entry> out;
    out.reserve(x.entries().size());
    for (const auto& e : x.entries()) {
        if (e.bad()) {
            out.push_back(e);
            continue;
        }
        const ResidueField F = ResidueField::trusted(e.prime);
        auto s = try_reduce(c, F);
        if (!s) {
            out.push_back({e.prime, std::nullopt});
            continue;
        }
        out.push_back({e.prime, F.mul(*s, ResidueElem{*e.value}).rep});
    }
    return AkElement(x.field(), x.cutoff(), std::move(out));
}

AkElement poly_eval(const PolyOverK& f, const AkElement& x) {
    if (!f.field()->same_as(*x.field())) throw Error(Errc::FieldMismatch, "polynomial and element over different fields");
    std::vector<AkElement::Entry> out;
    out.reserve(x.entries().size());
    for (const auto& e : x.entries()) {
        if (e.bad()) {
            out.push_back(e);
            continue;
        }
        const ResidueField F = ResidueField::trusted(e.prime);
        ResidueElem acc = F.zero();
        bool pole = false;
        for (std::size_t i = f.coeffs().size(); i-- > 0;) {
            auto c = try_reduce(f.coeffs()[i], F);
            if (!c) {
                pole = true;
                break;
            }
            acc = F.add(F.mul(acc, ResidueElem{*e.value}), *c);
        }
        out.push_back({e.prime, pole ? std::nullopt : std::optional<Poly>(std::move(acc.rep))});
    }
    return AkElement(x.field(), x.cutoff(), std::move(out));
}

ZeroCheck is_zero_up_to_finite(const AkElement& x, unsigned ignore_degree_below) {
    if (ignore_degree_below > x.cutoff()) throw Error(Errc::InvalidArgument, "ignored degrees exceed the cutoff");
    ZeroCheck out;
    for (const auto& e : x.entries()) {
        if (e.bad() || static_cast<unsigned>(e.prime.degree()) < ignore_degree_below) continue;
        if (!e.value->is_zero()) out.witnesses.push_back(e.prime);
    }
    out.zero = out.witnesses.empty();
    return out;
}

std::vector<std::pair<Poly, std::size_t>> repeat_witnesses(const AkElement& x, unsigned max_lift_degree) {
    // For deg a <= m < deg P, a mod P = a, so tallying the entries themselves
    // covers the exhaustive search over all a of degree <= m.
    std::map<Poly, std::size_t, CanonicalLess> tally;
    for (const auto& e : x.entries()) {
        if (e.bad() || static_cast<unsigned>(e.prime.degree()) <= max_lift_degree) continue;
        if (e.value->degree() <= static_cast<long>(max_lift_degree)) ++tally[*e.value];
    }
    std::vector<std::pair<Poly, std::size_t>> out;
    for (auto& [a, n] : tally) {
        if (n >= 2) out.emplace_back(a, n);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

AkElement staircase_element(const FieldPtr& field, unsigned cutoff) {
    return from_degree_values(field, cutoff, [&](unsigned n) {
        // Block k (k = 1, 2, ...) lists θ^0, ..., θ^(k-1); n is 1-based.
        unsigned k = 1;
        while (n > k) {
            n -= k;
            ++k;
        }
        return RationalFn(Poly::monomial(field, 1, n - 1));
    });
}

}  // namespace finsep
