#include "finsep/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace finsep {

GaloisFamily GaloisFamily::constant_field(FieldPtr field, unsigned n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "constant-field extension needs degree n >= 1");
    return GaloisFamily(Kind::ConstantField, std::move(field), n, std::nullopt);
}

GaloisFamily GaloisFamily::kummer(Poly D) {
    const FieldPtr field = D.field();
    if (field->p() == 2) throw Error(Errc::EvenCharacteristic, "quadratic Kummer extensions need odd q");
    if (D.is_zero()) throw Error(Errc::InvalidArgument, "Kummer radicand must be nonzero");
    if (D.is_constant()) {
        if (field->pow(D.lead(), (field->q() - 1) / 2) == 1) {
            throw Error(Errc::InvalidArgument, "constant radicand is a square in F_q");
        }
    } else if (poly_gcd(D, derivative(D)).degree() > 0) {
        throw Error(Errc::InvalidArgument, "Kummer radicand must be squarefree: " + pretty(D));
    }
    return GaloisFamily(Kind::KummerQuadratic, field, 2, std::move(D));
}

const Poly& GaloisFamily::radicand() const {
    if (!D_) throw Error(Errc::InvalidArgument, "constant-field family has no radicand");
    return *D_;
}

std::vector<int> GaloisFamily::elements() const {
    if (kind_ == Kind::KummerQuadratic) return {1, -1};
    std::vector<int> out(n_);
    for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<int>(i);
    return out;
}

bool GaloisFamily::contains(int g) const {
    if (kind_ == Kind::KummerQuadratic) return g == 1 || g == -1;
    return g >= 0 && static_cast<unsigned>(g) < n_;
}

bool GaloisFamily::is_geometric() const {
    if (kind_ == Kind::ConstantField) return n_ == 1;
    return !D_->is_constant();
}

std::string GaloisFamily::label() const {
    if (kind_ == Kind::ConstantField) return "constant:" + std::to_string(n_);
    return "kummer:" + pretty(*D_);
}

std::optional<int> GaloisFamily::frobenius_class(const Poly& P) const {
    if (!P.field()->same_as(*field_)) throw Error(Errc::FieldMismatch, "prime over a different field");
    if (kind_ == Kind::ConstantField) return static_cast<int>(static_cast<unsigned>(P.degree()) % n_);
    const int s = legendre_symbol(RationalFn(*D_), ResidueField::trusted(P));
    if (s == 0) return std::nullopt;
    return s;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

GaloisFamily parse_family(const FieldPtr& field, const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "family must be constant:n or kummer:POLY");
    const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    if (kind == "constant") {
        try {
            std::size_t used = 0;
            const int n = std::stoi(arg, &used);
            if (used != arg.size() || n < 1) throw Error(Errc::ParseError, "bad extension degree: " + arg);
            return GaloisFamily::constant_field(field, static_cast<unsigned>(n));
        } catch (const std::logic_error&) {
            throw Error(Errc::ParseError, "bad extension degree: " + arg);
        }
    }
    if (kind == "kummer") return GaloisFamily::kummer(parse_poly(field, arg));
    throw Error(Errc::ParseError, "unknown family kind: " + kind);
}

std::vector<int> parse_class_set(const GaloisFamily& family, const std::string& text) {
    std::set<int> seen;
    for (const auto& item : split(text, ',')) {
        if (item.empty()) continue;
        int g = 0;
        try {
            std::size_t used = 0;
            g = std::stoi(item, &used);
            if (used != item.size()) throw Error(Errc::ParseError, "bad group element: " + item);
        } catch (const std::logic_error&) {
            throw Error(Errc::ParseError, "bad group element: " + item);
        }
        if (!family.contains(g)) throw Error(Errc::InvalidArgument, "element " + item + " not in the group of " + family.label());
        seen.insert(g);
    }
    // Keep the family's element order.
    std::vector<int> out;
    for (int g : family.elements()) {
        if (seen.count(g)) out.push_back(g);
    }
    return out;
}

const RationalFn& ClassFunction::at(int g) const {
    auto it = values.find(g);
    if (it == values.end()) throw Error(Errc::InvalidArgument, "class function undefined at " + std::to_string(g));
    return it->second;
}

ClassFunction constant_class_function(const GaloisFamily& family, const RationalFn& c) {
    ClassFunction g{family, {}};
    for (int s : family.elements()) g.values.emplace(s, c);
    return g;
}

ClassFunction complement_indicator(const GaloisFamily& family, const std::vector<int>& C) {
    ClassFunction g{family, {}};
    for (int s : family.elements()) {
        const bool in = std::find(C.begin(), C.end(), s) != C.end();
        g.values.emplace(s, RationalFn::from_int(family.field(), in ? 0 : 1));
    }
    return g;
}

AkElement ev_L(const ClassFunction& g, unsigned cutoff) {
    return AkElement::tabulate(g.family.field(), cutoff, [&](const ResidueField& F) -> std::optional<ResidueElem> {
        const auto cls = g.family.frobenius_class(F.modulus());
        if (!cls) return std::nullopt;
        return try_reduce(g.at(*cls), F);
    });
}

LrsSpec kummer_symbol_sequence(const Poly& D) {
    const FieldPtr& field = D.field();
    return LrsSpec{{RationalFn(field), RationalFn(D)}, {RationalFn::from_int(field, 1), RationalFn(field)}, 1};
}

LrsSpec constant_field_parity_sequence(const FieldPtr& field) {
    if (field->p() != 2) throw Error(Errc::InvalidArgument, "the parity sequence needs q a power of 2");
    const std::size_t q = field->q();
    const RationalFn one = RationalFn::from_int(field, 1);
    return LrsSpec{std::vector<RationalFn>(q, one), std::vector<RationalFn>(q, one), 0};
}

namespace {

FrobenianRealization realize_constant_field(const GaloisFamily& family, const std::vector<int>& C) {
    const FieldPtr& field = family.field();
    const unsigned n = family.n();
    if (static_cast<double>(n) * std::log2(static_cast<double>(field->q())) > 20.0) {
        throw Error(Errc::UnsupportedFamily, "period q^n - 1 exceeds the 2^20 guard");
    }
    std::uint64_t N = 1;
    for (unsigned i = 0; i < n; ++i) N *= field->q();
    N -= 1;
    std::vector<bool> zero_at(N, false);
    std::uint64_t qj = 1 % N;
    for (unsigned j = 0; j < n; ++j) {
        if (std::find(C.begin(), C.end(), static_cast<int>(j)) != C.end()) zero_at[qj] = true;
        qj = qj * field->q() % N;
    }
    if (std::all_of(zero_at.begin(), zero_at.end(), [](bool b) { return b; })) {
        throw Error(Errc::UnsupportedFamily, "period sequence would be identically zero");
    }
    const RationalFn zero(field), one = RationalFn::from_int(field, 1);
    LrsSpec spec{std::vector<RationalFn>(N, zero), {}, 0};
    spec.coeffs.back() = one;
    spec.initial.reserve(N);
    for (std::uint64_t m = 0; m < N; ++m) spec.initial.push_back(zero_at[m] ? zero : one);
    return {std::move(spec), complement_indicator(family, C)};
}

FrobenianRealization realize_kummer(const GaloisFamily& family, const std::vector<int>& C) {
    const FieldPtr& field = family.field();
    const LrsSpec b = kummer_symbol_sequence(family.radicand());
    ClassFunction g{family, {}};
    if (C.size() == 1) {
        const int s = C.front();
        for (int sigma : family.elements()) g.values.emplace(sigma, RationalFn::from_int(field, sigma - s));
        return {direct_sum(b, constant_sequence(RationalFn::from_int(field, -s))), std::move(g)};
    }
    // Full C: b^2 - 1 vanishes at every unramified prime.
    for (int sigma : family.elements()) g.values.emplace(sigma, RationalFn::from_int(field, sigma * sigma - 1));
    return {direct_sum(product(b, b), constant_sequence(RationalFn::from_int(field, -1))), std::move(g)};
}

}  // namespace

FrobenianRealization realize_frobenian(const GaloisFamily& family, const std::vector<int>& C) {
    for (int g : C) {
        if (!family.contains(g)) throw Error(Errc::InvalidArgument, "class set element outside the group");
    }
    if (C.empty()) {
        const RationalFn one = RationalFn::from_int(family.field(), 1);
        return {constant_sequence(one), constant_class_function(family, one)};
    }
    if (family.kind() == GaloisFamily::Kind::ConstantField) return realize_constant_field(family, C);
    return realize_kummer(family, C);
}

RoundTrip frobenian_round_trip(const GaloisFamily& family, const std::vector<int>& C, unsigned min_degree, unsigned max_degree) {
    const LrsSpec spec = realize_frobenian_lrs(family, C);
    const AkElement alpha = from_lrs(spec, max_degree);
    RoundTrip out;
    for (const auto& e : alpha.entries()) {
        if (static_cast<unsigned>(e.prime.degree()) < min_degree) continue;
        if (e.bad()) {
            out.bad.push_back(e.prime);
            continue;
        }
        ++out.checked;
        const auto cls = family.frobenius_class(e.prime);
        const bool in_set = cls && std::find(C.begin(), C.end(), *cls) != C.end();
        if (e.value->is_zero() != in_set) out.mismatches.push_back(e.prime);
    }
    return out;
}

CertifiedPair certify(const FrobenianRealization& realization, unsigned cutoff) {
    const FieldPtr& field = realization.g.family.field();
    std::vector<RationalFn> distinct;
    for (const auto& [sigma, v] : realization.g.values) {
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    }
    const RationalFn one = RationalFn::from_int(field, 1);
    PolyOverK f(field, {one});
    for (const auto& v : distinct) f = f * PolyOverK(field, {-v, one});
    AkElement alpha = from_lrs(realization.spec, cutoff);
    ZeroCheck check = is_zero_up_to_finite(poly_eval(f, alpha), std::min(2u, cutoff));
    return {std::move(alpha), std::move(f), realization.g.at(realization.g.family.identity()), std::move(check)};
}

std::size_t DensityReport::hits() const {
    std::size_t n = 0;
    for (const auto& c : by_degree) n += c.hits;
    return n;
}

std::size_t DensityReport::total() const {
    std::size_t n = 0;
    for (const auto& c : by_degree) n += c.total;
    return n;
}

double DensityReport::standard_error() const {
    const double p = expected ? expected->value() : natural_fraction;
    const double n = static_cast<double>(total());
    return n > 0 ? std::sqrt(p * (1 - p) / n) : 0.0;
}

const std::vector<double>& dirichlet_grid() {
    static const std::vector<double> grid{1.2, 1.1, 1.05, 1.02};
    return grid;
}

double dirichlet_estimate(const std::vector<DegreeCount>& counts, unsigned q, double s) {
    long double num = 0, den = 0;
    for (const auto& c : counts) {
        const long double w = std::pow(static_cast<long double>(q), -static_cast<long double>(s) * c.degree);
        num += w * c.hits;
        den += w * c.total;
    }
    return den > 0 ? static_cast<double>(num / den) : 0.0;
}

namespace {

double fraction(const std::vector<DegreeCount>& counts) {
    std::size_t h = 0, t = 0;
    for (const auto& c : counts) {
        h += c.hits;
        t += c.total;
    }
    return t > 0 ? static_cast<double>(h) / static_cast<double>(t) : 0.0;
}

std::vector<DegreeCount> empty_counts(unsigned cutoff) {
    std::vector<DegreeCount> out;
    for (unsigned d = 1; d <= cutoff; ++d) out.push_back({d, 0, 0});
    return out;
}

}  // namespace

DensityReport density_report(const std::string& predicate, const FieldPtr& field, unsigned cutoff,
                             const std::function<bool(const Poly&)>& hit, std::optional<Ratio> expected, bool geometric) {
    if (cutoff < 1) throw Error(Errc::InvalidArgument, "density cutoff must be >= 1");
    DensityReport out;
    out.predicate = predicate;
    out.field = field->spec();
    out.by_degree = empty_counts(cutoff);
    for (const Poly& P : monic_irreducibles_up_to(cutoff, field)) {
        auto& c = out.by_degree[static_cast<std::size_t>(P.degree()) - 1];
        ++c.total;
        if (hit(P)) ++c.hits;
    }
    out.natural_fraction = fraction(out.by_degree);
    for (double s : dirichlet_grid()) out.dirichlet.emplace_back(s, dirichlet_estimate(out.by_degree, field->q(), s));
    out.expected = expected;
    out.geometric = geometric;
    return out;
}

DensityReport class_density(const GaloisFamily& family, const std::vector<int>& C, unsigned cutoff) {
    std::string label = "frobenius class of " + family.label() + " in {";
    for (std::size_t i = 0; i < C.size(); ++i) label += (i ? "," : "") + std::to_string(C[i]);
    label += "}";
    return density_report(
        label, family.field(), cutoff,
        [&](const Poly& P) {
            const auto cls = family.frobenius_class(P);
            return cls && std::find(C.begin(), C.end(), *cls) != C.end();
        },
        Ratio{static_cast<long>(C.size()), static_cast<long>(family.order())}, family.is_geometric());
}

std::vector<std::pair<std::string, LrsSpec>> kummer_candidate_family(const GaloisFamily& family) {
    if (family.kind() != GaloisFamily::Kind::KummerQuadratic) {
        throw Error(Errc::UnsupportedFamily, "candidate family is defined for Kummer extensions");
    }
    const FieldPtr& field = family.field();
    std::vector<std::pair<std::string, LrsSpec>> out;
    out.emplace_back("C={}", realize_frobenian_lrs(family, {}));
    out.emplace_back("C={+1}", realize_frobenian_lrs(family, {1}));
    out.emplace_back("C={-1}", realize_frobenian_lrs(family, {-1}));
    out.emplace_back("C={+1,-1}", realize_frobenian_lrs(family, {1, -1}));
    const LrsSpec b = kummer_symbol_sequence(family.radicand());
    out.emplace_back("b", b);
    for (fq_t c = 1; c < field->q(); ++c) {
        const RationalFn shift = RationalFn::constant(field, c);
        out.emplace_back("b+" + pretty(shift), direct_sum(b, constant_sequence(shift)));
    }
    out.emplace_back("b*b", product(b, b));
    return out;
}

RootDensityReport root_density_experiment(const PolyOverK& f, const std::vector<std::pair<std::string, LrsSpec>>& candidates,
                                          unsigned cutoff) {
    if (cutoff < 1) throw Error(Errc::InvalidArgument, "density cutoff must be >= 1");
    if (!is_product_of_separable(f)) throw Error(Errc::InseparableInput, "f is not a product of separable polynomials");
    const FieldPtr& field = f.field();
    RootDensityReport out{f, cutoff, empty_counts(cutoff), {}, 0, {}, 0, 0};
    for (const Poly& P : monic_irreducibles_up_to(cutoff, field)) {
        const RootCount rc = root_count(f, ResidueField::trusted(P));
        if (rc.bad_prime) {
            out.bad.push_back(P);
            continue;
        }
        auto& c = out.root_by_degree[static_cast<std::size_t>(P.degree()) - 1];
        ++c.total;
        if (rc.count > 0) ++c.hits;
    }
    out.root_fraction = fraction(out.root_by_degree);

    for (const auto& [label, spec] : candidates) {
        CandidateScore score{label, spec, empty_counts(cutoff), {}, {}, 0};
        const AkElement value = poly_eval(f, from_lrs(spec, cutoff));
        for (const auto& e : value.entries()) {
            if (e.bad()) {
                score.bad.push_back(e.prime);
                continue;
            }
            auto& c = score.by_degree[static_cast<std::size_t>(e.prime.degree()) - 1];
            ++c.total;
            if (e.value->is_zero()) {
                ++c.hits;
                score.matches.push_back(e.prime);
            }
        }
        score.fraction = fraction(score.by_degree);
        out.best_candidate = std::max(out.best_candidate, score.fraction);
        out.candidates.push_back(std::move(score));
    }
    out.gap = out.root_fraction - out.best_candidate;
    return out;
}

}  // namespace finsep
