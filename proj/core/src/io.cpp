#include "finsep/io.hpp"

#include <iomanip>
#include <sstream>

namespace finsep {

json to_json(const FieldSpec& spec) {
    return json{{"p", spec.p}, {"r", spec.r}, {"q", spec.q()}, {"modulus", spec.modulus}};
}

FieldSpec field_spec_from_json(const json& j) {
    try {
        FieldSpec spec;
        spec.p = j.at("p").get<std::uint32_t>();
        spec.r = j.at("r").get<unsigned>();
        spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        return spec;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("field spec: ") + e.what());
    }
}

json fq_to_json(const Field& field, fq_t a) {
    if (field.r() == 1) return a;
    return field.digits(a);
}

fq_t fq_from_json(const Field& field, const json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (field.r() == 1 || v < 0) return field.from_int(v);
        if (static_cast<std::uint64_t>(v) >= field.q()) throw Error(Errc::ParseError, "coefficient code out of range");
        return static_cast<fq_t>(v);
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> digits;
        for (const auto& d : j) {
            if (!d.is_number_integer()) throw Error(Errc::ParseError, "digit must be an integer");
            const auto v = d.get<std::int64_t>();
            if (v < 0 || static_cast<std::uint64_t>(v) >= field.p()) throw Error(Errc::ParseError, "digit out of range");
            digits.push_back(static_cast<std::uint32_t>(v));
        }
        if (digits.size() > field.r()) throw Error(Errc::ParseError, "too many digits for F_q");
        return field.pack(digits);
    }
    throw Error(Errc::ParseError, "F_q element must be an integer or a digit list");
}

json to_json(const Poly& a) {
    json out = json::array();
    for (fq_t c : a.coeffs()) out.push_back(fq_to_json(*a.field(), c));
    return out;
}

Poly poly_from_json(const FieldPtr& field, const json& j) {
    if (j.is_string()) return parse_poly(field, j.get<std::string>());
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a coefficient list");
    std::vector<fq_t> coeffs;
    for (const auto& c : j) coeffs.push_back(fq_from_json(*field, c));
    return Poly(field, std::move(coeffs));
}

json to_json(const RationalFn& a) { return json{{"num", to_json(a.num())}, {"den", to_json(a.den())}}; }

RationalFn rational_from_json(const FieldPtr& field, const json& j) {
    if (j.is_string()) return parse_rational(field, j.get<std::string>());
    if (j.is_number_integer()) return RationalFn::constant(field, fq_from_json(*field, j));
    if (j.is_array()) return RationalFn(poly_from_json(field, j));
    if (j.is_object()) {
        if (!j.contains("num")) throw Error(Errc::ParseError, "rational function needs \"num\"");
        Poly num = poly_from_json(field, j.at("num"));
        if (!j.contains("den")) return RationalFn(std::move(num));
        return RationalFn(std::move(num), poly_from_json(field, j.at("den")));
    }
    throw Error(Errc::ParseError, "unrecognized rational function");
}

json to_json(const PolyOverK& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const LrsSpec& spec) {
    json coeffs = json::array(), initial = json::array();
    for (const auto& c : spec.coeffs) coeffs.push_back(to_json(c));
    for (const auto& c : spec.initial) initial.push_back(to_json(c));
    return json{{"order", spec.order()}, {"coeffs", coeffs}, {"initial", initial}, {"start", spec.start}};
}

LrsSpec lrs_from_json(const FieldPtr& field, const json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "recurrence spec must be a JSON object");
    if (j.contains("field") && !(field_spec_from_json(j.at("field")) == field->spec())) {
        throw Error(Errc::FieldMismatch, "spec field differs from the requested field");
    }
    LrsSpec spec;
    try {
        for (const auto& c : j.at("coeffs")) spec.coeffs.push_back(rational_from_json(field, c));
        for (const auto& c : j.at("initial")) spec.initial.push_back(rational_from_json(field, c));
        if (j.contains("start")) spec.start = j.at("start").get<std::int64_t>();
        if (j.contains("order") && j.at("order").get<std::size_t>() != spec.coeffs.size()) {
            throw Error(Errc::ParseError, "\"order\" disagrees with the coefficient count");
        }
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("recurrence spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

json to_json(const AkElement& x) {
    json bad = json::array(), entries = json::array();
    for (const auto& P : x.bad_primes()) bad.push_back(to_json(P));
    for (const auto& e : x.entries()) {
        entries.push_back(json{{"P", to_json(e.prime)}, {"value", e.value ? to_json(*e.value) : json(nullptr)}});
    }
    return json{{"field", to_json(x.field()->spec())}, {"cutoff", x.cutoff()}, {"bad", bad}, {"entries", entries}};
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string fixed(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

json counts_json(const std::vector<DegreeCount>& counts) {
    json out = json::array();
    for (const auto& c : counts) out.push_back(json{{"degree", c.degree}, {"hits", c.hits}, {"total", c.total}});
    return out;
}

json prime_list(const std::vector<Poly>& ps) {
    json out = json::array();
    for (const auto& P : ps) out.push_back(to_json(P));
    return out;
}

}  // namespace

std::string to_csv(const AkElement& x) {
    std::string out = "degree,P,value\n";
    for (const auto& e : x.entries()) {
        out += std::to_string(e.prime.degree()) + "," + quoted(to_string(e.prime)) + ",";
        out += (e.value ? quoted(to_string(*e.value)) : std::string("bad")) + "\n";
    }
    return out;
}

json to_json(const Rational& r) {
    return json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", boost::rational_cast<double>(r)}};
}

json to_json(const Ratio& r) { return json{{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

json to_json(const DensityReport& report) {
    json dirichlet = json::array();
    for (const auto& [s, v] : report.dirichlet) dirichlet.push_back(json{{"s", s}, {"estimate", v}});
    return json{{"predicate", report.predicate},
                {"field", to_json(report.field)},
                {"by_degree", counts_json(report.by_degree)},
                {"hits", report.hits()},
                {"total", report.total()},
                {"natural_fraction", report.natural_fraction},
                {"dirichlet", dirichlet},
                {"expected", report.expected ? to_json(*report.expected) : json(nullptr)},
                {"geometric", report.geometric}};
}

std::string to_csv(const DensityReport& report) {
    std::string out = "degree,hits,total,cumulative_fraction\n";
    std::size_t h = 0, t = 0;
    for (const auto& c : report.by_degree) {
        h += c.hits;
        t += c.total;
        out += std::to_string(c.degree) + "," + std::to_string(c.hits) + "," + std::to_string(c.total) + "," +
               fixed(t ? static_cast<double>(h) / static_cast<double>(t) : 0.0) + "\n";
    }
    return out;
}

json to_json(const RootDensityReport& report) {
    json candidates = json::array();
    for (const auto& c : report.candidates) {
        candidates.push_back(json{{"label", c.label},
                                  {"spec", to_json(c.spec)},
                                  {"by_degree", counts_json(c.by_degree)},
                                  {"fraction", c.fraction},
                                  {"matches", prime_list(c.matches)},
                                  {"bad", prime_list(c.bad)}});
    }
    return json{{"f", to_json(report.f)},
                {"field", to_json(report.f.field()->spec())},
                {"cutoff", report.cutoff},
                {"root_by_degree", counts_json(report.root_by_degree)},
                {"root_fraction", report.root_fraction},
                {"bad", prime_list(report.bad)},
                {"candidates", candidates},
                {"best_candidate", report.best_candidate},
                {"gap", report.gap}};
}

json to_json(const WreathBoundReport& report) {
    return json{{"group", report.group},
                {"r", report.r},
                {"order", report.order},
                {"wreath_order", report.wreath_order},
                {"S1", report.s1},
                {"S2", report.s2},
                {"S1_prime", report.s1_prime},
                {"S2_prime", report.s2_prime},
                {"bound", to_json(report.bound)},
                {"count", report.count},
                {"vacuous", report.vacuous},
                {"satisfied", report.satisfied},
                {"ratios",
                 json{{"S2_prime_over_wreath", to_json(report.ratio_s2_prime)},
                      {"S1_over_G", to_json(report.target)},
                      {"S2_over_G", to_json(report.ratio_s2)}}},
                {"cross_check", report.cross_check ? json(*report.cross_check) : json(nullptr)}};
}

}  // namespace finsep
