// finsep: command-line driver for the example reproductions and experiments.
//
// Exit codes: 0 ok, 1 usage, 2 computation error, 3 golden mismatch.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "finsep/ak.hpp"
#include "finsep/galois.hpp"
#include "finsep/grouplab.hpp"
#include "finsep/io.hpp"
#include "finsep/lrs.hpp"
#include "finsep/polyring.hpp"
#include "finsep/residue.hpp"

namespace {

using namespace finsep;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kMismatch = 3;

struct RunConfig {
    std::uint64_t q = 3;
    unsigned max_degree = 4;
    std::uint64_t seed = 0;
    std::string format = "table";
    std::string output;
    bool pretty = false;
};

struct Result {
    std::string table;
    json doc;
    std::string csv;
    int code = kOk;
};

std::string show(const Poly& a, const RunConfig& cfg) { return cfg.pretty ? pretty(a) : to_string(a); }
std::string show(const PolyOverK& a, const RunConfig& cfg) { return cfg.pretty ? pretty(a) : to_string(a); }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

// Report document with "command" as its first key.
json tagged(const std::string& command, const json& body) {
    json out{{"command", command}};
    for (const auto& [k, v] : body.items()) out[k] = v;
    return out;
}

void require_degree(const RunConfig& cfg) {
    if (cfg.max_degree < 1) throw Error(Errc::InvalidArgument, "--max-degree must be >= 1");
}

Result cmd_irr(const RunConfig& cfg, unsigned degree, bool count_only) {
    const FieldPtr field = Field::of_order(cfg.q);
    if (degree < 1) throw Error(Errc::InvalidArgument, "--degree must be >= 1");
    const auto polys = enumerate_monic_irreducibles(degree, field);
    Result out;
    out.doc = json{{"command", "irr"}, {"field", to_json(field->spec())}, {"degree", degree}, {"count", polys.size()}};
    if (count_only) {
        out.table = std::to_string(polys.size()) + "\n";
        out.csv = "degree,count\n" + std::to_string(degree) + "," + std::to_string(polys.size()) + "\n";
        return out;
    }
    json list = json::array();
    out.csv = "degree,P\n";
    for (const auto& P : polys) {
        list.push_back(to_json(P));
        out.table += show(P, cfg) + "\n";
        out.csv += std::to_string(degree) + "," + csv_quote(to_string(P)) + "\n";
    }
    out.doc["polys"] = list;
    return out;
}

Result ak_result(const std::string& command, const AkElement& x, const RunConfig& cfg) {
    Result out;
    out.doc = json{{"command", command}, {"element", to_json(x)}};
    out.csv = to_csv(x);
    for (const auto& e : x.entries()) {
        out.table += std::to_string(e.prime.degree()) + "  " + show(e.prime, cfg) + "  " +
                     (e.value ? show(*e.value, cfg) : std::string("bad")) + "\n";
    }
    return out;
}

Result cmd_lrs_eval(const RunConfig& cfg, const std::string& path) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read spec file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("spec file: ") + e.what());
    }
    const LrsSpec spec = lrs_from_json(field, j);
    const EigenData ed = eigen(spec);
    Result out = ak_result("lrs-eval", from_lrs(spec, cfg.max_degree), cfg);
    out.doc["spec"] = to_json(spec);
    out.doc["eigen_polynomial"] = to_json(ed.chi);
    out.doc["separable_product"] = ed.separable_product;
    out.table = "eigen polynomial " + show(ed.chi, cfg) + (ed.separable_product ? " (separable product)\n" : " (not a separable product)\n") +
                out.table;
    return out;
}

Result cmd_legendre(const RunConfig& cfg, const std::string& a_text) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    const RationalFn a = parse_rational(field, a_text);
    if (field->p() == 2) throw Error(Errc::EvenCharacteristic, "quadratic residue symbol needs odd q");
    Result out;
    json rows = json::array();
    std::size_t plus = 0, minus = 0, zero = 0, bad = 0;
    out.csv = "degree,P,symbol\n";
    for (const Poly& P : monic_irreducibles_up_to(cfg.max_degree, field)) {
        const ResidueField F = ResidueField::trusted(P);
        const auto r = try_reduce(a, F);
        json row{{"P", to_json(P)}, {"degree", P.degree()}};
        std::string text;
        if (!r) {
            ++bad;
            row["symbol"] = nullptr;
            text = "bad";
        } else {
            const int s = legendre_symbol(*r, F);
            (s > 0 ? plus : s < 0 ? minus : zero)++;
            row["symbol"] = s;
            text = std::to_string(s);
        }
        rows.push_back(row);
        out.table += std::to_string(P.degree()) + "  " + show(P, cfg) + "  " + text + "\n";
        out.csv += std::to_string(P.degree()) + "," + csv_quote(to_string(P)) + "," + text + "\n";
    }
    out.doc = json{{"command", "legendre"},
                   {"field", to_json(field->spec())},
                   {"a", to_json(a)},
                   {"cutoff", cfg.max_degree},
                   {"symbols", rows},
                   {"counts", json{{"plus", plus}, {"minus", minus}, {"zero", zero}, {"bad", bad}}}};
    return out;
}

// Compares an element against expected per-prime values.
Result golden(const std::string& name, const AkElement& x, const std::function<std::optional<Poly>(const Poly&)>& expected,
              const RunConfig& cfg) {
    Result out;
    json rows = json::array();
    std::size_t mismatches = 0;
    out.csv = "degree,P,value,expected,ok\n";
    for (const auto& e : x.entries()) {
        const auto want = expected(e.prime);
        const bool ok = e.value.has_value() == want.has_value() && (!want || *e.value == *want);
        if (!ok) ++mismatches;
        const std::string got_text = e.value ? show(*e.value, cfg) : "bad";
        const std::string want_text = want ? show(*want, cfg) : "bad";
        rows.push_back(json{{"P", to_json(e.prime)},
                            {"value", e.value ? to_json(*e.value) : json(nullptr)},
                            {"expected", want ? to_json(*want) : json(nullptr)},
                            {"ok", ok}});
        out.table += std::to_string(e.prime.degree()) + "  " + show(e.prime, cfg) + "  " + got_text + "  expected " +
                     want_text + (ok ? "" : "  MISMATCH") + "\n";
        out.csv += std::to_string(e.prime.degree()) + "," + csv_quote(to_string(e.prime)) + "," +
                   csv_quote(e.value ? to_string(*e.value) : "bad") + "," + csv_quote(want ? to_string(*want) : "bad") + "," +
                   (ok ? "true" : "false") + "\n";
    }
    out.doc = json{{"command", "example"},
                   {"name", name},
                   {"field", to_json(x.field()->spec())},
                   {"cutoff", x.cutoff()},
                   {"rows", rows},
                   {"mismatches", mismatches},
                   {"match", mismatches == 0}};
    out.table += mismatches == 0 ? "match\n" : std::to_string(mismatches) + " mismatches\n";
    out.code = mismatches == 0 ? kOk : kMismatch;
    return out;
}

Result cmd_example(const RunConfig& cfg, const std::string& name) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    if (name == "parity") {
        const AkElement x = from_lrs(constant_field_parity_sequence(field), cfg.max_degree);
        return golden(name, x, [&](const Poly& P) { return std::optional<Poly>(Poly::constant(field, (1 + P.degree()) % 2)); }, cfg);
    }
    if (name == "symbol") {
        const Poly theta = Poly::theta(field);
        const AkElement x = from_lrs(kummer_symbol_sequence(theta), cfg.max_degree);
        return golden(name, x, [&](const Poly& P) {
            const int s = legendre_symbol(RationalFn(theta), ResidueField::trusted(P));
            return std::optional<Poly>(Poly::constant(field, field->from_int(s)));
        }, cfg);
    }
    if (name == "staircase") {
        const AkElement x = staircase_element(field, cfg.max_degree);
        // Independent recomputation of the staircase exponent from the degree.
        auto exponent = [](unsigned n) {
            unsigned k = 1, start = 1;
            while (start + k <= n) {
                start += k;
                ++k;
            }
            return n - start;
        };
        Result out = golden(name, x, [&](const Poly& P) {
            return std::optional<Poly>(Poly::monomial(field, 1, exponent(static_cast<unsigned>(P.degree()))) % P);
        }, cfg);
        const auto witnesses = repeat_witnesses(x, 3);
        json w = json::array();
        std::string line = "repeat witnesses:";
        for (const auto& [a, count] : witnesses) {
            w.push_back(json{{"a", to_json(a)}, {"count", count}});
            line += " " + show(a, cfg) + " x" + std::to_string(count);
        }
        out.doc["witnesses"] = w;
        out.table += line + "\n";
        if (cfg.max_degree >= 6) {
            for (unsigned k = 0; k < 3; ++k) {
                const Poly want = Poly::monomial(field, 1, k);
                const bool present = std::any_of(witnesses.begin(), witnesses.end(), [&](const auto& p) { return p.first == want; });
                if (!present) {
                    out.code = kMismatch;
                    out.doc["match"] = false;
                    out.table += "missing witness " + show(want, cfg) + "\n";
                }
            }
        }
        return out;
    }
    throw Error(Errc::InvalidArgument, "unknown example " + name + " (expected parity, symbol or staircase)");
}

std::string class_set_text(const std::vector<int>& C) {
    std::string s = "{";
    for (std::size_t i = 0; i < C.size(); ++i) s += (i ? "," : "") + std::to_string(C[i]);
    return s + "}";
}

Result cmd_frobenian(const RunConfig& cfg, const std::string& family_text, const std::string& class_text, bool roundtrip) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    const GaloisFamily family = parse_family(field, family_text);
    const std::vector<int> C = parse_class_set(family, class_text);
    const FrobenianRealization real = realize_frobenian(family, C);
    const EigenData ed = eigen(real.spec);
    const AkElement x = from_lrs(real.spec, cfg.max_degree);

    Result out;
    json rows = json::array();
    out.csv = "degree,P,value,class,in_C\n";
    out.table = "family " + family.label() + ", C = " + class_set_text(C) + ", order " + std::to_string(real.spec.order()) +
                ", eigen " + (ed.separable_product ? "separable product" : "NOT a separable product") + "\n";
    for (const auto& e : x.entries()) {
        const auto cls = family.frobenius_class(e.prime);
        const bool in_c = cls && std::find(C.begin(), C.end(), *cls) != C.end();
        rows.push_back(json{{"P", to_json(e.prime)},
                            {"value", e.value ? to_json(*e.value) : json(nullptr)},
                            {"class", cls ? json(*cls) : json(nullptr)},
                            {"in_C", in_c}});
        const std::string cls_text = cls ? std::to_string(*cls) : "ramified";
        out.table += std::to_string(e.prime.degree()) + "  " + show(e.prime, cfg) + "  " +
                     (e.value ? show(*e.value, cfg) : std::string("bad")) + "  class " + cls_text + (in_c ? "  in C" : "") + "\n";
        out.csv += std::to_string(e.prime.degree()) + "," + csv_quote(to_string(e.prime)) + "," +
                   csv_quote(e.value ? to_string(*e.value) : "bad") + "," + cls_text + "," + (in_c ? "true" : "false") + "\n";
    }
    out.doc = json{{"command", "frobenian"},
                   {"field", to_json(field->spec())},
                   {"family", family.label()},
                   {"class_set", C},
                   {"spec", to_json(real.spec)},
                   {"eigen_polynomial", to_json(ed.chi)},
                   {"separable_product", ed.separable_product},
                   {"cutoff", cfg.max_degree},
                   {"rows", rows}};
    if (roundtrip) {
        const RoundTrip rt = frobenian_round_trip(family, C, std::min(2u, cfg.max_degree), cfg.max_degree);
        json mism = json::array(), bad = json::array();
        for (const auto& P : rt.mismatches) mism.push_back(to_json(P));
        for (const auto& P : rt.bad) bad.push_back(to_json(P));
        out.doc["roundtrip"] = json{{"min_degree", std::min(2u, cfg.max_degree)}, {"checked", rt.checked},
                                    {"mismatches", mism}, {"bad", bad}, {"ok", rt.ok()}};
        out.table += "round trip: " + std::to_string(rt.checked) + " primes checked, " + std::to_string(rt.mismatches.size()) +
                     " mismatches, " + std::to_string(rt.bad.size()) + " bad\n";
        if (!rt.ok()) out.code = kMismatch;
    }
    return out;
}

Result cmd_density(const RunConfig& cfg, const std::string& family_text, const std::string& class_text) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    const GaloisFamily family = parse_family(field, family_text);
    const DensityReport rep = class_density(family, parse_class_set(family, class_text), cfg.max_degree);
    Result out;
    out.doc = tagged("density", to_json(rep));
    out.csv = to_csv(rep);
    out.table = rep.predicate + "\n";
    for (const auto& c : rep.by_degree) {
        out.table += "deg " + std::to_string(c.degree) + ": " + std::to_string(c.hits) + "/" + std::to_string(c.total) + "\n";
    }
    out.table += "natural fraction " + fmt(rep.natural_fraction) + "\n";
    for (const auto& [s, v] : rep.dirichlet) out.table += "dirichlet s=" + fmt(s) + ": " + fmt(v) + "\n";
    if (rep.expected) out.table += "expected " + std::to_string(rep.expected->num) + "/" + std::to_string(rep.expected->den) + "\n";
    out.table += std::string("geometric ") + (rep.geometric ? "true" : "false") + "\n";
    return out;
}

Result cmd_root_density(const RunConfig& cfg, const std::string& f_text, const std::string& family_text, bool show_roots) {
    require_degree(cfg);
    const FieldPtr field = Field::of_order(cfg.q);
    const PolyOverK f = parse_poly_over_k(field, f_text);
    std::vector<std::pair<std::string, LrsSpec>> candidates;
    if (!family_text.empty()) {
        candidates = kummer_candidate_family(parse_family(field, family_text));
    } else if (field->p() != 2) {
        candidates = kummer_candidate_family(GaloisFamily::kummer(Poly::theta(field)));
    } else {
        for (fq_t c = 0; c < field->q(); ++c) {
            const RationalFn v = RationalFn::constant(field, c);
            candidates.emplace_back("const " + pretty(v), constant_sequence(v));
        }
    }
    const RootDensityReport rep = root_density_experiment(f, candidates, cfg.max_degree);
    Result out;
    out.doc = tagged("root-density", to_json(rep));
    out.table = "f = " + show(f, cfg) + "\nroot density " + fmt(rep.root_fraction) + "\n";
    out.csv = "label,fraction,matches\nroots," + fmt(rep.root_fraction) + ",\n";
    for (const auto& c : rep.candidates) {
        out.table += "  " + c.label + ": " + fmt(c.fraction) + " (" + std::to_string(c.matches.size()) + " matches)\n";
        out.csv += csv_quote(c.label) + "," + fmt(c.fraction) + "," + std::to_string(c.matches.size()) + "\n";
    }
    out.table += "best candidate " + fmt(rep.best_candidate) + ", gap " + fmt(rep.gap) + "\n";
    if (show_roots) {
        std::mt19937_64 rng(cfg.seed);
        json roots = json::array();
        for (const Poly& P : monic_irreducibles_up_to(cfg.max_degree, field)) {
            const ResidueField F = ResidueField::trusted(P);
            if (root_count(f, F).bad_prime) continue;
            json rs = json::array();
            std::string line = "  " + show(P, cfg) + ":";
            for (const auto& r : find_roots(f, F, rng)) {
                rs.push_back(to_json(r.rep));
                line += " " + show(r.rep, cfg);
            }
            roots.push_back(json{{"P", to_json(P)}, {"roots", rs}});
            out.table += line + "\n";
        }
        out.doc["roots"] = roots;
    }
    return out;
}

Result cmd_grouplab(const RunConfig&, const std::string& group_text, const std::string& stabilizers, unsigned r) {
    const GroupTable g = parse_group(group_text);
    const auto subs = parse_stabilizers(g, stabilizers);
    const WreathBoundReport rep = wreath_bound_check(g, subs, r);
    Result out;
    out.doc = tagged("grouplab", to_json(rep));
    out.doc["stabilizers"] = stabilizers;
    auto rat = [](const Rational& x) { return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator()); };
    out.table = "group " + rep.group + " (order " + std::to_string(rep.order) + "), r = " + std::to_string(r) + ", wreath order " +
                std::to_string(rep.wreath_order) + "\n" + "#S1 = " + std::to_string(rep.s1) + ", #S2 = " + std::to_string(rep.s2) +
                "\n" + "#S1' = " + std::to_string(rep.s1_prime) + ", #S2' = " + std::to_string(rep.s2_prime) + "\n" +
                "count = " + std::to_string(rep.count) + ", bound = " + rat(rep.bound) + (rep.vacuous ? " (vacuous)" : "") +
                (rep.satisfied ? ", satisfied" : ", VIOLATED") + "\n" + "#S2'/#G' = " + rat(rep.ratio_s2_prime) +
                ", target #S1/#G = " + rat(rep.target) + "\n" + "cross check: " +
                (rep.cross_check ? (*rep.cross_check ? "agree" : "DISAGREE") : "skipped") + "\n";
    out.csv = "key,value\ngroup," + csv_quote(rep.group) + "\nr," + std::to_string(r) + "\nS1," + std::to_string(rep.s1) + "\nS2," +
              std::to_string(rep.s2) + "\nS1_prime," + std::to_string(rep.s1_prime) + "\nS2_prime," + std::to_string(rep.s2_prime) +
              "\ncount," + std::to_string(rep.count) + "\nbound," + rat(rep.bound) + "\nratio_S2_prime," + rat(rep.ratio_s2_prime) +
              "\ntarget," + rat(rep.target) + "\n";
    if (!rep.satisfied || (rep.cross_check && !*rep.cross_check)) out.code = kMismatch;
    return out;
}

int emit(const Result& res, const RunConfig& cfg, const std::string& command) {
    std::string text;
    std::string ext;
    if (cfg.format == "json") {
        text = res.doc.dump(2) + "\n";
        ext = "json";
    } else if (cfg.format == "csv") {
        text = res.csv;
        ext = "csv";
    } else {
        text = res.table;
        ext = "txt";
    }
    std::filesystem::path path = cfg.output;
    if (path.empty()) {
        if (const char* dir = std::getenv("FINSEP_OUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / (command + "." + ext);
    }
    if (path.empty()) {
        std::cout << text;
    } else {
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return kComputation;
        }
        out << text;
    }
    return res.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finsep: finite separable elements over F_q(θ)"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized root splitting");
    app.add_option("--output,-o", cfg.output, "Write output to this file (default: stdout, or $FINSEP_OUT_DIR/<command>.<ext>)");
    app.add_flag("--pretty", cfg.pretty, "Print polynomials as θ^2+1 instead of [1,0,1]");

    auto add_field = [&](CLI::App* sub, bool degree) {
        sub->add_option("--q", cfg.q, "Field order q")->required();
        if (degree) sub->add_option("--max-degree", cfg.max_degree, "Largest prime degree")->required();
    };

    unsigned degree = 0;
    bool count_only = false;
    auto* irr = app.add_subcommand("irr", "Monic irreducibles of a given degree");
    add_field(irr, false);
    irr->add_option("--degree", degree)->required();
    irr->add_flag("--count-only", count_only);

    std::string spec_path;
    auto* lrs_eval = app.add_subcommand("lrs-eval", "Frobenius values of a recurrence read from a JSON spec");
    add_field(lrs_eval, true);
    lrs_eval->add_option("--spec", spec_path)->required();

    std::string a_text;
    auto* legendre = app.add_subcommand("legendre", "Quadratic residue symbols over primes");
    add_field(legendre, true);
    legendre->add_option("--a", a_text, "Element of K, e.g. 0,1 for θ")->required();

    std::string example_name;
    auto* example = app.add_subcommand("example", "Reproduce a documented example and compare to golden values");
    add_field(example, true);
    example->add_option("--name", example_name)->required()->check(CLI::IsMember({"parity", "symbol", "staircase"}));

    std::string family_text, class_text;
    bool roundtrip = false;
    auto* frobenian = app.add_subcommand("frobenian", "Realize a Frobenian set by a recurrence");
    add_field(frobenian, true);
    frobenian->add_option("--family", family_text, "constant:n or kummer:POLY")->required();
    frobenian->add_option("--class-set", class_text, "Comma-separated group elements")->required();
    frobenian->add_flag("--roundtrip", roundtrip);

    auto* density = app.add_subcommand("density", "Density of primes with Frobenius class in C");
    add_field(density, true);
    density->add_option("--family", family_text)->required();
    density->add_option("--class-set", class_text)->required();

    std::string f_text, candidate_family;
    bool show_roots = false;
    auto* root_density = app.add_subcommand("root-density", "Root density of f against the candidate recurrences");
    add_field(root_density, true);
    root_density->add_option("--f", f_text, "Polynomial over K, coefficients separated by ';'")->required();
    root_density->add_option("--family", candidate_family, "Kummer family for the candidates (default kummer:0,1)");
    root_density->add_flag("--show-roots", show_roots);

    std::string group_text, stabilizers = "all";
    unsigned r = 1;
    auto* grouplab = app.add_subcommand("grouplab", "Exhaustive wreath-product bound check");
    grouplab->add_option("--group", group_text, "cyclic:n or symmetric:n")->required();
    grouplab->add_option("--stabilizers", stabilizers, "all, trivial, whole, or comma-separated points");
    grouplab->add_option("--r", r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Result res;
        std::string command;
        if (*irr) {
            command = "irr";
            res = cmd_irr(cfg, degree, count_only);
        } else if (*lrs_eval) {
            command = "lrs-eval";
            res = cmd_lrs_eval(cfg, spec_path);
        } else if (*legendre) {
            command = "legendre";
            res = cmd_legendre(cfg, a_text);
        } else if (*example) {
            command = "example";
            res = cmd_example(cfg, example_name);
        } else if (*frobenian) {
            command = "frobenian";
            res = cmd_frobenian(cfg, family_text, class_text, roundtrip);
        } else if (*density) {
            command = "density";
            res = cmd_density(cfg, family_text, class_text);
        } else if (*root_density) {
            command = "root-density";
            res = cmd_root_density(cfg, f_text, candidate_family, show_roots);
        } else {
            command = "grouplab";
            res = cmd_grouplab(cfg, group_text, stabilizers, r);
        }
        return emit(res, cfg, command);
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kComputation;
    }
}
