#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "printers.hpp"
#include "finsep/galois.hpp"

using namespace finsep;

namespace {

Poly P(const FieldPtr& f, std::vector<std::int64_t> c) { return Poly::from_ints(f, c); }
RationalFn K(const FieldPtr& f, std::vector<std::int64_t> c) { return RationalFn(P(f, c)); }

// Is D a nonzero square mod P? Decided by squaring every residue.
std::optional<int> square_class(const Poly& D, const Poly& Pm) {
    const FieldPtr f = D.field();
    const Poly r = D % Pm;
    if (r.is_zero()) return std::nullopt;
    std::uint64_t n = 1;
    for (long i = 0; i < Pm.degree(); ++i) n *= f->q();
    for (std::uint64_t k = 0; k < n; ++k) {
        std::vector<fq_t> c(static_cast<std::size_t>(Pm.degree()));
        std::uint64_t v = k;
        for (auto& x : c) {
            x = static_cast<fq_t>(v % f->q());
            v /= f->q();
        }
        const Poly a(f, c);
        if (a * a % Pm == r) return 1;
    }
    return -1;
}

}  // namespace

TEST(Galois, FamilyConstruction) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    EXPECT_THROW(GaloisFamily::kummer(P(f2, {0, 1})), Error);                 // even q
    EXPECT_THROW(GaloisFamily::kummer(P(f3, {1})), Error);                    // square constant
    EXPECT_THROW(GaloisFamily::kummer(P(f3, {0, 0, 1})), Error);              // θ^2 not squarefree
    EXPECT_NO_THROW(GaloisFamily::kummer(P(f3, {2})));                        // constant non-square
    EXPECT_THROW(GaloisFamily::constant_field(f3, 0), Error);
    const GaloisFamily c = GaloisFamily::constant_field(f3, 3);
    EXPECT_EQ(c.order(), 3u);
    EXPECT_EQ(c.elements(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(c.identity(), 0);
    EXPECT_FALSE(c.is_geometric());
    const GaloisFamily k = GaloisFamily::kummer(P(f3, {0, 1}));
    EXPECT_EQ(k.identity(), 1);
    EXPECT_TRUE(k.contains(-1));
    EXPECT_FALSE(k.contains(0));
    EXPECT_TRUE(k.is_geometric());
    EXPECT_FALSE(GaloisFamily::kummer(P(f3, {2})).is_geometric());
}

TEST(Galois, Parsing) {
    const FieldPtr f = Field::of_order(3);
    const GaloisFamily k = parse_family(f, "kummer:0,1");
    EXPECT_EQ(k.radicand(), P(f, {0, 1}));
    EXPECT_EQ(parse_family(f, "constant:2").n(), 2u);
    EXPECT_THROW(parse_family(f, "cyclotomic:3"), Error);
    EXPECT_THROW(parse_family(f, "constant:x"), Error);
    EXPECT_EQ(parse_class_set(k, "1,-1"), (std::vector<int>{1, -1}));
    EXPECT_THROW(parse_class_set(k, "0"), Error);
    EXPECT_THROW(parse_class_set(parse_family(f, "constant:2"), "2"), Error);
}

TEST(Galois, FrobeniusClassesMatchOracles) {
    const FieldPtr f = Field::of_order(3);
    const GaloisFamily c = GaloisFamily::constant_field(f, 2);
    EXPECT_EQ(c.frobenius_class(P(f, {1, 0, 1})), 0);
    const std::vector<Poly> radicands{P(f, {0, 1}), P(f, {2, 1, 1}), P(f, {2, 0, 1}), P(f, {2})};
    for (const auto& D : radicands) {
        const GaloisFamily k = GaloisFamily::kummer(D);
        for (const auto& Pm : monic_irreducibles_up_to(4, f)) {
            ASSERT_EQ(k.frobenius_class(Pm), square_class(D, Pm)) << to_string(D) << " " << to_string(Pm);
            EXPECT_EQ(c.frobenius_class(Pm), static_cast<int>(Pm.degree() % 2));
        }
    }
    const GaloisFamily k = GaloisFamily::kummer(P(f, {0, 1}));
    EXPECT_EQ(k.frobenius_class(P(f, {1, 1})), -1);
    EXPECT_FALSE(k.frobenius_class(P(f, {0, 1})).has_value());
}

TEST(Galois, EvaluationMatchesSequences) {
    const FieldPtr f2 = Field::of_order(2), f3 = Field::of_order(3);
    const GaloisFamily c = GaloisFamily::constant_field(f2, 2);
    const ClassFunction g{c, {{0, K(f2, {1})}, {1, K(f2, {0})}}};
    const AkElement lhs = ev_L(g, 6), rhs = from_lrs(constant_field_parity_sequence(f2), 6);
    for (std::size_t i = 0; i < lhs.entries().size(); ++i) EXPECT_EQ(lhs.entries()[i].value, rhs.entries()[i].value);

    const GaloisFamily k = GaloisFamily::kummer(P(f3, {0, 1}));
    const ClassFunction id{k, {{1, K(f3, {1})}, {-1, K(f3, {-1})}}};
    const AkElement a = ev_L(id, 5), b = from_lrs(kummer_symbol_sequence(P(f3, {0, 1})), 5);
    EXPECT_EQ(a.bad_primes(), std::vector<Poly>{P(f3, {0, 1})});
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (a.entries()[i].bad()) continue;
        EXPECT_EQ(a.entries()[i].value, b.entries()[i].value);
    }
    const AkElement cst = ev_L(constant_class_function(k, K(f3, {0, 1})), 4);
    const AkElement fr = from_rational(K(f3, {0, 1}), f3, 4);
    for (std::size_t i = 0; i < cst.entries().size(); ++i) {
        if (cst.entries()[i].bad()) continue;
        EXPECT_EQ(cst.entries()[i].value, fr.entries()[i].value);
    }
}

TEST(Galois, RealizedZeroSetsMatchClassSets) {
    const FieldPtr f2 = Field::of_order(2), f3 = Field::of_order(3), f4 = Field::of_order(4), f5 = Field::of_order(5);
    struct Case {
        GaloisFamily family;
        std::vector<int> C;
        unsigned D;
    };
    const std::vector<Case> cases{
        {GaloisFamily::constant_field(f2, 2), {1}, 8},
        {GaloisFamily::constant_field(f2, 3), {0, 2}, 7},
        {GaloisFamily::constant_field(f3, 2), {0}, 5},
        {GaloisFamily::constant_field(f4, 2), {1}, 4},
        {GaloisFamily::constant_field(f3, 2), {}, 4},
        {GaloisFamily::kummer(P(f3, {0, 1})), {1}, 6},
        {GaloisFamily::kummer(P(f3, {0, 1})), {-1}, 6},
        {GaloisFamily::kummer(P(f3, {0, 1})), {1, -1}, 5},
        {GaloisFamily::kummer(P(f5, {1, 0, 1})), {-1}, 3},
    };
    for (const auto& cs : cases) {
        const LrsSpec s = realize_frobenian_lrs(cs.family, cs.C);
        std::size_t checked = 0;
        for (const auto& Pm : monic_irreducibles_up_to(cs.D, cs.family.field())) {
            const auto cls = cs.family.frobenius_class(Pm);
            const auto v = eval_at_frobenius_index(s, ResidueField::trusted(Pm));
            if (!cls || !v || Pm.degree() < 2) continue;
            const bool in_c = std::find(cs.C.begin(), cs.C.end(), *cls) != cs.C.end();
            ASSERT_EQ(v->is_zero(), in_c) << cs.family.label() << " P=" << to_string(Pm);
            ++checked;
        }
        EXPECT_GT(checked, 0u);
        EXPECT_TRUE(frobenian_round_trip(cs.family, cs.C, 2, std::min(cs.D, 5u)).ok()) << cs.family.label();
    }
    const LrsSpec one = realize_frobenian_lrs(GaloisFamily::kummer(P(f3, {0, 1})), {});
    EXPECT_EQ(term(one, 17), K(f3, {1}));
}

TEST(Galois, PeriodGuard) {
    const FieldPtr f = Field::of_order(16);
    try {
        (void)realize_frobenian(GaloisFamily::constant_field(f, 6), {1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnsupportedFamily);
    }
}

TEST(Galois, CertifiedPairs) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    for (const auto& fam : {GaloisFamily::kummer(P(f3, {0, 1})), GaloisFamily::constant_field(f3, 2)}) {
        const auto cp = certify(realize_frobenian(fam, {fam.elements()[1]}), 4);
        EXPECT_TRUE(cp.check.zero) << fam.label();
        EXPECT_EQ(eval(cp.f, cp.root), RationalFn(f3));
        EXPECT_LE(cp.f.degree(), static_cast<long>(fam.order()));
    }
    const auto cp2 = certify(realize_frobenian(GaloisFamily::constant_field(f2, 2), {1}), 6);
    EXPECT_TRUE(cp2.check.zero);
}

TEST(Galois, DirichletEstimateFormula) {
    const std::vector<DegreeCount> counts{{1, 1, 2}, {2, 0, 1}, {3, 2, 2}};
    const double s = 1.1, q = 2;
    const double num = 1 * std::pow(q, -s) + 0 + 2 * std::pow(q, -3 * s);
    const double den = 2 * std::pow(q, -s) + 1 * std::pow(q, -2 * s) + 2 * std::pow(q, -3 * s);
    EXPECT_NEAR(dirichlet_estimate(counts, 2, s), num / den, 1e-12);
    EXPECT_EQ(dirichlet_grid(), (std::vector<double>{1.2, 1.1, 1.05, 1.02}));
}

TEST(Galois, DensityReports) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    const DensityReport all = density_report("all", f3, 4, [](const Poly&) { return true; }, Ratio{1, 1}, true);
    EXPECT_EQ(all.natural_fraction, 1.0);
    EXPECT_EQ(all.hits(), all.total());
    for (const auto& [s, v] : all.dirichlet) EXPECT_NEAR(v, 1.0, 1e-12);

    const DensityReport k = class_density(GaloisFamily::kummer(P(f3, {0, 1})), {1}, 7);
    EXPECT_NEAR(k.natural_fraction, 0.5, 0.05);
    EXPECT_EQ(k.expected, (Ratio{1, 2}));
    EXPECT_TRUE(k.geometric);

    const DensityReport c = class_density(GaloisFamily::constant_field(f2, 2), {0}, 8);
    EXPECT_FALSE(c.geometric);
    for (const auto& d : c.by_degree) EXPECT_EQ(d.hits, d.degree % 2 == 0 ? d.total : 0u);
}

TEST(Galois, CandidateFamilyLabels) {
    const FieldPtr f = Field::of_order(3);
    const auto fam = kummer_candidate_family(GaloisFamily::kummer(P(f, {0, 1})));
    std::vector<std::string> labels;
    for (const auto& [l, s] : fam) labels.push_back(l);
    EXPECT_EQ(labels, (std::vector<std::string>{"C={}", "C={+1}", "C={-1}", "C={+1,-1}", "b", "b+1", "b+2", "b*b"}));
}

TEST(Galois, RootDensityExperiments) {
    const FieldPtr f = Field::of_order(3);
    const GaloisFamily k = GaloisFamily::kummer(P(f, {0, 1}));
    const auto sq = root_density_experiment(parse_poly_over_k(f, "0,-1;0;1"), kummer_candidate_family(k), 6);
    EXPECT_NEAR(sq.root_fraction, 0.5, 0.05);
    EXPECT_LT(sq.best_candidate, 0.05);

    const auto lin = root_density_experiment(parse_poly_over_k(f, "-1;1"), {{"one", constant_sequence(K(f, {1}))}}, 4);
    EXPECT_EQ(lin.root_fraction, 1.0);
    EXPECT_EQ(lin.best_candidate, 1.0);

    const auto unit = root_density_experiment(parse_poly_over_k(f, "-1;0;1"), {{"b", kummer_symbol_sequence(P(f, {0, 1}))}}, 5);
    EXPECT_EQ(unit.root_fraction, 1.0);
    ASSERT_EQ(unit.candidates.size(), 1u);
    // Every prime but θ (where the symbol is 0) gives a root.
    EXPECT_EQ(unit.candidates[0].matches.size() + 1, monic_irreducibles_up_to(5, f).size());

    try {
        (void)root_density_experiment(parse_poly_over_k(f, "0,-1;0;0;1"), {}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InseparableInput);
    }
}
