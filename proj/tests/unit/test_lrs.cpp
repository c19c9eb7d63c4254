#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "finsep/lrs.hpp"

using namespace finsep;

namespace {

Poly P(const FieldPtr& f, std::vector<std::int64_t> c) { return Poly::from_ints(f, c); }
RationalFn K(const FieldPtr& f, std::vector<std::int64_t> c) { return RationalFn(P(f, c)); }

LrsSpec sqrt_theta_spec(const FieldPtr& f) {
    return LrsSpec{{K(f, {0}), K(f, {0, 1})}, {K(f, {1}), K(f, {0})}, 1};
}

LrsSpec period_spec(const FieldPtr& f) { return LrsSpec{{K(f, {1}), K(f, {1})}, {K(f, {1}), K(f, {1})}, 0}; }

// a_n mod P by stepping the recurrence in F_P, n - start times.
std::optional<ResidueElem> iterate_mod(const LrsSpec& s, const ResidueField& F, std::uint64_t n) {
    std::vector<ResidueElem> c, w;
    for (const auto& x : s.coeffs) {
        auto r = try_reduce(x, F);
        if (!r) return std::nullopt;
        c.push_back(*r);
    }
    for (const auto& x : s.initial) {
        auto r = try_reduce(x, F);
        if (!r) return std::nullopt;
        w.push_back(*r);
    }
    const std::size_t l = c.size();
    for (std::uint64_t k = static_cast<std::uint64_t>(s.start); k < n; ++k) {
        ResidueElem next = F.zero();
        for (std::size_t i = 0; i < l; ++i) next = F.add(next, F.mul(c[i], w[l - 1 - i]));
        w.erase(w.begin());
        w.push_back(next);
    }
    return w.front();
}

LrsSpec random_spec(const FieldPtr& f, std::mt19937_64& rng, std::size_t l) {
    std::uniform_int_distribution<fq_t> pick(0, f->q() - 1);
    LrsSpec s;
    for (std::size_t i = 0; i < l; ++i) {
        s.coeffs.push_back(RationalFn(Poly(f, {pick(rng), pick(rng)})));
        s.initial.push_back(RationalFn(Poly(f, {pick(rng), pick(rng)})));
    }
    if (s.coeffs.back().is_zero()) s.coeffs.back() = RationalFn::constant(f, 1);
    return s;
}

}  // namespace

TEST(Lrs, ValidateRejectsMalformed) {
    const FieldPtr f = Field::of_order(3);
    EXPECT_THROW((LrsSpec{{}, {}, 0}.validate()), Error);
    EXPECT_THROW((LrsSpec{{K(f, {1}), K(f, {0})}, {K(f, {1}), K(f, {1})}, 0}.validate()), Error);
    EXPECT_THROW((LrsSpec{{K(f, {1})}, {K(f, {1}), K(f, {1})}, 0}.validate()), Error);
    EXPECT_NO_THROW(sqrt_theta_spec(f).validate());
}

TEST(Lrs, EigenPolynomials) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    const EigenData e = eigen(sqrt_theta_spec(f3));
    EXPECT_EQ(e.chi, parse_poly_over_k(f3, "0,-1;0;1"));
    EXPECT_TRUE(e.separable_product);
    const EigenData e2 = eigen(period_spec(f2));
    EXPECT_EQ(e2.chi, parse_poly_over_k(f2, "1;1;1"));
    EXPECT_TRUE(e2.separable_product);
    for (std::uint64_t q : {2u, 3u}) {
        const FieldPtr f = Field::of_order(q);
        LrsSpec s;
        for (std::uint64_t i = 1; i < q; ++i) s.coeffs.push_back(RationalFn(f));
        s.coeffs.push_back(K(f, {0, 1}));
        s.initial.assign(q, K(f, {1}));
        EXPECT_FALSE(eigen(s).separable_product);
    }
}

TEST(Lrs, Terms) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    const auto a = terms(sqrt_theta_spec(f3), 5);
    EXPECT_EQ(a[0], K(f3, {1}));
    EXPECT_EQ(a[1], K(f3, {0}));
    EXPECT_EQ(a[2], K(f3, {0, 1}));
    EXPECT_EQ(a[3], K(f3, {0}));
    EXPECT_EQ(term(sqrt_theta_spec(f3), 5), K(f3, {0, 0, 1}));
    const auto b = terms(period_spec(f2), 6);
    const std::vector<std::int64_t> expect{1, 1, 0, 1, 1, 0};
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(b[i], K(f2, {expect[i]}));
    EXPECT_EQ(term(sqrt_theta_spec(f3), 1), K(f3, {1}));
}

TEST(Lrs, FrobeniusIndexWorkedCases) {
    const FieldPtr f3 = Field::of_order(3), f2 = Field::of_order(2);
    const auto v = eval_at_frobenius_index(sqrt_theta_spec(f3), ResidueField(P(f3, {1, 1})));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->rep, P(f3, {2}));
    for (const auto& Pm : monic_irreducibles_up_to(7, f2)) {
        const auto w = eval_at_frobenius_index(period_spec(f2), ResidueField::trusted(Pm));
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->rep, P(f2, {Pm.degree() % 2 == 0 ? 1 : 0}));
    }
    const LrsSpec pole{{RationalFn(P(f3, {1}), P(f3, {0, 1}))}, {K(f3, {1})}, 0};
    EXPECT_FALSE(eval_at_frobenius_index(pole, ResidueField(P(f3, {0, 1}))).has_value());
}

TEST(Lrs, FrobeniusIndexMatchesSteppedIteration) {
    std::mt19937_64 rng(9);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        const FieldPtr f = Field::of_order(q);
        for (int trial = 0; trial < 8; ++trial) {
            const LrsSpec s = random_spec(f, rng, 1 + trial % 3);
            for (const auto& Pm : monic_irreducibles_up_to(q <= 3 ? 4 : 2, f)) {
                const ResidueField F = ResidueField::trusted(Pm);
                std::uint64_t n = 1;
                for (long i = 0; i < Pm.degree(); ++i) n *= q;
                ASSERT_EQ(eval_at_frobenius_index(s, F), iterate_mod(s, F, n)) << "q=" << q << " P=" << to_string(Pm);
                ASSERT_EQ(eval_at_index(s, F, BigInt(n + 7)), iterate_mod(s, F, n + 7));
            }
        }
    }
}

TEST(Lrs, IndexEvaluationMatchesTermReduction) {
    const FieldPtr f = Field::of_order(3);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 6; ++trial) {
        const LrsSpec s = random_spec(f, rng, 2);
        const auto a = terms(s, 15);
        for (const auto& Pm : monic_irreducibles_up_to(2, f)) {
            const ResidueField F = ResidueField::trusted(Pm);
            for (std::size_t n = 0; n < a.size(); ++n) {
                EXPECT_EQ(eval_at_index(s, F, BigInt(n)), try_reduce(a[n], F));
            }
        }
    }
}

TEST(Lrs, CombinatorsTermwise) {
    const FieldPtr f = Field::of_order(3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        LrsSpec a = random_spec(f, rng, 1 + trial % 2), b = random_spec(f, rng, 2);
        b.start = trial % 3;
        const std::int64_t lo = std::max(a.start, b.start);
        const LrsSpec sum = direct_sum(a, b), prod = product(a, b);
        const RationalFn c = K(f, {1, 2});
        const LrsSpec sc = scaled(a, c), adv = advance(a, a.start + 3);
        EXPECT_EQ(sum.order(), a.order() + b.order());
        EXPECT_EQ(prod.order(), a.order() * b.order());
        for (std::int64_t n = lo; n < lo + 12; ++n) {
            EXPECT_EQ(term(sum, n), term(a, n) + term(b, n)) << n;
            EXPECT_EQ(term(prod, n), term(a, n) * term(b, n)) << n;
            EXPECT_EQ(term(sc, n), c * term(a, n));
            if (n >= a.start + 3) {
                EXPECT_EQ(term(adv, n), term(a, n));
            }
        }
    }
    const LrsSpec k = constant_sequence(K(f, {0, 1}), 2);
    EXPECT_EQ(term(k, 40), K(f, {0, 1}));
}

TEST(Lrs, CharacteristicPolynomialSmallCases) {
    const FieldPtr f = Field::of_order(5);
    const RationalFn a = K(f, {1, 1}), b = K(f, {0, 2}), c = K(f, {3}), d = K(f, {0, 0, 1});
    // det(xI - M) = x^2 - (a + d) x + (ad - bc)
    const PolyOverK chi = characteristic_polynomial({{a, b}, {c, d}});
    EXPECT_EQ(chi, PolyOverK(f, {a * d - b * c, -(a + d), RationalFn::constant(f, 1)}));
    const LrsSpec s = sqrt_theta_spec(f);
    EXPECT_EQ(characteristic_polynomial(companion_matrix(s)), eigen_polynomial(s));
    const KMatrix m = kronecker(companion_matrix(s), companion_matrix(s));
    EXPECT_EQ(m.size(), 4u);
    // Eigenvalues ±√θ give products {θ, -θ, -θ, θ}: (x^2 - θ^2)^2.
    const RationalFn t = K(f, {0, 1}), one = RationalFn::constant(f, 1);
    const PolyOverK sq = PolyOverK(f, {-(t * t), RationalFn(f), one});
    EXPECT_EQ(characteristic_polynomial(m), sq * sq);
}
