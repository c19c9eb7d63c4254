#include <gtest/gtest.h>

#include <random>

#include "finsep/gf.hpp"

using namespace finsep;

namespace {

// Schoolbook product of digit vectors reduced by the monic modulus, mod p.
std::vector<std::uint32_t> oracle_mul(const FieldSpec& s, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    a.resize(s.r, 0);
    b.resize(s.r, 0);
    std::vector<std::uint64_t> prod(2 * s.r, 0);
    for (unsigned i = 0; i < s.r; ++i)
        for (unsigned j = 0; j < s.r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % s.p;
    for (unsigned k = 2 * s.r - 1; k >= s.r; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= s.r; ++i) {
            prod[k - s.r + i] = (prod[k - s.r + i] + (s.p - c) * s.modulus[i]) % s.p;
        }
    }
    std::vector<std::uint32_t> out(prod.begin(), prod.begin() + s.r);
    return out;
}

FqElem el(const FieldPtr& f, std::vector<std::int64_t> c) { return FqElem::from_coeffs(f, c); }

}  // namespace

TEST(Gf, ModulusIsLexLeastIrreducible) {
    EXPECT_EQ(field_spec(2, 2).modulus, (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(field_spec(3, 2).modulus, (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(field_spec(2, 3).modulus, (std::vector<std::uint32_t>{1, 0, 1, 1}));
    EXPECT_EQ(field_spec_for_order(25).p, 5u);
    EXPECT_THROW(field_spec_for_order(6), Error);
    EXPECT_THROW(field_spec_for_order(1), Error);
}

TEST(Gf, RejectsReducibleModulus) {
    FieldSpec s{2, 2, {1, 0, 1}};  // u^2 + 1 = (u+1)^2 over F_2
    EXPECT_THROW(Field::create(s), Error);
}

TEST(Gf, F4Examples) {
    const FieldPtr f = Field::of_order(4);
    const FqElem u = el(f, {0, 1}), one = FqElem::one(f), up1 = el(f, {1, 1});
    EXPECT_TRUE((u + u).is_zero());
    EXPECT_EQ(u + one, up1);
    EXPECT_EQ(u * u, up1);
    EXPECT_EQ(up1 * u, one);
    EXPECT_EQ(fq_inv(u), up1);
    EXPECT_EQ(fq_pow(u, BigInt(2)), up1);
    EXPECT_EQ(fq_pow(up1, BigInt(2)), u);
    EXPECT_EQ(fq_pth_root(u), up1);
    EXPECT_EQ(to_string(up1), "u+1");
}

TEST(Gf, F3Examples) {
    const FieldPtr f = Field::of_order(3);
    const FqElem two(f, 2);
    EXPECT_EQ(two + two, FqElem::one(f));
    EXPECT_EQ(fq_inv(two), two);
    EXPECT_EQ(fq_inv(FqElem::one(f)), FqElem::one(f));
    EXPECT_EQ(f->from_int(-1), 2u);
}

TEST(Gf, ZeroHasNoInverse) {
    const FieldPtr f = Field::of_order(9);
    try {
        (void)fq_inv(FqElem::zero(f));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInverse);
    }
}

TEST(Gf, MixingFieldsFails) {
    const FieldPtr a = Field::of_order(3), b = Field::of_order(9);
    try {
        (void)(FqElem::one(a) + FqElem::one(b));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldMismatch);
    }
}

TEST(Gf, MultiplicationMatchesSchoolbookOracle) {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 243u, 512u}) {
        const FieldPtr f = Field::of_order(q);
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<fq_t> pick(0, f->q() - 1);
        for (int i = 0; i < 300; ++i) {
            const fq_t a = pick(rng), b = pick(rng);
            EXPECT_EQ(f->digits(f->mul(a, b)), [&] {
                auto d = oracle_mul(f->spec(), f->digits(a), f->digits(b));
                return f->digits(f->pack(d));
            }()) << "q=" << q;
        }
    }
}

TEST(Gf, FieldAxiomsOnRandomTriples) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const FieldPtr f = Field::of_order(q);
        std::mt19937_64 rng(1000 + q);
        std::uniform_int_distribution<fq_t> pick(0, f->q() - 1);
        for (int i = 0; i < 1000; ++i) {
            const fq_t a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->mul(a, b), f->mul(b, a));
            ASSERT_EQ(f->add(a, b), f->add(b, a));
            ASSERT_EQ(f->sub(f->add(a, b), b), a);
        }
    }
}

TEST(Gf, ExhaustiveSmallFieldIdentities) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const FieldPtr f = Field::of_order(q);
        for (fq_t a = 0; a < f->q(); ++a) {
            EXPECT_EQ(f->pow(a, std::uint64_t{q}), a);
            EXPECT_EQ(f->pth_root(f->pow(a, std::uint64_t{f->p()})), a);
            EXPECT_EQ(f->pow(f->pth_root(a), std::uint64_t{f->p()}), a);
            EXPECT_EQ(f->frobenius(a), f->pow(a, std::uint64_t{f->p()}));
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
                EXPECT_EQ(f->pow(a, std::uint64_t{q - 1}), 1u);
            }
        }
    }
}

TEST(Gf, BigAndLazyExponentsAgree) {
    const FieldPtr f = Field::of_order(9);
    for (fq_t a = 0; a < 9; ++a) {
        for (unsigned d = 0; d < 6; ++d) {
            const QPower e{9, d};
            EXPECT_EQ(f->pow(a, e), f->pow(a, e.value()));
            EXPECT_EQ(f->pow(a, e), a);  // a^(q^d) = a
        }
        const BigInt huge = BigInt(1) << 200;
        EXPECT_EQ(f->pow(a, huge), a == 0 ? 0u : 1u);  // 8 | 2^200
    }
}

TEST(Gf, LexKeyOrdersAscendingDigits) {
    const FieldPtr f = Field::of_order(9);
    // Ascending-digit lex order: c_0 most significant.
    std::vector<fq_t> order;
    for (std::uint32_t k = 0; k < 9; ++k) order.push_back(f->from_lex_key(k));
    for (std::size_t i = 1; i < order.size(); ++i) {
        EXPECT_TRUE(f->digits(order[i - 1]) < f->digits(order[i]));
    }
}
