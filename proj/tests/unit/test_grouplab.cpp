#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "finsep/grouplab.hpp"

using namespace finsep;

namespace {

std::vector<std::uint32_t> brute_centralizer(const GroupTable& g, std::uint32_t x) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
    return out;
}

// (A^G) ⋊ G with A = (Z/2)^r written out directly on pairs (f, σ), f a vector
// of r-bit masks indexed by G.
struct NaiveWreath {
    const GroupTable& g;
    unsigned r;

    using Elem = std::pair<std::vector<unsigned>, std::uint32_t>;

    std::vector<unsigned> act(std::uint32_t s, const std::vector<unsigned>& f) const {
        std::vector<unsigned> out(f.size());
        for (std::uint32_t y = 0; y < g.order(); ++y) out[y] = f[g.mul(g.inv(s), y)];
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        auto sb = act(a.second, b.first);
        for (std::size_t i = 0; i < sb.size(); ++i) sb[i] ^= a.first[i];
        return {sb, g.mul(a.second, b.second)};
    }
    std::vector<Elem> all() const {
        std::vector<Elem> out;
        const unsigned n = static_cast<unsigned>(g.order());
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (r * n)); ++bits)
            for (std::uint32_t s = 0; s < n; ++s) {
                std::vector<unsigned> f(n);
                for (unsigned x = 0; x < n; ++x) f[x] = static_cast<unsigned>((bits >> (x * r)) & ((1u << r) - 1));
                out.push_back({f, s});
            }
        return out;
    }
};

struct NaiveCounts {
    std::size_t s1p = 0, s2p = 0, count = 0;
};

NaiveCounts naive_bound_counts(const GroupTable& g, const std::vector<SubgroupMark>& subs, unsigned r) {
    const NaiveWreath w{g, r};
    const auto elems = w.all();
    NaiveCounts out;
    for (const auto& xi : elems) {
        std::set<std::uint32_t> proj;
        for (const auto& eta : elems)
            if (w.mul(xi, eta) == w.mul(eta, xi)) proj.insert(eta.second);
        bool in_s1 = false, in_s2 = false;
        for (const auto& h : subs) {
            in_s1 = in_s1 || h.contains(xi.second);
            in_s2 = in_s2 || std::all_of(proj.begin(), proj.end(), [&](std::uint32_t t) { return h.contains(t); });
        }
        std::set<std::uint32_t> cyc;
        std::uint32_t p = g.identity();
        do {
            cyc.insert(p);
            p = g.mul(p, xi.second);
        } while (p != g.identity());
        const bool in_cyc = std::includes(cyc.begin(), cyc.end(), proj.begin(), proj.end());
        out.s1p += in_s1;
        out.s2p += in_s2;
        out.count += in_s1 && in_cyc;
    }
    return out;
}

}  // namespace

TEST(GroupLab, TableValidation) {
    // Z/3 written out by hand, then a broken copy.
    std::vector<std::uint32_t> t{0, 1, 2, 1, 2, 0, 2, 0, 1};
    EXPECT_EQ(GroupTable::from_table(t, 3).order(), 3u);
    t[4] = 1;
    EXPECT_THROW(GroupTable::from_table(t, 3), Error);
    // Latin square without associativity (a quasigroup with identity).
    const std::vector<std::uint32_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    EXPECT_THROW(GroupTable::from_table(loop, 5), Error);
}

TEST(GroupLab, NamedGroups) {
    EXPECT_EQ(GroupTable::symmetric(3).order(), 6u);
    EXPECT_EQ(GroupTable::symmetric(4).order(), 24u);
    EXPECT_EQ(GroupTable::cyclic(7).order(), 7u);
    EXPECT_EQ(parse_group("symmetric:3").order(), 6u);
    EXPECT_THROW(parse_group("dihedral:4"), Error);
    EXPECT_THROW(GroupTable::symmetric(7), Error);
    const GroupTable s3 = GroupTable::symmetric(3);
    for (std::uint32_t a = 0; a < 6; ++a) {
        EXPECT_EQ(s3.mul(a, s3.inv(a)), s3.identity());
        EXPECT_EQ(s3.mul(s3.identity(), a), a);
    }
    // (ab)(x) = a(b(x))
    const auto& perms = s3.permutations();
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b)
            for (unsigned x = 0; x < 3; ++x) EXPECT_EQ(perms[s3.mul(a, b)][x], perms[a][perms[b][x]]);
}

TEST(GroupLab, ConjugacyClassesAndCentralizers) {
    const GroupTable s3 = GroupTable::symmetric(3);
    auto classes = conjugacy_classes(s3);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
    for (const auto& c : classes) {
        for (std::uint32_t x : c) {
            EXPECT_EQ(c.size() * centralizer(s3, x).size(), s3.order());
            EXPECT_EQ(centralizer(s3, x).size(), brute_centralizer(s3, x).size());
        }
    }
    EXPECT_EQ(centralizer(s3, s3.identity()).size(), 6u);
    const GroupTable z5 = GroupTable::cyclic(5);
    EXPECT_EQ(conjugacy_classes(z5).size(), 5u);
    for (std::uint32_t x = 0; x < 5; ++x) EXPECT_EQ(centralizer(z5, x).size(), 5u);

    const WreathProduct w = wreath_product(GroupTable::cyclic(2), 1);
    EXPECT_EQ(w.group.order(), 8u);
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(w.group)) {
        total += c.size();
        for (std::uint32_t x : c) EXPECT_EQ(c.size() * brute_centralizer(w.group, x).size(), 8u);
    }
    EXPECT_EQ(total, 8u);
}

TEST(GroupLab, SubgroupMasks) {
    const GroupTable s3 = GroupTable::symmetric(3);
    std::vector<bool> bad(6, false);
    bad[s3.identity()] = true;
    for (std::uint32_t x = 0; x < 6; ++x)
        if (s3.mul(x, x) != s3.identity() && x != s3.identity()) {
            bad[x] = true;  // a 3-cycle without its square
            break;
        }
    EXPECT_THROW(SubgroupMark(s3, bad), Error);
    for (unsigned p = 0; p < 3; ++p) EXPECT_EQ(point_stabilizer(s3, p).size(), 2u);
    EXPECT_EQ(parse_stabilizers(s3, "all").size(), 3u);
    EXPECT_EQ(parse_stabilizers(s3, "0,2").size(), 2u);
    EXPECT_EQ(parse_stabilizers(s3, "whole")[0].size(), 6u);
    EXPECT_EQ(parse_stabilizers(s3, "trivial")[0].size(), 1u);
    EXPECT_THROW(parse_stabilizers(s3, "5"), Error);
    for (std::uint32_t x = 0; x < 6; ++x) {
        const auto c = cyclic_subgroup(s3, x);
        EXPECT_NO_THROW(SubgroupMark(s3, c));
    }
}

TEST(GroupLab, S1S2Cases) {
    const GroupTable s3 = GroupTable::symmetric(3);
    const S1S2 a = s1_s2(s3, parse_stabilizers(s3, "all"));
    EXPECT_EQ(a.s1_size(), 4u);
    EXPECT_EQ(a.s2_size(), 3u);
    const GroupTable z2 = GroupTable::cyclic(2);
    const S1S2 b = s1_s2(z2, {trivial_subgroup(z2)});
    EXPECT_EQ(b.s1_size(), 1u);
    EXPECT_EQ(b.s2_size(), 0u);
    const S1S2 c = s1_s2(s3, {whole_group(s3)});
    EXPECT_EQ(c.s1_size(), 6u);
    EXPECT_EQ(c.s2_size(), 6u);
}

TEST(GroupLab, WreathStructure) {
    using Case = std::tuple<std::string, unsigned, std::size_t>;
    for (const Case& cs : std::vector<Case>{{"cyclic:2", 1, 8}, {"cyclic:2", 2, 32}, {"symmetric:3", 1, 384}, {"cyclic:3", 2, 192}}) {
        const std::string name = std::get<0>(cs);
        const unsigned r = std::get<1>(cs);
        const std::size_t order = std::get<2>(cs);
        const GroupTable g = parse_group(name);
        const WreathProduct w = wreath_product(g, r);
        ASSERT_EQ(w.group.order(), order) << name;
        const NaiveWreath nw{g, r};
        const auto elems = nw.all();
        auto encode = [&](const NaiveWreath::Elem& e) {
            std::uint64_t bits = 0;
            for (std::size_t x = 0; x < e.first.size(); ++x) bits |= std::uint64_t{e.first[x]} << (x * r);
            return w.encode(bits, e.second);
        };
        for (std::size_t i = 0; i < elems.size(); i += 1 + elems.size() / 40)
            for (std::size_t j = 0; j < elems.size(); j += 1 + elems.size() / 40)
                ASSERT_EQ(w.group.mul(encode(elems[i]), encode(elems[j])), encode(nw.mul(elems[i], elems[j])));
        EXPECT_EQ(w.kernel().size(), order / g.order());
        for (std::uint32_t xi = 0; xi < w.group.order(); ++xi) {
            EXPECT_EQ(w.project(w.group.mul(xi, w.group.inv(xi))), g.identity());
        }
        const SubgroupMark lifted = w.lift(point_stabilizer(g, 0));
        EXPECT_EQ(lifted.size(), point_stabilizer(g, 0).size() * (order / g.order()));
    }
    try {
        (void)wreath_product(GroupTable::symmetric(4), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SizeExceeded);
    }
}

TEST(GroupLab, BoundCountsMatchNaiveWreath) {
    struct Case {
        std::string group, stab;
        unsigned r;
    };
    for (const auto& cs : std::vector<Case>{{"cyclic:2", "trivial", 1},
                                            {"cyclic:2", "trivial", 2},
                                            {"cyclic:2", "trivial", 3},
                                            {"cyclic:3", "trivial", 2},
                                            {"symmetric:3", "all", 1},
                                            {"symmetric:3", "0", 1}}) {
        const GroupTable g = parse_group(cs.group);
        const auto subs = parse_stabilizers(g, cs.stab);
        const WreathBoundReport rep = wreath_bound_check(g, subs, cs.r);
        const NaiveCounts nc = naive_bound_counts(g, subs, cs.r);
        EXPECT_EQ(rep.s1_prime, nc.s1p) << cs.group << " r=" << cs.r;
        EXPECT_EQ(rep.s2_prime, nc.s2p) << cs.group << " r=" << cs.r;
        EXPECT_EQ(rep.count, nc.count) << cs.group << " r=" << cs.r;
        ASSERT_TRUE(rep.cross_check.has_value());
        EXPECT_TRUE(*rep.cross_check);
        const std::int64_t two_r = std::int64_t{1} << cs.r;
        EXPECT_EQ(rep.vacuous, two_r <= static_cast<std::int64_t>(g.order()));
        EXPECT_EQ(rep.bound, Rational(two_r - static_cast<std::int64_t>(g.order()), two_r) *
                                 static_cast<std::int64_t>(nc.s1p));
        EXPECT_EQ(rep.satisfied, Rational(static_cast<std::int64_t>(nc.count)) >= rep.bound);
    }
}

TEST(GroupLab, CyclicTwoRatios) {
    const GroupTable z2 = GroupTable::cyclic(2);
    for (unsigned r = 1; r <= 4; ++r) {
        const WreathBoundReport rep = wreath_bound_check(z2, {trivial_subgroup(z2)}, r);
        const std::int64_t n = std::int64_t{1} << (2 * r + 1);
        // S2' = {(f, e) : f(0) != f(1)}; any other element commutes with
        // something projecting to the swap.
        EXPECT_EQ(rep.s2_prime, static_cast<std::size_t>(((std::int64_t{1} << r) - 1) << r)) << r;
        EXPECT_EQ(rep.ratio_s2_prime, Rational(static_cast<std::int64_t>(rep.s2_prime), n));
        EXPECT_EQ(rep.target, Rational(1, 2));
        EXPECT_EQ(rep.ratio_s2, Rational(0));
    }
}
