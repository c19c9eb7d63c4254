#include "finsep/grouplab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "finsep/errors.hpp"

namespace finsep {

namespace {

constexpr std::size_t kTableLimit = 2048;
constexpr std::size_t kPermGroupLimit = 4096;
constexpr std::size_t kExhaustiveAssoc = 400;
constexpr std::size_t kCrossCheckLimit = 4096;

std::string cycle_notation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : " ") + std::to_string(j);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
}

}  // namespace

GroupTable GroupTable::from_table(std::vector<std::uint32_t> table, std::size_t m, std::vector<std::string> labels) {
    if (m == 0 || table.size() != m * m) throw Error(Errc::InvalidArgument, "table must be m x m with m >= 1");
    if (!labels.empty() && labels.size() != m) throw Error(Errc::InvalidArgument, "label count differs from the order");
    for (auto v : table) {
        if (v >= m) throw Error(Errc::InvalidArgument, "table entry out of range");
    }
    GroupTable g;
    g.m_ = m;
    g.table_ = std::move(table);
    g.labels_ = std::move(labels);
    // Identity: the row equal to 0..m-1.
    bool found = false;
    for (std::uint32_t e = 0; e < m && !found; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < m && ok; ++a) ok = g.table_[e * m + a] == a && g.table_[a * m + e] == a;
        if (ok) {
            g.e_ = e;
            found = true;
        }
    }
    if (!found) throw Error(Errc::InvalidArgument, "table has no identity");
    g.inv_.assign(m, 0);
    for (std::uint32_t a = 0; a < m; ++a) {
        std::uint32_t b = 0;
        while (b < m && g.table_[a * m + b] != g.e_) ++b;
        if (b == m || g.table_[b * m + a] != g.e_) throw Error(Errc::InvalidArgument, "element without inverse");
        g.inv_[a] = b;
    }
    g.validate();
    return g;
}

void GroupTable::validate() const {
    const std::size_t m = m_;
    auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
    if (m <= kExhaustiveAssoc) {
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                for (std::uint32_t c = 0; c < m; ++c)
                    if (!assoc(a, b, c)) throw Error(Errc::InvalidArgument, "table is not associative");
        return;
    }
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(m - 1));
    for (int i = 0; i < 20000; ++i) {
        if (!assoc(pick(rng), pick(rng), pick(rng))) throw Error(Errc::InvalidArgument, "table is not associative");
    }
}

GroupTable GroupTable::from_permutations(const std::vector<Perm>& generators, std::string name) {
    if (generators.empty()) throw Error(Errc::InvalidArgument, "need at least one generator");
    const std::size_t n = generators.front().size();
    for (const auto& p : generators) {
        Perm sorted = p;
        std::sort(sorted.begin(), sorted.end());
        bool ok = p.size() == n;
        for (std::size_t i = 0; ok && i < n; ++i) ok = sorted[i] == i;
        if (!ok) throw Error(Errc::InvalidArgument, "generator is not a permutation of 0..n-1");
    }
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, std::uint32_t> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : generators) {
            Perm next = compose(elems[i], s);
            if (index.count(next)) continue;
            if (elems.size() >= kPermGroupLimit) throw Error(Errc::SizeExceeded, "permutation group larger than 4096");
            index.emplace(next, static_cast<std::uint32_t>(elems.size()));
            elems.push_back(std::move(next));
        }
    }
    const std::size_t m = elems.size();
    std::vector<std::uint32_t> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a * m + b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    for (const auto& p : elems) labels.push_back(cycle_notation(p));
    GroupTable g = from_table(std::move(table), m, std::move(labels));
    g.perms_ = std::move(elems);
    g.name_ = std::move(name);
    return g;
}

GroupTable GroupTable::cyclic(unsigned n) {
    if (n < 1 || n > 255) throw Error(Errc::InvalidArgument, "cyclic group order must be in 1..255");
    Perm c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint8_t>((i + 1) % n);
    return from_permutations({c}, "cyclic:" + std::to_string(n));
}

GroupTable GroupTable::symmetric(unsigned n) {
    if (n < 1 || n > 6) throw Error(Errc::InvalidArgument, "symmetric group degree must be in 1..6");
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> gens{id};
    if (n >= 2) {
        Perm t = id, c(n);
        std::swap(t[0], t[1]);
        for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint8_t>((i + 1) % n);
        gens = {t, c};
    }
    return from_permutations(gens, "symmetric:" + std::to_string(n));
}

GroupTable GroupTable::from_function(std::size_t m, std::uint32_t identity, Mul mul, std::vector<std::uint32_t> inverse,
                                     std::string name, std::function<std::string(std::uint32_t)> label) {
    GroupTable g;
    g.m_ = m;
    g.e_ = identity;
    g.fn_ = std::move(mul);
    g.inv_ = std::move(inverse);
    g.name_ = std::move(name);
    g.label_fn_ = std::move(label);
    if (m <= kTableLimit) {
        g.table_.resize(m * m);
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b) g.table_[a * m + b] = g.fn_(a, b);
    }
    for (std::uint32_t a = 0; a < m; ++a) {
        if (g.mul(a, g.inv_[a]) != identity) throw Error(Errc::InvalidArgument, "inverse table is wrong");
    }
    g.validate();
    return g;
}

std::string GroupTable::label(std::uint32_t a) const {
    if (!labels_.empty()) return labels_[a];
    if (label_fn_) return label_fn_(a);
    return std::to_string(a);
}

GroupTable parse_group(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "group must be cyclic:n or symmetric:n");
    const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    unsigned n = 0;
    try {
        std::size_t used = 0;
        const int v = std::stoi(arg, &used);
        if (used != arg.size() || v < 1) throw Error(Errc::ParseError, "bad group parameter: " + arg);
        n = static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad group parameter: " + arg);
    }
    if (kind == "cyclic") return GroupTable::cyclic(n);
    if (kind == "symmetric") return GroupTable::symmetric(n);
    throw Error(Errc::ParseError, "unknown group kind: " + kind);
}

SubgroupMark::SubgroupMark(const GroupTable& g, std::vector<bool> mask) : members(std::move(mask)) {
    if (members.size() != g.order()) throw Error(Errc::InvalidArgument, "subgroup mask has the wrong length");
    if (!members[g.identity()]) throw Error(Errc::InvalidArgument, "subgroup must contain the identity");
    std::vector<std::uint32_t> elems;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        if (members[a]) elems.push_back(a);
    }
    for (auto a : elems) {
        if (!members[g.inv(a)]) throw Error(Errc::InvalidArgument, "subgroup not closed under inverses");
        for (auto b : elems) {
            if (!members[g.mul(a, b)]) throw Error(Errc::InvalidArgument, "subgroup not closed under products");
        }
    }
}

SubgroupMark SubgroupMark::trusted(std::vector<bool> mask) { return SubgroupMark(std::move(mask)); }

std::size_t SubgroupMark::size() const { return static_cast<std::size_t>(std::count(members.begin(), members.end(), true)); }

SubgroupMark whole_group(const GroupTable& g) { return SubgroupMark(g, std::vector<bool>(g.order(), true)); }

SubgroupMark trivial_subgroup(const GroupTable& g) {
    std::vector<bool> mask(g.order(), false);
    mask[g.identity()] = true;
    return SubgroupMark(g, std::move(mask));
}

SubgroupMark point_stabilizer(const GroupTable& g, unsigned point) {
    const auto& perms = g.permutations();
    if (perms.empty()) throw Error(Errc::InvalidArgument, "point stabilizers need a permutation group");
    if (point >= perms.front().size()) throw Error(Errc::InvalidArgument, "point outside the permuted set");
    std::vector<bool> mask(g.order());
    for (std::size_t a = 0; a < perms.size(); ++a) mask[a] = perms[a][point] == point;
    return SubgroupMark(g, std::move(mask));
}

std::vector<SubgroupMark> parse_stabilizers(const GroupTable& g, const std::string& spec) {
    if (spec == "trivial") return {trivial_subgroup(g)};
    if (spec == "whole") return {whole_group(g)};
    std::vector<SubgroupMark> out;
    if (spec == "all") {
        if (g.permutations().empty()) throw Error(Errc::InvalidArgument, "point stabilizers need a permutation group");
        for (unsigned i = 0; i < g.permutations().front().size(); ++i) out.push_back(point_stabilizer(g, i));
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 0) throw Error(Errc::ParseError, "bad point: " + item);
            out.push_back(point_stabilizer(g, static_cast<unsigned>(v)));
        } catch (const std::logic_error&) {
            throw Error(Errc::ParseError, "bad point: " + item);
        }
    }
    if (out.empty()) throw Error(Errc::ParseError, "empty stabilizer spec");
    return out;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const GroupTable& g) {
    const std::size_t m = g.order();
    std::vector<bool> done(m, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < m; ++x) {
        if (done[x]) continue;
        std::vector<std::uint32_t> cls;
        for (std::uint32_t h = 0; h < m; ++h) {
            const std::uint32_t y = g.mul(g.mul(h, x), g.inv(h));
            if (!done[y]) {
                done[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

SubgroupMark centralizer(const GroupTable& g, std::uint32_t x) {
    std::vector<bool> mask(g.order());
    for (std::uint32_t h = 0; h < g.order(); ++h) mask[h] = g.mul(h, x) == g.mul(x, h);
    return SubgroupMark::trusted(std::move(mask));
}

std::vector<bool> cyclic_subgroup(const GroupTable& g, std::uint32_t x) {
    std::vector<bool> mask(g.order(), false);
    std::uint32_t y = g.identity();
    do {
        mask[y] = true;
        y = g.mul(y, x);
    } while (y != g.identity());
    return mask;
}

std::size_t S1S2::s1_size() const { return static_cast<std::size_t>(std::count(s1.begin(), s1.end(), true)); }
std::size_t S1S2::s2_size() const { return static_cast<std::size_t>(std::count(s2.begin(), s2.end(), true)); }

namespace {

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
    }
    return true;
}

}  // namespace

S1S2 s1_s2(const GroupTable& g, const std::vector<SubgroupMark>& subgroups) {
    if (subgroups.empty()) throw Error(Errc::InvalidArgument, "need at least one subgroup");
    const std::size_t m = g.order();
    S1S2 out{std::vector<bool>(m, false), std::vector<bool>(m, false)};
    for (const auto& h : subgroups) {
        for (std::size_t a = 0; a < m; ++a) out.s1[a] = out.s1[a] || h.members[a];
    }
    for (std::uint32_t s = 0; s < m; ++s) {
        const SubgroupMark c = centralizer(g, s);
        for (const auto& h : subgroups) {
            if (subset(c.members, h.members)) {
                out.s2[s] = true;
                break;
            }
        }
    }
    return out;
}

namespace {

std::uint64_t act_on(const GroupTable& base, unsigned r, std::uint32_t sigma, std::uint64_t f) {
    const std::uint64_t block = (std::uint64_t{1} << r) - 1;
    std::uint64_t out = 0;
    for (std::uint32_t x = 0; x < base.order(); ++x) {
        const std::uint64_t v = (f >> (x * r)) & block;
        out |= v << (base.mul(sigma, x) * r);
    }
    return out;
}

}  // namespace

std::uint64_t WreathProduct::act(std::uint32_t sigma, std::uint64_t f) const { return act_on(*base, r, sigma, f); }

std::vector<std::uint32_t> WreathProduct::kernel() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t xi = 0; xi < group.order(); ++xi) {
        if (project(xi) == base->identity()) out.push_back(xi);
    }
    return out;
}

SubgroupMark WreathProduct::lift(const SubgroupMark& h) const {
    std::vector<bool> mask(group.order());
    for (std::uint32_t xi = 0; xi < group.order(); ++xi) mask[xi] = h.contains(project(xi));
    return SubgroupMark::trusted(std::move(mask));
}

WreathProduct wreath_product(const GroupTable& g, unsigned r) {
    const std::size_t k = g.order();
    if (r < 1) throw Error(Errc::InvalidArgument, "wreath exponent r must be >= 1");
    if (static_cast<std::size_t>(r) * k > 20 || (std::size_t{1} << (r * k)) * k > (std::size_t{1} << 20)) {
        throw Error(Errc::SizeExceeded, "wreath product exceeds 2^20 elements");
    }
    auto base = std::make_shared<const GroupTable>(g);
    const std::uint64_t coords = std::uint64_t{1} << (r * k);
    const std::size_t m = static_cast<std::size_t>(coords * k);
    auto mul = [base, r, k](std::uint32_t a, std::uint32_t b) {
        const std::uint64_t f = a / k, h = b / k;
        const std::uint32_t s = static_cast<std::uint32_t>(a % k), t = static_cast<std::uint32_t>(b % k);
        return static_cast<std::uint32_t>((f ^ act_on(*base, r, s, h)) * k + base->mul(s, t));
    };
    std::vector<std::uint32_t> inverse(m);
    for (std::uint32_t a = 0; a < m; ++a) {
        const std::uint32_t s = static_cast<std::uint32_t>(a % k), si = base->inv(s);
        inverse[a] = static_cast<std::uint32_t>(act_on(*base, r, si, a / k) * k + si);
    }
    auto label = [base, r, k](std::uint32_t a) {
        std::string bits;
        const std::uint64_t f = a / k;
        for (std::size_t i = 0; i < r * k; ++i) bits += ((f >> i) & 1) ? '1' : '0';
        return "(" + bits + "," + base->label(static_cast<std::uint32_t>(a % k)) + ")";
    };
    GroupTable group = GroupTable::from_function(m, base->identity(), mul, std::move(inverse),
                                                 g.name() + " wr (Z/2)^" + std::to_string(r), label);
    return WreathProduct{base, r, std::move(group)};
}

WreathBoundReport wreath_bound_check(const GroupTable& g, const std::vector<SubgroupMark>& subgroups, unsigned r) {
    const WreathProduct w = wreath_product(g, r);
    const std::size_t k = g.order();
    const std::size_t n = w.group.order();
    const std::uint64_t coords = std::uint64_t{1} << (r * k);

    WreathBoundReport out;
    out.group = g.name();
    out.r = r;
    out.order = k;
    out.wreath_order = n;
    const S1S2 base = s1_s2(g, subgroups);
    out.s1 = base.s1_size();
    out.s2 = base.s2_size();

    // S1' computed in Γ' from the lifted subgroups.
    std::vector<SubgroupMark> lifted;
    for (const auto& h : subgroups) lifted.push_back(w.lift(h));
    std::vector<bool> s1p(n, false);
    for (const auto& h : lifted) {
        for (std::size_t a = 0; a < n; ++a) s1p[a] = s1p[a] || h.members[a];
    }
    out.s1_prime = static_cast<std::size_t>(std::count(s1p.begin(), s1p.end(), true));

    // (g,τ) commutes with (f,σ) iff στ = τσ and g + σ·g = f + τ·f, so
    // π(C(f,σ)) = {τ ∈ C_G(σ) : f + τ·f ∈ image of (1 + σ)}.
    std::vector<std::vector<bool>> image(k, std::vector<bool>(coords, false));
    for (std::uint32_t s = 0; s < k; ++s) {
        for (std::uint64_t h = 0; h < coords; ++h) image[s][h ^ w.act(s, h)] = true;
    }
    std::vector<std::vector<bool>> cyc(k), cent(k);
    for (std::uint32_t s = 0; s < k; ++s) {
        cyc[s] = cyclic_subgroup(g, s);
        cent[s] = centralizer(g, s).members;
    }
    auto projected_centralizer = [&](std::uint32_t xi) {
        const std::uint64_t f = w.coords(xi);
        const std::uint32_t s = w.project(xi);
        std::vector<bool> p(k, false);
        for (std::uint32_t t = 0; t < k; ++t) p[t] = cent[s][t] && image[s][f ^ w.act(t, f)];
        return p;
    };

    std::vector<bool> s2p(n, false);
    std::vector<bool> qualifies(n, false);
    for (std::uint32_t xi = 0; xi < n; ++xi) {
        const auto p = projected_centralizer(xi);
        for (const auto& h : subgroups) {
            if (subset(p, h.members)) {
                s2p[xi] = true;
                break;
            }
        }
        if (s1p[xi] && subset(p, cyc[w.project(xi)])) qualifies[xi] = true;
    }
    out.s2_prime = static_cast<std::size_t>(std::count(s2p.begin(), s2p.end(), true));
    out.count = static_cast<std::size_t>(std::count(qualifies.begin(), qualifies.end(), true));

    const std::int64_t two_r = std::int64_t{1} << r;
    out.vacuous = two_r <= static_cast<std::int64_t>(k);
    out.bound = Rational(two_r - static_cast<std::int64_t>(k), two_r) * static_cast<std::int64_t>(out.s1_prime);
    out.satisfied = Rational(static_cast<std::int64_t>(out.count)) >= out.bound;
    out.ratio_s2_prime = Rational(static_cast<std::int64_t>(out.s2_prime), static_cast<std::int64_t>(n));
    out.target = Rational(static_cast<std::int64_t>(out.s1), static_cast<std::int64_t>(k));
    out.ratio_s2 = Rational(static_cast<std::int64_t>(out.s2), static_cast<std::int64_t>(k));

    if (n <= kCrossCheckLimit) {
        const S1S2 brute = s1_s2(w.group, lifted);
        bool agree = brute.s1 == s1p && brute.s2 == s2p;
        for (std::uint32_t xi = 0; agree && xi < n; ++xi) {
            const SubgroupMark c = centralizer(w.group, xi);
            std::vector<bool> p(k, false);
            for (std::uint32_t eta = 0; eta < n; ++eta) {
                if (c.members[eta]) p[w.project(eta)] = true;
            }
            agree = p == projected_centralizer(xi);
        }
        out.cross_check = agree;
    }
    return out;
}

}  // namespace finsep
