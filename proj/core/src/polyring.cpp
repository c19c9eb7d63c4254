#include "finsep/polyring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace finsep {

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (!a.field()->same_as(*b.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (v > limit) throw Error(Errc::SizeExceeded, "q^d exceeds the enumeration limit");
    }
    return v;
}

constexpr std::uint64_t kSieveLimit = std::uint64_t{1} << 28;

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field, std::vector<fq_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_) {
        if (c >= field_->q()) throw Error(Errc::InvalidArgument, "coefficient code out of range");
    }
    upoly::trim(ops(), c_);
}

Poly Poly::monomial(FieldPtr field, fq_t c, std::size_t degree) {
    std::vector<fq_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(FieldPtr field, std::span<const std::int64_t> coeffs) {
    std::vector<fq_t> v;
    v.reserve(coeffs.size());
    for (auto n : coeffs) v.push_back(field->from_int(n));
    return Poly(std::move(field), std::move(v));
}

fq_t Poly::eval(fq_t x) const noexcept { return upoly::eval(ops(), c_, x); }

Poly& Poly::operator+=(const Poly& b) {
    require_same(*this, b);
    c_ = upoly::add(ops(), c_, b.c_);
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    require_same(*this, b);
    c_ = upoly::sub(ops(), c_, b.c_);
    return *this;
}

Poly& Poly::operator*=(const Poly& b) {
    require_same(*this, b);
    c_ = upoly::mul(ops(), c_, b.c_);
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) { return Poly(a) += b; }
Poly operator-(const Poly& a, const Poly& b) { return Poly(a) -= b; }
Poly operator*(const Poly& a, const Poly& b) { return Poly(a) *= b; }
Poly operator-(const Poly& a) { return Poly(a.field(), upoly::neg(a.ops(), a.coeffs())); }
Poly operator*(fq_t s, const Poly& a) { return Poly(a.field(), upoly::scale(a.ops(), a.coeffs(), s)); }

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same(a, b);
    auto [q, r] = upoly::divrem(a.ops(), a.coeffs(), b.coeffs());
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly operator%(const Poly& a, const Poly& b) {
    require_same(a, b);
    auto r = a.coeffs();
    upoly::rem_inplace(a.ops(), r, b.coeffs());
    return Poly(a.field(), std::move(r));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same(a, b);
    return Poly(a.field(), upoly::gcd(a.ops(), a.coeffs(), b.coeffs()));
}

Poly monic(const Poly& a) { return Poly(a.field(), upoly::make_monic(a.ops(), a.coeffs())); }

Poly derivative(const Poly& a) { return Poly(a.field(), upoly::derivative(a.ops(), a.coeffs())); }

Poly powmod(const Poly& base, const BigInt& e, const Poly& modulus) {
    require_same(base, modulus);
    return Poly(base.field(), upoly::powmod(base.ops(), base.coeffs(), e, modulus.coeffs()));
}

Poly powmod(const Poly& base, const QPower& e, const Poly& modulus) {
    require_same(base, modulus);
    return Poly(base.field(), upoly::powmod(base.ops(), base.coeffs(), e, modulus.coeffs()));
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const Field& f = *a.field();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (auto c = f.lex_key(a.coeffs()[i]) <=> f.lex_key(b.coeffs()[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw Error(Errc::ConstantInput, "irreducibility of a constant is undefined");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const Poly g = monic(f);
    const Poly x = Poly::theta(f.field());
    const QPower frob{f.field()->q(), 1};
    // h[k] = x^(q^k) mod g
    std::vector<Poly> h;
    h.reserve(n + 1);
    h.push_back(x % g);
    for (unsigned k = 1; k <= n; ++k) h.push_back(powmod(h.back(), frob, g));
    if (!((h[n] - x) % g).is_zero()) return false;
    for (unsigned l : prime_divisors(n)) {
        if (poly_gcd(h[n / l] - x, g).degree() != 0) return false;
    }
    return true;
}

std::uint64_t monic_index(const Poly& f) {
    const Field& field = *f.field();
    std::uint64_t idx = 0;
    for (long i = 0; i < f.degree(); ++i) idx = idx * field.q() + field.lex_key(f.coeffs()[static_cast<std::size_t>(i)]);
    return idx;
}

Poly monic_from_index(const FieldPtr& field, unsigned d, std::uint64_t index) {
    std::vector<fq_t> c(d + 1, 0);
    c[d] = 1;
    for (unsigned i = d; i-- > 0;) {
        c[i] = field->from_lex_key(static_cast<std::uint32_t>(index % field->q()));
        index /= field->q();
    }
    return Poly(field, std::move(c));
}

namespace {

// Marks composites of degree d using irreducibles of degree <= d/2.
std::vector<Poly> sieve_degree(unsigned d, const FieldPtr& field, const std::vector<std::vector<Poly>>& smaller) {
    const std::uint64_t q = field->q();
    const std::uint64_t total = checked_power(q, d, kSieveLimit);
    std::vector<bool> composite(total, false);
    const FqOps ops{field.get()};
    for (unsigned i = 1; i <= d / 2; ++i) {
        const std::uint64_t cofactors = checked_power(q, d - i, kSieveLimit);
        for (const Poly& a : smaller[i]) {
            for (std::uint64_t j = 0; j < cofactors; ++j) {
                const Poly b = monic_from_index(field, d - i, j);
                const auto prod = upoly::mul(ops, a.coeffs(), b.coeffs());
                std::uint64_t idx = 0;
                for (unsigned k = 0; k < d; ++k) idx = idx * q + field->lex_key(prod[k]);
                composite[idx] = true;
            }
        }
    }
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (!composite[idx]) out.push_back(monic_from_index(field, d, idx));
    }
    return out;
}

}  // namespace

std::vector<Poly> monic_irreducibles_up_to(unsigned max_degree, const FieldPtr& field) {
    std::vector<std::vector<Poly>> by_degree(max_degree + 1);
    std::vector<Poly> all;
    for (unsigned d = 1; d <= max_degree; ++d) {
        by_degree[d] = sieve_degree(d, field, by_degree);
        all.insert(all.end(), by_degree[d].begin(), by_degree[d].end());
    }
    return all;
}

std::vector<Poly> enumerate_monic_irreducibles(unsigned d, const FieldPtr& field) {
    if (d == 0) throw Error(Errc::InvalidArgument, "degree must be at least 1");
    std::vector<std::vector<Poly>> by_degree(d + 1);
    for (unsigned e = 1; e <= d / 2; ++e) by_degree[e] = sieve_degree(e, field, by_degree);
    return sieve_degree(d, field, by_degree);
}

std::string to_string(const Poly& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) os << ',';
        os << a.coeffs()[i];
    }
    os << ']';
    return os.str();
}

std::string pretty(const Poly& a) {
    if (a.is_zero()) return "0";
    const bool prime_field = a.field()->r() == 1;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const fq_t c = a.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        const std::string ct = to_string(FqElem(a.field(), c));
        const bool compound = !prime_field && ct.find('+') != std::string::npos;
        if (i == 0) {
            os << ct;
            continue;
        }
        if (c != 1) os << (compound ? "(" + ct + ")" : ct);
        os << "θ";
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    text = strip(text);
    if (!text.empty() && text.front() == '[') text.remove_prefix(1);
    if (!text.empty() && text.back() == ']') text.remove_suffix(1);
    text = strip(text);
    std::vector<fq_t> coeffs;
    if (text.empty()) return Poly(field);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = strip(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            throw Error(Errc::ParseError, "bad polynomial coefficient '" + std::string(tok) + "'");
        }
        if (field->r() == 1 || n < 0) {
            coeffs.push_back(field->from_int(n));
        } else if (static_cast<std::uint64_t>(n) < field->q()) {
            coeffs.push_back(static_cast<fq_t>(n));
        } else {
            throw Error(Errc::ParseError, "coefficient code " + std::to_string(n) + " out of range for F_" + std::to_string(field->q()));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same(num_, den_);
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const fq_t lead_inv = num_.field()->inv(den_.lead());
    if (lead_inv != 1) {
        num_ = lead_inv * num_;
        den_ = lead_inv * den_;
    }
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den() == b.den()) return RationalFn(a.num() + b.num(), a.den());
    return RationalFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (a.den() == b.den()) return RationalFn(a.num() - b.num(), a.den());
    return RationalFn(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalFn operator-(const RationalFn& a) { return RationalFn(-a.num(), a.den()); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn(a.field());
    if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num() * b.num());
    return RationalFn(a.num() * b.num(), a.den() * b.den());
}

RationalFn inverse(const RationalFn& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in K");
    return RationalFn(a.den(), a.num());
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * inverse(b); }

RationalFn pow(const RationalFn& a, std::uint64_t e) {
    RationalFn result = RationalFn::constant(a.field(), 1);
    RationalFn base = a;
    while (e != 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

namespace {
std::optional<Poly> poly_pth_root(const Poly& a) {
    const Field& f = *a.field();
    const std::size_t p = f.p();
    std::vector<fq_t> root(a.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const fq_t c = a.coeffs()[i];
        if (c == 0) continue;
        if (i % p != 0) return std::nullopt;
        root[i / p] = f.pth_root(c);
    }
    return Poly(a.field(), std::move(root));
}
}  // namespace

std::optional<RationalFn> is_pth_power(const RationalFn& c) {
    auto num = poly_pth_root(c.num());
    if (!num) return std::nullopt;
    auto den = poly_pth_root(c.den());
    if (!den) return std::nullopt;
    return RationalFn(std::move(*num), std::move(*den));
}

std::string to_string(const RationalFn& a) {
    if (a.is_polynomial()) return to_string(a.num());
    return to_string(a.num()) + "/" + to_string(a.den());
}

std::string pretty(const RationalFn& a) {
    if (a.is_polynomial()) return pretty(a.num());
    auto wrap = [](const Poly& p) {
        const std::string s = pretty(p);
        return p.coeffs().size() > 1 && p.degree() > 0 && s.find('+') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(a.num()) + "/" + wrap(a.den());
}

RationalFn parse_rational(const FieldPtr& field, std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return RationalFn(parse_poly(field, text));
    return RationalFn(parse_poly(field, text.substr(0, slash)), parse_poly(field, text.substr(slash + 1)));
}

// ---------------------------------------------------------------- PolyOverK

PolyOverK::PolyOverK(FieldPtr field, std::vector<RationalFn> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
        if (!c.field()->same_as(*field_)) throw Error(Errc::FieldMismatch, "coefficient over a different field");
    }
    upoly::trim(ops(), c_);
}

PolyOverK PolyOverK::monomial(const FieldPtr& field, const RationalFn& c, std::size_t n) {
    std::vector<RationalFn> v(n + 1, RationalFn(field));
    v[n] = c;
    return PolyOverK(field, std::move(v));
}

PolyOverK operator+(const PolyOverK& a, const PolyOverK& b) { return PolyOverK(a.field(), upoly::add(a.ops(), a.coeffs(), b.coeffs())); }
PolyOverK operator-(const PolyOverK& a, const PolyOverK& b) { return PolyOverK(a.field(), upoly::sub(a.ops(), a.coeffs(), b.coeffs())); }
PolyOverK operator*(const PolyOverK& a, const PolyOverK& b) { return PolyOverK(a.field(), upoly::mul(a.ops(), a.coeffs(), b.coeffs())); }

std::pair<PolyOverK, PolyOverK> divrem(const PolyOverK& a, const PolyOverK& b) {
    auto [q, r] = upoly::divrem(a.ops(), a.coeffs(), b.coeffs());
    return {PolyOverK(a.field(), std::move(q)), PolyOverK(a.field(), std::move(r))};
}

PolyOverK poly_gcd(const PolyOverK& a, const PolyOverK& b) {
    return PolyOverK(a.field(), upoly::gcd(a.ops(), a.coeffs(), b.coeffs()));
}

PolyOverK derivative(const PolyOverK& f) { return PolyOverK(f.field(), upoly::derivative(f.ops(), f.coeffs())); }

RationalFn eval(const PolyOverK& f, const RationalFn& x) { return upoly::eval(f.ops(), f.coeffs(), x); }

PolyOverK pow(const PolyOverK& f, unsigned e) {
    PolyOverK out = PolyOverK::monomial(f.field(), RationalFn::constant(f.field(), 1), 0);
    for (unsigned i = 0; i < e; ++i) out = out * f;
    return out;
}

bool is_product_of_separable(const PolyOverK& input) {
    if (input.is_zero()) throw Error(Errc::ZeroPolynomial, "separability of the zero polynomial");
    const std::size_t p = input.field()->p();
    PolyOverK f = input;
    // Each pass strictly lowers the degree, so the loop runs at most deg f times.
    while (f.degree() > 1) {
        const PolyOverK df = derivative(f);
        if (df.is_zero()) {
            // f = sum c_i x^(p i); separable factors force f to be a p-th power.
            std::vector<RationalFn> root(f.coeffs().size() / p + 1, RationalFn(f.field()));
            for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
                if (f.coeffs()[i].is_zero()) continue;
                auto r = is_pth_power(f.coeffs()[i]);
                if (!r) return false;
                root[i / p] = std::move(*r);
            }
            f = PolyOverK(f.field(), std::move(root));
            continue;
        }
        PolyOverK g = poly_gcd(f, df);
        if (g.degree() == 0) return true;
        f = std::move(g);
    }
    return true;
}

PolyOverK parse_poly_over_k(const FieldPtr& field, std::string_view text) {
    std::vector<RationalFn> coeffs;
    std::size_t pos = 0;
    while (true) {
        const std::size_t semi = text.find(';', pos);
        const auto tok = text.substr(pos, semi == std::string_view::npos ? text.size() - pos : semi - pos);
        coeffs.push_back(parse_rational(field, tok));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return PolyOverK(field, std::move(coeffs));
}

std::string to_string(const PolyOverK& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ';';
        out += to_string(f.coeffs()[i]);
    }
    return out.empty() ? "[]" : out;
}

std::string pretty(const PolyOverK& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const auto& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string ct = pretty(c);
        if (i == 0) {
            out += ct;
            continue;
        }
        if (!(c.is_polynomial() && c.num().is_one())) out += (ct.find('+') != std::string::npos ? "(" + ct + ")" : ct);
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace finsep
