#include "finsep/gf.hpp"

#include <algorithm>
#include <sstream>

namespace finsep {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableLimit = 256;

using IntPoly = std::vector<std::uint32_t>;  // over F_p, ascending

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
IntPoly int_rem(IntPoly a, const IntPoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - b[i]) * c) % p);
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool int_is_irreducible(const IntPoly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            IntPoly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (int_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

BigInt QPower::value() const {
    BigInt v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= base;
    return v;
}

std::uint64_t FieldSpec::q() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < r; ++i) v *= p;
    return v;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec field_spec(std::uint32_t p, unsigned r) {
    if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (r == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
    FieldSpec spec{p, r, {}};
    if (spec.q() > kMaxOrder) throw Error(Errc::InvalidArgument, "field order exceeds 2^16");
    // Lexicographic on the ascending list means c_0 is the most significant digit.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < r; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        IntPoly m(r + 1);
        std::uint64_t c = code;
        for (unsigned i = r; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        m[r] = 1;
        if (int_is_irreducible(m, p)) {
            spec.modulus = std::move(m);
            return spec;
        }
    }
    throw Error(Errc::InvalidArgument, "no irreducible modulus found");  // unreachable
}

FieldSpec field_spec_for_order(std::uint64_t q) {
    if (q < 2 || q > kMaxOrder) throw Error(Errc::InvalidArgument, "field order must lie in [2, 2^16]");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned r = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    return field_spec(static_cast<std::uint32_t>(p), r);
}

FieldPtr Field::create(const FieldSpec& spec) {
    if (!is_prime(spec.p)) throw Error(Errc::InvalidArgument, "characteristic is not prime");
    if (spec.r == 0 || spec.modulus.size() != spec.r + 1 || spec.modulus.back() != 1) {
        throw Error(Errc::InvalidArgument, "modulus must be monic of degree r");
    }
    if (spec.q() > kMaxOrder) throw Error(Errc::InvalidArgument, "field order exceeds 2^16");
    for (auto c : spec.modulus) {
        if (c >= spec.p) throw Error(Errc::InvalidArgument, "modulus coefficient not reduced mod p");
    }
    if (!int_is_irreducible(spec.modulus, spec.p)) throw Error(Errc::InvalidArgument, "modulus is reducible over F_p");
    return FieldPtr(new Field(spec));
}

Field::Field(const FieldSpec& spec) : spec_(spec), q_(static_cast<std::uint32_t>(spec.q())) {
    pow_p_.resize(spec_.r + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= spec_.r; ++i) pow_p_[i] = pow_p_[i - 1] * spec_.p;

    neg_table_.resize(q_);
    for (fq_t a = 0; a < q_; ++a) {
        auto d = digits(a);
        for (auto& x : d) x = (spec_.p - x) % spec_.p;
        neg_table_[a] = pack(d);
    }
    if (q_ <= kTableLimit) {
        add_table_.resize(std::size_t{q_} * q_);
        mul_table_.resize(std::size_t{q_} * q_);
        for (fq_t a = 0; a < q_; ++a) {
            for (fq_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
                mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
            }
        }
    }

    // Inverses from a^(q-2); the multiplicative group has order q-1.
    inv_table_.assign(q_, 0);
    frob_table_.resize(q_);
    root_table_.resize(q_);
    for (fq_t a = 0; a < q_; ++a) {
        if (a != 0) inv_table_[a] = pow(a, std::uint64_t{q_} - 2);
        frob_table_[a] = pow(a, std::uint64_t{spec_.p});
    }
    for (fq_t a = 0; a < q_; ++a) root_table_[frob_table_[a]] = a;

    lex_key_.resize(q_);
    lex_inverse_.resize(q_);
    for (fq_t a = 0; a < q_; ++a) {
        auto d = digits(a);
        std::uint32_t k = 0;
        for (unsigned i = 0; i < spec_.r; ++i) k = k * spec_.p + d[i];
        lex_key_[a] = k;
        lex_inverse_[k] = a;
    }
}

fq_t Field::from_int(std::int64_t n) const noexcept {
    const auto p = static_cast<std::int64_t>(spec_.p);
    return static_cast<fq_t>(((n % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(fq_t a) const {
    std::vector<std::uint32_t> d(spec_.r);
    for (unsigned i = 0; i < spec_.r; ++i) {
        d[i] = a % spec_.p;
        a /= spec_.p;
    }
    return d;
}

fq_t Field::pack(std::span<const std::uint32_t> d) const {
    fq_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * spec_.p + (d[i] % spec_.p);
    return v;
}

fq_t Field::add_slow(fq_t a, fq_t b) const noexcept {
    if (spec_.p == 2) return a ^ b;
    fq_t v = 0;
    for (unsigned i = 0; i < spec_.r; ++i) {
        const std::uint32_t s = (a % spec_.p + b % spec_.p) % spec_.p;
        v += s * pow_p_[i];
        a /= spec_.p;
        b /= spec_.p;
    }
    return v;
}

fq_t Field::mul_slow(fq_t a, fq_t b) const noexcept {
    const unsigned r = spec_.r;
    const std::uint32_t p = spec_.p;
    std::uint32_t da[16] = {}, db[16] = {};
    std::uint64_t prod[32] = {};
    for (unsigned i = 0; i < r; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < r; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    const auto& m = spec_.modulus;
    for (unsigned k = 2 * r - 1; k-- > r;) {
        const std::uint64_t c = prod[k] % p;
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - m[i]) * c) % p;
    }
    fq_t v = 0;
    for (unsigned i = r; i-- > 0;) v = v * p + static_cast<fq_t>(prod[i] % p);
    return v;
}

fq_t Field::inv(fq_t a) const {
    if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero in F_" + std::to_string(q_));
    return inv_table_[a];
}

fq_t Field::pow(fq_t a, std::uint64_t e) const noexcept {
    fq_t result = 1;
    while (e != 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

fq_t Field::pow(fq_t a, const BigInt& e) const {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    // a^(q-1) = 1 for a != 0, so the exponent can be reduced.
    if (a == 0) return e == 0 ? 1 : 0;
    const BigInt reduced = e % (q_ - 1);
    return pow(a, reduced.convert_to<std::uint64_t>());
}

fq_t Field::pow(fq_t a, const QPower& e) const {
    for (unsigned i = 0; i < e.exponent; ++i) a = pow(a, e.base);
    return a;
}

FqElem::FqElem(FieldPtr field, fq_t value) : field_(std::move(field)), value_(value) {
    if (!field_) throw Error(Errc::InvalidArgument, "null field");
    if (value_ >= field_->q()) throw Error(Errc::InvalidArgument, "element code out of range");
}

FqElem FqElem::from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs) {
    if (coeffs.size() > field->r()) throw Error(Errc::InvalidArgument, "too many coefficients for F_q element");
    std::vector<std::uint32_t> d(field->r(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = field->from_int(coeffs[i]);
    const fq_t v = field->pack(d);
    return FqElem(std::move(field), v);
}

namespace {
const Field& common(const FqElem& a, const FqElem& b) {
    if (!a.field()->same_as(*b.field())) throw Error(Errc::FieldMismatch, "operands live in different fields");
    return *a.field();
}
}  // namespace

FqElem fq_add(const FqElem& a, const FqElem& b) { return FqElem(a.field(), common(a, b).add(a.value(), b.value())); }
FqElem fq_sub(const FqElem& a, const FqElem& b) { return FqElem(a.field(), common(a, b).sub(a.value(), b.value())); }
FqElem fq_neg(const FqElem& a) { return FqElem(a.field(), a.field()->neg(a.value())); }
FqElem fq_mul(const FqElem& a, const FqElem& b) { return FqElem(a.field(), common(a, b).mul(a.value(), b.value())); }
FqElem fq_inv(const FqElem& a) { return FqElem(a.field(), a.field()->inv(a.value())); }
FqElem fq_pow(const FqElem& a, const BigInt& e) { return FqElem(a.field(), a.field()->pow(a.value(), e)); }
FqElem fq_pow(const FqElem& a, const QPower& e) { return FqElem(a.field(), a.field()->pow(a.value(), e)); }

FqElem fq_pth_root(const FqElem& a) {
    // Equivalent to a^(p^(r-1)); served from the inverted Frobenius table.
    return FqElem(a.field(), a.field()->pth_root(a.value()));
}

std::string to_string(const FqElem& a) {
    const auto d = a.coeffs();
    if (d.size() == 1) return std::to_string(d[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || d[i] != 1) os << d[i];
        if (i >= 1) os << 'u';
        if (i >= 2) os << '^' << i;
    }
    return first ? "0" : os.str();
}

}  // namespace finsep
