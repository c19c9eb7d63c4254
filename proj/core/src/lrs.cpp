#include "finsep/lrs.hpp"

#include <algorithm>

namespace finsep {

const FieldPtr& LrsSpec::field() const {
    if (coeffs.empty()) throw Error(Errc::InvalidArgument, "recurrence of order zero");
    return coeffs.front().field();
}

void LrsSpec::validate() const {
    if (coeffs.empty()) throw Error(Errc::InvalidArgument, "recurrence of order zero");
    if (coeffs.back().is_zero()) throw Error(Errc::InvalidArgument, "last recurrence coefficient must be nonzero");
    if (initial.size() != coeffs.size()) throw Error(Errc::InvalidArgument, "initial segment length differs from the order");
    const Field& f = *field();
    for (const auto& c : coeffs) {
        if (!c.field()->same_as(f)) throw Error(Errc::FieldMismatch, "recurrence coefficients over different fields");
    }
    for (const auto& c : initial) {
        if (!c.field()->same_as(f)) throw Error(Errc::FieldMismatch, "initial values over different fields");
    }
}

PolyOverK eigen_polynomial(const LrsSpec& spec) {
    spec.validate();
    const std::size_t l = spec.order();
    std::vector<RationalFn> chi(l + 1, RationalFn(spec.field()));
    chi[l] = RationalFn::constant(spec.field(), 1);
    for (std::size_t i = 1; i <= l; ++i) chi[l - i] = -spec.coeffs[i - 1];
    return PolyOverK(spec.field(), std::move(chi));
}

EigenData eigen(const LrsSpec& spec) {
    EigenData out{eigen_polynomial(spec), false};
    out.separable_product = is_product_of_separable(out.chi);
    return out;
}

namespace {

RationalFn next_term(const LrsSpec& spec, const std::vector<RationalFn>& window) {
    // window holds the last l terms, oldest first.
    const std::size_t l = spec.order();
    RationalFn acc(spec.field());
    for (std::size_t i = 1; i <= l; ++i) {
        if (!spec.coeffs[i - 1].is_zero()) acc = acc + spec.coeffs[i - 1] * window[l - i];
    }
    return acc;
}

}  // namespace

std::vector<RationalFn> terms(const LrsSpec& spec, std::size_t count) {
    spec.validate();
    const std::size_t l = spec.order();
    std::vector<RationalFn> out;
    out.reserve(count);
    for (std::size_t i = 0; i < std::min(count, l); ++i) out.push_back(spec.initial[i]);
    std::vector<RationalFn> window = spec.initial;
    while (out.size() < count) {
        RationalFn next = next_term(spec, window);
        window.erase(window.begin());
        window.push_back(next);
        out.push_back(std::move(next));
    }
    return out;
}

RationalFn term(const LrsSpec& spec, std::int64_t n) {
    if (n < spec.start) throw Error(Errc::InvalidArgument, "index precedes the initial segment");
    return terms(spec, static_cast<std::size_t>(n - spec.start) + 1).back();
}

std::optional<ResidueElem> eval_at_index(const LrsSpec& spec, const ResidueField& F, const BigInt& n) {
    spec.validate();
    if (!spec.field()->same_as(*F.field())) throw Error(Errc::FieldMismatch, "sequence and residue field differ");
    const BigInt k = n - spec.start;
    if (k < 0) throw Error(Errc::InvalidArgument, "index precedes the initial segment");
    const std::size_t l = spec.order();

    std::vector<std::vector<fq_t>> c(l), a(l);
    bool constant_coeffs = true;
    for (std::size_t i = 0; i < l; ++i) {
        auto ci = try_reduce(spec.coeffs[i], F);
        auto ai = try_reduce(spec.initial[i], F);
        if (!ci || !ai) return std::nullopt;
        c[i] = ci->rep.coeffs();
        a[i] = ai->rep.coeffs();
        constant_coeffs = constant_coeffs && c[i].size() <= 1;
    }

    const ResidueOps rops = F.ops();
    std::vector<fq_t> value;
    if (constant_coeffs) {
        // Eigen polynomial reduces into F_q[x]: do the powering there.
        const FqOps ops = F.base_ops();
        std::vector<fq_t> chi(l + 1, 0);
        chi[l] = 1;
        for (std::size_t i = 1; i <= l; ++i) chi[l - i] = c[i - 1].empty() ? 0 : ops.neg(c[i - 1][0]);
        upoly::trim(ops, chi);
        const auto r = upoly::powmod_x(ops, k, chi);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] != 0) value = rops.add(value, upoly::scale(ops, a[j], r[j]));
        }
    } else {
        upoly::Coeffs<ResidueOps> chi(l + 1);
        chi[l] = rops.one();
        for (std::size_t i = 1; i <= l; ++i) chi[l - i] = rops.neg(c[i - 1]);
        upoly::trim(rops, chi);
        const auto r = upoly::powmod_x(rops, k, chi);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (!r[j].empty()) value = rops.add(value, rops.mul(r[j], a[j]));
        }
    }
    return ResidueElem{Poly(F.field(), std::move(value))};
}

std::optional<ResidueElem> eval_at_frobenius_index(const LrsSpec& spec, const ResidueField& F) {
    return eval_at_index(spec, F, F.order());
}

LrsSpec constant_sequence(const RationalFn& c, std::int64_t start) {
    return LrsSpec{{RationalFn::constant(c.field(), 1)}, {c}, start};
}

LrsSpec advance(const LrsSpec& spec, std::int64_t new_start) {
    if (new_start < spec.start) throw Error(Errc::InvalidArgument, "cannot move the initial window backwards");
    if (new_start == spec.start) return spec;
    const auto window = terms(spec, static_cast<std::size_t>(new_start - spec.start) + spec.order());
    LrsSpec out{spec.coeffs, {window.end() - static_cast<std::ptrdiff_t>(spec.order()), window.end()}, new_start};
    return out;
}

namespace {

LrsSpec from_eigen(const PolyOverK& chi, std::vector<RationalFn> initial, std::int64_t start) {
    const std::size_t l = static_cast<std::size_t>(chi.degree());
    LrsSpec out;
    out.coeffs.reserve(l);
    for (std::size_t i = 1; i <= l; ++i) out.coeffs.push_back(-chi.coeff(l - i));
    out.initial = std::move(initial);
    out.start = start;
    out.validate();
    return out;
}

}  // namespace

LrsSpec direct_sum(const LrsSpec& a, const LrsSpec& b) {
    const std::int64_t start = std::max(a.start, b.start);
    const LrsSpec aa = advance(a, start), bb = advance(b, start);
    const PolyOverK chi = eigen_polynomial(aa) * eigen_polynomial(bb);
    const std::size_t L = static_cast<std::size_t>(chi.degree());
    const auto ta = terms(aa, L), tb = terms(bb, L);
    std::vector<RationalFn> init;
    init.reserve(L);
    for (std::size_t i = 0; i < L; ++i) init.push_back(ta[i] + tb[i]);
    return from_eigen(chi, std::move(init), start);
}

LrsSpec product(const LrsSpec& a, const LrsSpec& b) {
    const std::int64_t start = std::max(a.start, b.start);
    const LrsSpec aa = advance(a, start), bb = advance(b, start);
    const PolyOverK chi = characteristic_polynomial(kronecker(companion_matrix(aa), companion_matrix(bb)));
    const std::size_t L = static_cast<std::size_t>(chi.degree());
    const auto ta = terms(aa, L), tb = terms(bb, L);
    std::vector<RationalFn> init;
    init.reserve(L);
    for (std::size_t i = 0; i < L; ++i) init.push_back(ta[i] * tb[i]);
    return from_eigen(chi, std::move(init), start);
}

LrsSpec scaled(const LrsSpec& spec, const RationalFn& c) {
    LrsSpec out = spec;
    for (auto& v : out.initial) v = v * c;
    return out;
}

KMatrix companion_matrix(const LrsSpec& spec) {
    spec.validate();
    const std::size_t l = spec.order();
    KMatrix m(l, std::vector<RationalFn>(l, RationalFn(spec.field())));
    for (std::size_t j = 0; j < l; ++j) m[0][j] = spec.coeffs[j];
    for (std::size_t i = 1; i < l; ++i) m[i][i - 1] = RationalFn::constant(spec.field(), 1);
    return m;
}

KMatrix kronecker(const KMatrix& a, const KMatrix& b) {
    const std::size_t n = a.size(), m = b.size();
    const FieldPtr& field = a[0][0].field();
    KMatrix out(n * m, std::vector<RationalFn>(n * m, RationalFn(field)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
            }
        }
    }
    return out;
}

PolyOverK characteristic_polynomial(KMatrix h) {
    const std::size_t n = h.size();
    if (n == 0) throw Error(Errc::InvalidArgument, "empty matrix");
    const FieldPtr field = h[0][0].field();

    // Similarity transform to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t pivot = m;
        while (pivot < n && h[pivot][m - 1].is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            std::swap(h[pivot], h[m]);
            for (auto& row : h) std::swap(row[pivot], row[m]);
        }
        const RationalFn t_inv = inverse(h[m][m - 1]);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1].is_zero()) continue;
            const RationalFn u = h[i][m - 1] * t_inv;
            for (std::size_t j = 0; j < n; ++j) {
                if (!h[m][j].is_zero()) h[i][j] = h[i][j] - u * h[m][j];
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!h[j][i].is_zero()) h[j][m] = h[j][m] + u * h[j][i];
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (h_{m,m-1} ... h_{i+1,i}) p_{i-1}
    const RationalFn one = RationalFn::constant(field, 1);
    std::vector<PolyOverK> p;
    p.reserve(n + 1);
    p.push_back(PolyOverK::monomial(field, one, 0));
    for (std::size_t m = 1; m <= n; ++m) {
        const PolyOverK linear(field, {-h[m - 1][m - 1], one});
        PolyOverK next = linear * p[m - 1];
        RationalFn t = one;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = t * h[i][i - 1];
            if (t.is_zero()) break;
            const RationalFn coef = h[i - 1][m - 1] * t;
            if (!coef.is_zero()) next = next - PolyOverK(field, {coef}) * p[i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

}  // namespace finsep
