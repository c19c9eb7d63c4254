#pragma once

// Abelian Galois families over K, their Frobenius classes, Frobenian sets
// realized by recurrences, and density experiments.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsep/ak.hpp"
#include "finsep/lrs.hpp"
#include "finsep/polyring.hpp"
#include "finsep/residue.hpp"

namespace finsep {

/// Group elements are ints: ConstantField(n) uses 0..n-1 (powers of the
/// q-Frobenius), KummerQuadratic uses +1 and -1.
class GaloisFamily {
   public:
    enum class Kind { ConstantField, KummerQuadratic };

    /// L = F_{q^n}(θ).
    static GaloisFamily constant_field(FieldPtr field, unsigned n);
    /// L = K(sqrt(D)); D squarefree and not a square in K, q odd.
    static GaloisFamily kummer(Poly D);

    Kind kind() const noexcept { return kind_; }
    const FieldPtr& field() const noexcept { return field_; }
    unsigned n() const noexcept { return n_; }
    const Poly& radicand() const;
    std::vector<int> elements() const;
    int identity() const noexcept { return kind_ == Kind::ConstantField ? 0 : 1; }
    std::size_t order() const noexcept { return kind_ == Kind::ConstantField ? n_ : 2; }
    bool contains(int g) const;
    /// False for constant-field extensions, where natural density can fail.
    bool is_geometric() const;
    std::string label() const;

    /// Nullopt when P ramifies.
    std::optional<int> frobenius_class(const Poly& P) const;

   private:
    GaloisFamily(Kind kind, FieldPtr field, unsigned n, std::optional<Poly> D)
        : kind_(kind), field_(std::move(field)), n_(n), D_(std::move(D)) {}

    Kind kind_;
    FieldPtr field_;
    unsigned n_;
    std::optional<Poly> D_;
};

/// "constant:2", "kummer:0,1" (radicand in parse_poly syntax).
GaloisFamily parse_family(const FieldPtr& field, const std::string& text);
/// Comma-separated group elements, validated against the family.
std::vector<int> parse_class_set(const GaloisFamily& family, const std::string& text);

/// K-valued function on the group. Abelian groups make every such map
/// equivariant, so these are all of A(L).
struct ClassFunction {
    GaloisFamily family;
    std::map<int, RationalFn> values;

    const RationalFn& at(int g) const;
};

ClassFunction constant_class_function(const GaloisFamily& family, const RationalFn& c);
/// 1 off C, 0 on C.
ClassFunction complement_indicator(const GaloisFamily& family, const std::vector<int>& C);

/// Entry at P is g(φ_P) mod P; ramified primes and poles are bad.
AkElement ev_L(const ClassFunction& g, unsigned cutoff);

/// F_1 = 1, F_2 = 0, F_{n+2} = D F_n,
/// so F_{q^d} ≡ (D/P) mod P.
LrsSpec kummer_symbol_sequence(const Poly& D);
/// F_0 = .. = F_{q-1} = 1, F_{n+q} = F_n + .. + F_{n+q-1}; the Frobenius value
/// at P is (1 + deg P) mod 2 when q is even.
LrsSpec constant_field_parity_sequence(const FieldPtr& field);

struct FrobenianRealization {
    LrsSpec spec;
    /// Predicted values: α_P = g(φ_P) for unramified P.
    ClassFunction g;
};

/// Sequence whose Frobenius values vanish exactly at {P : φ_P ∈ C}, up to
/// finitely many P. Throws UnsupportedFamily past the period guard.
FrobenianRealization realize_frobenian(const GaloisFamily& family, const std::vector<int>& C);
inline LrsSpec realize_frobenian_lrs(const GaloisFamily& family, const std::vector<int>& C) {
    return realize_frobenian(family, C).spec;
}

struct RoundTrip {
    std::size_t checked = 0;
    std::vector<Poly> mismatches;
    std::vector<Poly> bad;
    bool ok() const noexcept { return mismatches.empty(); }
};
/// Compares the realized zero set to {P : φ_P ∈ C} for min_degree <= deg P <= max_degree.
RoundTrip frobenian_round_trip(const GaloisFamily& family, const std::vector<int>& C, unsigned min_degree, unsigned max_degree);

/// Annihilator f = prod over distinct values v of g of (x - v), with its root
/// g(e) in K.
struct CertifiedPair {
    AkElement alpha;
    PolyOverK f;
    RationalFn root;
    ZeroCheck check;  // poly_eval(f, alpha) on degrees >= 2
};
CertifiedPair certify(const FrobenianRealization& realization, unsigned cutoff);

struct DegreeCount {
    unsigned degree;
    std::size_t hits;
    std::size_t total;
};

struct Ratio {
    long num;
    long den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct DensityReport {
    std::string predicate;
    FieldSpec field;
    std::vector<DegreeCount> by_degree;
    double natural_fraction = 0;
    std::vector<std::pair<double, double>> dirichlet;  // (s, estimate)
    std::optional<Ratio> expected;
    bool geometric = true;

    std::size_t hits() const;
    std::size_t total() const;
    /// sqrt(p(1-p)/N) at the expected value (or the observed fraction).
    double standard_error() const;
};

/// Grid used for the truncated Dirichlet ratio.
const std::vector<double>& dirichlet_grid();
double dirichlet_estimate(const std::vector<DegreeCount>& counts, unsigned q, double s);

DensityReport density_report(const std::string& predicate, const FieldPtr& field, unsigned cutoff,
                             const std::function<bool(const Poly&)>& hit, std::optional<Ratio> expected, bool geometric);
/// Density of {P : φ_P ∈ C} against #C/#Γ.
DensityReport class_density(const GaloisFamily& family, const std::vector<int>& C, unsigned cutoff);

struct CandidateScore {
    std::string label;
    LrsSpec spec;
    std::vector<DegreeCount> by_degree;  // hits: f(a_P) ≡ 0 mod P
    std::vector<Poly> matches;           // primes where f(a_P) ≡ 0
    std::vector<Poly> bad;
    double fraction = 0;
};

struct RootDensityReport {
    PolyOverK f;
    unsigned cutoff = 0;
    std::vector<DegreeCount> root_by_degree;
    std::vector<Poly> bad;  // coefficient poles or vanishing leading term
    double root_fraction = 0;
    std::vector<CandidateScore> candidates;
    double best_candidate = 0;
    double gap = 0;
};

/// Candidates: the realizations for every C ⊆ {±1}, the symbol sequence b,
/// its shifts b + c for c ∈ F_q, and b·b.
std::vector<std::pair<std::string, LrsSpec>> kummer_candidate_family(const GaloisFamily& family);

/// Throws InseparableInput unless f is a product of separable polynomials.
RootDensityReport root_density_experiment(const PolyOverK& f, const std::vector<std::pair<std::string, LrsSpec>>& candidates,
                                          unsigned cutoff);

}  // namespace finsep
