#pragma once

// Finite groups as multiplication tables, and exhaustive checks of the
// S1/S2 and wreath-product density statements.

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finsep/errors.hpp"

namespace finsep {

using Perm = std::vector<std::uint8_t>;
using Rational = boost::rational<std::int64_t>;

class GroupTable {
   public:
    using Mul = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

    /// Row-major m x m table; validated (identity, inverses, associativity
    /// exhaustively when m <= 400, on a fixed sample otherwise).
    static GroupTable from_table(std::vector<std::uint32_t> table, std::size_t m, std::vector<std::string> labels = {});
    /// Closure of the generators under composition, (ab)(x) = a(b(x)).
    static GroupTable from_permutations(const std::vector<Perm>& generators, std::string name);
    static GroupTable cyclic(unsigned n);
    static GroupTable symmetric(unsigned n);
    /// Product supplied as a function; used for groups too large to tabulate.
    static GroupTable from_function(std::size_t m, std::uint32_t identity, Mul mul, std::vector<std::uint32_t> inverse,
                                    std::string name, std::function<std::string(std::uint32_t)> label);

    std::size_t order() const noexcept { return m_; }
    std::uint32_t identity() const noexcept { return e_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_.empty() ? fn_(a, b) : table_[a * m_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    bool has_table() const noexcept { return !table_.empty(); }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::string label(std::uint32_t a) const;
    /// Permutations behind each element, when built from permutations.
    const std::vector<Perm>& permutations() const noexcept { return perms_; }

   private:
    GroupTable() = default;
    void validate() const;

    std::size_t m_ = 0;
    std::uint32_t e_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_;
    Mul fn_;
    std::vector<std::string> labels_;
    std::function<std::string(std::uint32_t)> label_fn_;
    std::vector<Perm> perms_;
    std::string name_;
};

/// "cyclic:n" or "symmetric:n".
GroupTable parse_group(const std::string& text);

struct SubgroupMark {
    std::vector<bool> members;

    /// Throws InvalidArgument unless the mask is a subgroup of g.
    SubgroupMark(const GroupTable& g, std::vector<bool> mask);
    /// No closure check; for masks that are subgroups by construction.
    static SubgroupMark trusted(std::vector<bool> mask);
    std::size_t size() const;
    bool contains(std::uint32_t a) const { return members[a]; }

   private:
    explicit SubgroupMark(std::vector<bool> mask) : members(std::move(mask)) {}
};

SubgroupMark whole_group(const GroupTable& g);
SubgroupMark trivial_subgroup(const GroupTable& g);
SubgroupMark point_stabilizer(const GroupTable& g, unsigned point);
/// "all" (every point stabilizer), "trivial", "whole", or comma-separated points.
std::vector<SubgroupMark> parse_stabilizers(const GroupTable& g, const std::string& spec);

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const GroupTable& g);
SubgroupMark centralizer(const GroupTable& g, std::uint32_t x);
/// <x>
std::vector<bool> cyclic_subgroup(const GroupTable& g, std::uint32_t x);

struct S1S2 {
    std::vector<bool> s1;  // union of the subgroups
    std::vector<bool> s2;  // σ whose centralizer lies in one subgroup
    std::size_t s1_size() const;
    std::size_t s2_size() const;
};
S1S2 s1_s2(const GroupTable& g, const std::vector<SubgroupMark>& subgroups);

/// A^{|G|} ⋊ G with A = (Z/2)^r, G acting on coordinates by left translation.
/// Element index = f * |G| + σ, where bits [x r, x r + r) of f hold f(x).
struct WreathProduct {
    std::shared_ptr<const GroupTable> base;
    unsigned r = 0;
    GroupTable group;

    std::uint32_t project(std::uint32_t xi) const { return xi % static_cast<std::uint32_t>(base->order()); }
    std::uint64_t coords(std::uint32_t xi) const { return xi / base->order(); }
    std::uint32_t encode(std::uint64_t f, std::uint32_t sigma) const {
        return static_cast<std::uint32_t>(f * base->order() + sigma);
    }
    /// σ·f, (σ·f)(y) = f(σ^-1 y).
    std::uint64_t act(std::uint32_t sigma, std::uint64_t f) const;
    /// Elements with trivial projection.
    std::vector<std::uint32_t> kernel() const;
    /// Subgroup π^-1(H).
    SubgroupMark lift(const SubgroupMark& h) const;
};

/// Size guard: 2^(r |G|) |G| <= 2^20, else SizeExceeded.
WreathProduct wreath_product(const GroupTable& g, unsigned r);

struct WreathBoundReport {
    std::string group;
    unsigned r = 0;
    std::size_t order = 0;        // |G|
    std::size_t wreath_order = 0;  // |Γ'|
    std::size_t s1 = 0, s2 = 0;   // in G
    std::size_t s1_prime = 0, s2_prime = 0;
    std::size_t count = 0;  // ξ ∈ S' with π(C(ξ)) ⊆ <π(ξ)>
    Rational bound;         // (1 - |G|/2^r) |S'|
    bool vacuous = false;   // 2^r <= |G|
    bool satisfied = false;
    Rational ratio_s2_prime;  // #S2'/#Γ'
    Rational target;          // #S1/#Γ
    Rational ratio_s2;        // #S2/#Γ
    /// Brute-force centralizers in Γ' agree with the fast path; only run for
    /// |Γ'| <= 4096.
    std::optional<bool> cross_check;
};

WreathBoundReport wreath_bound_check(const GroupTable& g, const std::vector<SubgroupMark>& subgroups, unsigned r);

}  // namespace finsep
