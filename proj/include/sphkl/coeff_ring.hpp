#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sphkl/affine_weyl.hpp"
#include "sphkl/laurent.hpp"

namespace sphkl {

/// Parameter-class symbols, optionally specialized to powers of one variable v.
struct ParamSpec {
    std::vector<std::string> symbols;
    /// symbol -> n, meaning symbol = v^n.
    std::optional<std::map<std::string, int>> specialization;
};

/// Parses "v=2,v0=-1".
std::map<std::string, int> parse_specialization(const std::string& text);

enum class Membership { Yes, No, Indeterminate };

std::string to_string(Membership m);

/// Non-unital semigroup ring spanned by products of at least one generator.
class PositiveCone {
public:
    explicit PositiveCone(std::vector<Monomial> generators, std::size_t node_budget = 200000);

    const std::vector<Monomial>& generators() const { return gens_; }
    /// A linear functional positive on every generator, if one exists.
    const std::optional<std::array<long long, kMaxVars>>& functional() const { return functional_; }

    /// Is the monomial a product of >= 1 generators?
    Membership contains(const Monomial& m) const;
    /// Every term of x is in the cone.
    Membership contains(const LaurentPoly& x) const;

private:
    long long value(const Monomial& m) const;
    Membership search(const Monomial& m, std::size_t& budget) const;

    std::vector<Monomial> gens_;
    std::optional<std::array<long long, kMaxVars>> functional_;
    long long min_value_ = 1;
    std::size_t node_budget_;
    mutable std::mutex mutex_;
    mutable std::map<Monomial, bool> memo_;
};

/// Whether phi: L_++ -> L^-, x -> x - bar(x), is injective / surjective.
struct PhiReport {
    bool injective = false;
    std::optional<bool> surjective; // empty when not checked
    std::string detail;
};

/// `standard` marks L = Z[v^{+-1}] with L_++ = vZ[v].
PhiReport phi_maps(const std::vector<Monomial>& generators, bool standard);

/// The parameters v^s attached to the affine nodes of a root datum.
class Parameters {
public:
    /// `node_labels` holds one class symbol per affine-diagram node.
    Parameters(const AffineWeyl& W, std::vector<std::string> node_labels,
               std::optional<std::map<std::string, int>> specialization = std::nullopt);

    const AffineWeyl& weyl() const { return W_; }
    bool specialized() const { return spec_.specialization.has_value(); }
    const ParamSpec& spec() const { return spec_; }
    /// Variable names of the coefficient ring ("v" when specialized).
    const std::vector<std::string>& variable_names() const { return names_; }
    const std::vector<std::string>& node_labels() const { return labels_; }

    const Monomial& node(int a) const { return node_.at(a); }
    /// v_0^s for the finite simple node i (equal to v^s unless i is special).
    const Monomial& node_v0(int i) const { return node_.at(tilde_.v0_node.at(i)); }
    const TildeSystem& tilde() const { return tilde_; }

    /// v^w along any reduced word; length-zero elements contribute 1.
    Monomial v_of(const AffineElement& w) const;
    Monomial v_of_finite(int u) const { return v_of(W_.finite_element(u)); }

    /// Generators of L_++: vZ[v] when specialized, otherwise v^s for finite s and
    /// v^s v_0^{+-s} for special s.
    const PositiveCone& cone() const { return *cone_; }
    /// True when all nodes carry the same parameter, which is one variable to the first power.
    bool equal_standard_parameters() const;

    std::string format(const LaurentPoly& x) const { return x.to_string(names_); }
    LaurentPoly parse(const std::string& text) const { return parse_laurent(text, names_); }

    void set_cache_limit(std::size_t limit) { cache_limit_ = limit; }

private:
    const AffineWeyl& W_;
    ParamSpec spec_;
    std::vector<std::string> labels_;
    std::vector<std::string> names_;
    std::vector<Monomial> node_;
    TildeSystem tilde_;
    std::unique_ptr<PositiveCone> cone_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<AffineElement, Monomial, AffineElementHash> v_memo_;
    std::size_t cache_limit_ = 1u << 20;
};

/// "s[2,0] - v^2 s[1,1]" style rendering of sum c_i * label_i.
std::string format_combination(const std::vector<std::pair<std::string, LaurentPoly>>& terms,
                               std::span<const std::string> names);

} // namespace sphkl
