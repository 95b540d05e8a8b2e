#pragma once

#include <span>
#include <string>
#include <vector>

#include "sphkl/lattice.hpp"

namespace sphkl {

/// A finite root together with its coroot. `sign` is +1 for positive roots.
struct FiniteRoot {
    Weight root;
    Coweight coroot;
    int sign = 1;
    /// Coefficients of `root` in the simple roots.
    std::vector<int> simple_coords;

    bool operator==(const FiniteRoot& o) const { return root == o.root && coroot == o.coroot; }
    FiniteRoot negated() const;
};

/// The affine root finite + level*delta, an affine function on X^v.
struct AffineRoot {
    FiniteRoot finite;
    int level = 0;

    bool is_positive() const { return finite.sign > 0 ? level >= 0 : level > 0; }
    int evaluate(std::span<const int> coweight) const { return pair(finite.root, coweight) + level; }
    bool operator==(const AffineRoot& o) const { return finite == o.finite && level == o.level; }
};

/// A connected component of the Dynkin diagram.
struct Component {
    std::vector<int> nodes; // simple root indices, ascending
    char family = 'A';      // 'A'..'G'; two-node double bonds are reported as 'C'
    int rank = 0;
    std::vector<bool> is_long; // parallel to nodes
    int maximal_root = -1;     // index into positive_roots()
};

/// Root datum presented by integer vectors in X = X^v = Z^n with the dot pairing.
class RootDatum {
public:
    /// Validates: pairings equal 2, finite-type Cartan matrix, independence.
    RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Coweight> simple_coroots);

    int rank() const { return rank_; }
    int num_simple() const { return static_cast<int>(simple_roots_.size()); }
    const Weight& simple_root(int i) const { return simple_roots_.at(i); }
    const Coweight& simple_coroot(int i) const { return simple_coroots_.at(i); }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }

    /// C_ij = alpha_j(alpha_i^v).
    int cartan(int i, int j) const { return cartan_[i][j]; }

    const std::vector<FiniteRoot>& positive_roots() const { return positive_; }
    const std::vector<Component>& components() const { return components_; }
    int component_of(int simple) const { return component_of_.at(simple); }
    bool is_long(int simple) const;

    /// Index of the positive root with this vector, or -1.
    int find_positive(std::span<const int> root) const;
    /// True if the vector is a root (of either sign).
    bool is_root(std::span<const int> root) const;

    Coweight reflect_coweight(int i, std::span<const int> tau) const;
    Weight reflect_weight(int i, std::span<const int> x) const;

    /// Sum of positive roots, and of positive coroots.
    const Weight& two_rho() const { return two_rho_; }
    const Coweight& two_rho_check() const { return two_rho_check_; }
    bool is_dominant(std::span<const int> tau) const;

    std::string describe() const; // e.g. "C2" or "A1xA1"

private:
    void classify();
    void enumerate_roots();

    int rank_;
    std::vector<Weight> simple_roots_;
    std::vector<Coweight> simple_coroots_;
    std::vector<std::vector<int>> cartan_;
    std::vector<FiniteRoot> positive_;
    std::vector<Component> components_;
    std::vector<int> component_of_;
    Weight two_rho_;
    Coweight two_rho_check_;
};

/// Positive roots by reflection closure of the simple roots, coroots attached.
std::vector<FiniteRoot> enumerate_positive_roots(const RootDatum& datum);

/// One maximal root per component, in component order.
std::vector<FiniteRoot> maximal_roots(const RootDatum& datum);

/// The halved system used for special roots: eps(alpha) = 1/2 exactly for the special ones.
struct TildeSystem {
    std::vector<bool> special;        // per simple root
    std::vector<Weight> simple_roots;  // eps(alpha) * alpha
    std::vector<Coweight> simple_coroots; // eps(alpha)^{-1} * alpha^v
    /// Affine-diagram node whose parameter plays the role of v_0^s for simple root i:
    /// the component's affine node when i is special, i itself otherwise.
    std::vector<int> v0_node;

    bool any_special() const;
    RootDatum datum(int rank) const { return RootDatum(rank, simple_roots, simple_coroots); }
};

/// Marks the special simple roots. `node_param_ids` has one entry per affine-diagram
/// node (simple nodes first, then one affine node per component); equal ids mean
/// equal parameters.
TildeSystem detect_special(const RootDatum& datum, std::span<const int> node_param_ids);

} // namespace sphkl
