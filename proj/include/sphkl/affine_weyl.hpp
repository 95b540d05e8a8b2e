#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sphkl/root_datum.hpp"

namespace sphkl {

/// The finite Weyl group W_f, enumerated once as integer matrices acting on X^v.
class FiniteWeyl {
public:
    explicit FiniteWeyl(const RootDatum& datum);

    int size() const { return static_cast<int>(matrices_.size()); }
    int identity() const { return 0; }
    int longest() const { return longest_; }
    int simple(int i) const { return simple_.at(i); }
    int length(int u) const { return length_[u]; }
    /// Canonical reduced word (simple root indices), shortlex-first from the BFS.
    const std::vector<int>& word(int u) const { return word_[u]; }
    int mul(int u, int v) const { return mul_[u][v]; }
    int inverse(int u) const { return inverse_[u]; }
    const IntMatrix& matrix(int u) const { return matrices_[u]; }
    /// Index of the element with this matrix, or -1.
    int find(const IntMatrix& m) const;

    Coweight act(int u, std::span<const int> tau) const { return matrices_[u].apply(tau); }
    /// The right action alpha -> alpha o u on weights.
    Weight compose(std::span<const int> alpha, int u) const { return matrices_[u].apply_transpose(alpha); }
    /// The (contragredient) left action on weights: u(alpha) = alpha o u^{-1}.
    Weight act_weight(int u, std::span<const int> alpha) const { return compose(alpha, inverse_[u]); }

    /// +1 if (positive root r) o u is positive, -1 otherwise.
    int root_sign_after(int u, int r) const { return sign_after_[u][r]; }
    /// Elements sorted by length (identity first).
    const std::vector<int>& by_length() const { return by_length_; }

    /// Some u with u^{-1}(tau) dominant, of minimal length.
    int to_dominant(std::span<const int> tau) const;

private:
    std::vector<IntMatrix> matrices_;
    std::map<IntMatrix, int> index_;
    std::vector<int> simple_;
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> sign_after_;
    std::vector<int> by_length_;
    int longest_ = 0;
    std::vector<Weight> simple_roots_;
};

/// The element t_tau * fin of W = W_f x| X^v; acts by lambda -> fin(lambda) + tau.
struct AffineElement {
    Coweight tau;
    int fin = 0;

    auto operator<=>(const AffineElement&) const = default;
};

struct AffineElementHash {
    std::size_t operator()(const AffineElement& w) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(w.fin) * 0x9e3779b97f4a7c15ULL;
        for (int x : w.tau)
            h = (h ^ static_cast<std::size_t>(x + 0x5bd1e995)) * 1099511628211ULL;
        return h;
    }
};

/// w = omega * s_{letters[0]} * ... * s_{letters[r-1]} with length(omega) = 0.
struct ReducedWord {
    AffineElement omega;
    std::vector<int> letters; // affine-diagram node indices
};

/// The extended affine Weyl group attached to a root datum. Nodes 0..k-1 of the
/// affine diagram are the finite simple roots; node k+c is the affine simple root
/// -theta_c + delta of component c.
class AffineWeyl {
public:
    explicit AffineWeyl(RootDatum datum);
    AffineWeyl(const AffineWeyl&) = delete;
    AffineWeyl& operator=(const AffineWeyl&) = delete;

    const RootDatum& datum() const { return datum_; }
    const FiniteWeyl& finite() const { return finite_; }
    int rank() const { return datum_.rank(); }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_finite_nodes() const { return datum_.num_simple(); }
    bool is_affine_node(int a) const { return a >= datum_.num_simple(); }
    const AffineRoot& simple_affine_root(int a) const { return nodes_.at(a); }
    std::string node_name(int a) const;

    AffineElement identity() const { return {Coweight(rank(), 0), finite_.identity()}; }
    AffineElement translation(const Coweight& tau) const { return {tau, finite_.identity()}; }
    AffineElement finite_element(int u) const { return {Coweight(rank(), 0), u}; }
    AffineElement w0() const { return finite_element(finite_.longest()); }
    const AffineElement& simple_reflection(int a) const { return reflections_.at(a); }

    AffineElement mul(const AffineElement& x, const AffineElement& y) const;
    AffineElement inverse(const AffineElement& x) const;
    AffineElement right_mul_simple(const AffineElement& w, int a) const { return mul(w, reflections_.at(a)); }
    AffineElement left_mul_simple(int a, const AffineElement& w) const { return mul(reflections_.at(a), w); }
    Coweight act(const AffineElement& w, std::span<const int> lambda) const;
    /// The right action alpha^w(lambda) = alpha(w lambda).
    AffineRoot act_on_affine_root(const AffineRoot& alpha, const AffineElement& w) const;

    /// Length via the closed formula for w_f t_sigma.
    int length(const AffineElement& w) const;
    bool is_right_descent(const AffineElement& w, int a) const;
    bool is_left_descent(int a, const AffineElement& w) const;

    /// Peels right descents; with an rng the descent is chosen at random.
    ReducedWord reduced_word(const AffineElement& w, std::mt19937* rng = nullptr) const;
    /// True iff x^{-1} y lies in the affine Weyl group (same Omega-component).
    bool same_component(const AffineElement& x, const AffineElement& y) const;
    bool in_coroot_lattice(std::span<const int> tau) const;

    /// (m_tau, w_tau): m_tau = t_tau w_tau is the shortest element of t_tau W_f.
    std::pair<AffineElement, int> min_coset_rep(const Coweight& tau) const;
    /// n_lambda = w0 t_lambda, the longest element of W_f t_lambda W_f.
    AffineElement longest_double_rep(const Coweight& lambda) const;
    /// All elements of the double coset W_f t_lambda W_f.
    std::vector<AffineElement> double_coset(const Coweight& lambda) const;

    bool bruhat_leq(const AffineElement& u, const AffineElement& w) const;
    /// eta <= tau iff m_eta <= m_tau.
    bool coweight_leq(const Coweight& eta, const Coweight& tau) const;

    /// Length-zero elements generating Omega (residues of t_{e_i}).
    std::vector<AffineElement> omega_generators() const;
    /// Coxeter entry m(s_a, s_b); 0 encodes infinity.
    int coxeter_entry(int a, int b) const;
    /// Class id per node: conjugacy classes of simple reflections in W.
    std::vector<int> parameter_classes() const;

    /// Dominant lambda with length(n_lambda) <= max_length and every central
    /// functional |y(lambda)| <= central_window, sorted by (length, lambda).
    std::vector<Coweight> dominant_grid(int max_length, int central_window) const;
    /// Integer basis of the weights vanishing on all coroots.
    const std::vector<Weight>& central_functionals() const { return central_; }

    /// "id", "t[1,0]", "s1*s2", "t[0,1]*s1".
    std::string to_string(const AffineElement& w) const;
    /// Parses products such as "t[1,0]*s1", "w0", "id", "a1*s1".
    AffineElement parse(const std::string& text) const;

    /// Drops the memo tables once they hold more than this many entries.
    void set_cache_limit(std::size_t limit) { cache_limit_ = limit; }

private:
    bool bruhat_rec(const AffineElement& u, const AffineElement& w) const;

    RootDatum datum_;
    FiniteWeyl finite_;
    std::vector<AffineRoot> nodes_;
    std::vector<AffineElement> reflections_;
    std::vector<Weight> central_;

    struct PairHash {
        std::size_t operator()(const std::pair<AffineElement, AffineElement>& p) const noexcept
        {
            AffineElementHash h;
            return h(p.first) * 31 + h(p.second);
        }
    };
    mutable std::mutex bruhat_mutex_;
    mutable std::unordered_map<std::pair<AffineElement, AffineElement>, bool, PairHash> bruhat_memo_;
    std::size_t cache_limit_ = 1u << 22;
};

} // namespace sphkl
