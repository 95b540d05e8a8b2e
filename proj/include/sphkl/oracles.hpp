#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "sphkl/affine_weyl.hpp"
#include "sphkl/hecke.hpp"
#include "sphkl/root_datum.hpp"

// Brute-force reference computations. They share only the datum with the main
// code and recompute roots, orders and characters on their own.
namespace sphkl::oracles {

/// Characters of the group whose roots are the halved-system coroots in X^v.
class CharacterTable {
public:
    /// `roots` and `coroots` are the simple roots and coroots of that group
    /// (the tilde coroots and tilde roots respectively).
    CharacterTable(int rank, std::vector<Coweight> roots, std::vector<Weight> coroots);

    /// dim L_lambda(mu) by Freudenthal's recursion.
    std::int64_t freudenthal(const Coweight& lambda, const Coweight& mu) const;
    /// Full weight multiplicity map of L_lambda.
    std::map<Coweight, std::int64_t> character(const Coweight& lambda) const;
    /// Multiplicities of L_nu in L_lambda (x) L_mu.
    std::map<Coweight, std::int64_t> tensor_decompose(const Coweight& lambda, const Coweight& mu) const;

    bool is_dominant(const Coweight& mu) const;
    Coweight dominant_conjugate(Coweight mu) const;

private:
    /// lambda - mu in the nonnegative span of the simple roots
    bool below(const Coweight& lambda, const Coweight& mu) const;
    std::int64_t form(const Coweight& x, const Coweight& y) const;

    int rank_;
    std::vector<Coweight> roots_;
    std::vector<Weight> coroots_;
    std::vector<Coweight> positive_;
    std::vector<Weight> positive_coroots_;
    Coweight two_rho_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Coweight, Coweight>, std::int64_t> memo_;
};

/// Table for the datum's halved system.
CharacterTable character_table(const RootDatum& datum, const TildeSystem& tilde);

/// R_lambda = sum_w w(e^lambda prod_{b>0} (1 - t e^{-b}) / (1 - e^{-b})) with b over the
/// positive coroots of the halved system. Requires equal parameters.
ExpPoly orbit_sum_HL(const RootDatum& datum, const TildeSystem& tilde, const Coweight& lambda,
                     const LaurentPoly& t);

/// Kazhdan-Lusztig basis element for equal parameters v by the standard recursion.
class KLGeneric {
public:
    /// Throws std::invalid_argument unless all parameters equal v.
    explicit KLGeneric(const HeckeAlgebra& hecke);
    HeckeElement element(const AffineElement& w, int length_bound) const;

private:
    HeckeElement compute(const AffineElement& w) const;

    const HeckeAlgebra& H_;
    mutable std::mutex mutex_;
    mutable std::map<AffineElement, HeckeElement> memo_;
};

/// u <= w via the subword property for one reduced word of w.
bool bruhat_bruteforce(const AffineWeyl& W, const AffineElement& u, const AffineElement& w);

/// Number of positive affine roots made negative by w, counted directly.
int length_bruteforce(const AffineWeyl& W, const AffineElement& w);

} // namespace sphkl::oracles
