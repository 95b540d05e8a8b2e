#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "sphkl/hecke.hpp"
#include "sphkl/poly_rep.hpp"

namespace sphkl {

struct OffendingTerm {
    AffineElement w;
    LaurentPoly coeff;
    Membership membership;
};

/// Evidence that an element is the KL element for n_lambda.
struct KLCertificate {
    Coweight lambda;
    AffineElement n_lambda;
    HeckeElement element;
    bool selfdual = false;
    bool leading_ok = false;
    bool positivity_ok = false;
    std::vector<OffendingTerm> offending;

    bool ok() const { return selfdual && leading_ok && positivity_ok; }
};

/// An element of the spherical subalgebra: its N-basis expansion and H-basis image.
struct SphericalElement {
    DominantExpansion n_expansion;
    HeckeElement element;
};

class Spherical {
public:
    explicit Spherical(const PolyRep& rep);

    const PolyRep& rep() const { return R_; }
    const HeckeAlgebra& hecke() const { return H_; }

    /// Closed form v^{m_tau w0} sum_{w in t_tau W_f} v^{-w} H_w.
    HeckeElement M_tau(const Coweight& tau) const;
    /// The product H_{m_tau} theta (used to cross-check the closed form).
    HeckeElement M_tau_product(const Coweight& tau) const;
    /// sum_{tau in W_f lambda} v^{w_tau} M_tau, compared against the double-coset sum.
    HeckeElement N_lambda(const Coweight& lambda) const;
    /// v^{n_lambda} sum_{w in W_f t_lambda W_f} v^{-w} H_w.
    HeckeElement N_lambda_double_coset(const Coweight& lambda) const;

    /// Psi(xi) through the P -> N route; xi must be invariant.
    SphericalElement satake(const ExpPoly& xi) const;
    /// Psi(xi) = Phi(xi) theta, computed through the Bernstein elements.
    HeckeElement satake_via_Y(const ExpPoly& xi) const;

    /// Psi(s_lambda) with its certificate.
    KLCertificate kl_spherical(const Coweight& lambda) const;

    /// (1/P) x y; throws InternalError if P does not divide.
    HeckeElement star_product(const HeckeElement& x, const HeckeElement& y) const;
    /// H_a x = x H_a = v^{-s_a} x for every finite simple a.
    bool in_spherical(const HeckeElement& x) const;

    /// Multiplicities of s_nu in s_lambda s_mu; throws TheoremViolation if some
    /// coefficient is not a nonnegative integer.
    std::map<Coweight, std::int64_t> tensor_multiplicities(const Coweight& lambda, const Coweight& mu) const;
    /// KL_lambda * KL_mu == sum_nu m KL_nu.
    bool star_matches(const Coweight& lambda, const Coweight& mu,
                      const std::map<Coweight, std::int64_t>& mult) const;
    /// epsilon of the H_{n_mu} coefficient of Psi(s_lambda).
    std::int64_t weight_multiplicity(const Coweight& lambda, const Coweight& mu) const;

private:
    const PolyRep& R_;
    const HeckeAlgebra& H_;
    const AffineWeyl& W_;
    const Parameters& P_;

    mutable std::mutex mutex_;
    mutable std::map<Coweight, KLCertificate> kl_memo_;
    mutable std::map<Coweight, HeckeElement> n_memo_;
};

} // namespace sphkl
