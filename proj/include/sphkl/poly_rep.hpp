#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "sphkl/coeff_ring.hpp"
#include "sphkl/hecke.hpp"

namespace sphkl {

/// Coefficients of an expansion in a basis indexed by dominant coweights.
using DominantExpansion = std::map<Coweight, LaurentPoly>;

/// Expands an invariant f in a unitriangular basis b(mu) = e^mu + lower terms by
/// repeatedly removing the highest dominant exponent (by 2rho, then lexicographic).
/// Throws TheoremViolation if some b(mu) does not have e^mu-coefficient 1.
DominantExpansion expand_unitriangular(const ExpPoly& f, const RootDatum& datum,
                                       const std::function<ExpPoly(const Coweight&)>& basis,
                                       const std::string& basis_name);

/// The polynomial representation of H on L[X^v] together with the Demazure calculus.
class PolyRep {
public:
    explicit PolyRep(const HeckeAlgebra& hecke);

    const HeckeAlgebra& hecke() const { return H_; }
    const Parameters& params() const { return P_; }
    const AffineWeyl& weyl() const { return W_; }

    /// s_i(f), and u(f) for finite u.
    ExpPoly reflect(int i, const ExpPoly& f) const;
    ExpPoly act(int u, const ExpPoly& f) const;
    bool is_invariant(const ExpPoly& f) const;

    /// H_s(f) for the finite simple node i.
    ExpPoly hecke_act(int i, const ExpPoly& f) const;
    /// H_u(f) along the canonical word of u.
    ExpPoly hecke_act_finite(int u, const ExpPoly& f) const;

    /// Demazure operator for the simple root of the halved system.
    ExpPoly demazure(int i, const ExpPoly& f) const;
    /// Delta_u along the given word (rightmost letter applied first).
    ExpPoly demazure_word(const std::vector<int>& word, const ExpPoly& f) const;
    /// delta_tau = Delta_w(e^{tau_+}).
    ExpPoly demazure_char(const Coweight& tau) const;
    /// s_lambda = Delta_{w0}(e^lambda).
    ExpPoly schur(const Coweight& lambda) const;

    /// p_tau = v^{w_tau} v^w H_w(e^{tau_+}).
    ExpPoly p_basis(const Coweight& tau) const;
    /// P_lambda = sum over the orbit of v^{w_tau} p_tau.
    ExpPoly hall_littlewood(const Coweight& lambda) const;

    std::vector<Coweight> orbit(const Coweight& lambda) const;

    DominantExpansion expand_in_schur(const ExpPoly& f) const;
    DominantExpansion expand_in_hall_littlewood(const ExpPoly& f) const;

    /// "s[2,0] - v^2 s[1,1]"
    std::string format_expansion(const DominantExpansion& e, const std::string& prefix) const;

private:
    const HeckeAlgebra& H_;
    const AffineWeyl& W_;
    const Parameters& P_;
    std::vector<LaurentPoly> a_, b_, vinv_;
    std::vector<Coweight> coroot_, tilde_coroot_;

    mutable std::mutex mutex_;
    mutable std::map<Coweight, ExpPoly> schur_memo_, hl_memo_;
};

} // namespace sphkl
