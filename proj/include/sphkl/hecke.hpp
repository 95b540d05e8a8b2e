#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sphkl/affine_weyl.hpp"
#include "sphkl/coeff_ring.hpp"
#include "sphkl/laurent.hpp"

namespace sphkl {

/// Exponential polynomial: finitely supported map X^v -> L, the element sum c_tau e^tau.
using ExpPoly = std::map<Coweight, LaurentPoly>;

void add_term(ExpPoly& f, const Coweight& tau, const LaurentPoly& c);
ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
ExpPoly scale(const LaurentPoly& c, const ExpPoly& f);
ExpPoly monomial(const Coweight& tau, const LaurentPoly& c = 1);
/// Multiplies by e^shift.
ExpPoly shift(const ExpPoly& f, const Coweight& by);
/// Exact quotient q with (1 - e^beta) q = f, line by line along beta.
/// Throws InternalError when f is not divisible.
ExpPoly divide_one_minus(const ExpPoly& f, const Coweight& beta);
/// "e[2,0] + (1 - v^2) e[1,1]", terms by descending exponent.
std::string format_exp(const ExpPoly& f, std::span<const std::string> names);

/// Element of the Hecke algebra in the standard basis {H_w}.
class HeckeElement {
public:
    using Map = std::unordered_map<AffineElement, LaurentPoly, AffineElementHash>;

    HeckeElement() = default;
    static HeckeElement basis(const AffineElement& w, const LaurentPoly& c = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentPoly coeff(const AffineElement& w) const;
    void add(const AffineElement& w, const LaurentPoly& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
    bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

/// The extended affine Hecke algebra H(W, v) over the coefficient ring of `params`.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const Parameters& params);

    const AffineWeyl& weyl() const { return W_; }
    const Parameters& params() const { return P_; }

    /// h * H_s and H_s * h for the simple node a.
    HeckeElement right_mul_gen(const HeckeElement& h, int a) const;
    HeckeElement left_mul_gen(int a, const HeckeElement& h) const;
    /// h * H_s^{-1} and H_s^{-1} * h.
    HeckeElement right_mul_gen_inv(const HeckeElement& h, int a) const;
    HeckeElement left_mul_gen_inv(int a, const HeckeElement& h) const;
    /// h * H_omega, H_omega * h for a length-zero omega.
    HeckeElement right_mul_omega(const HeckeElement& h, const AffineElement& omega) const;
    HeckeElement left_mul_omega(const AffineElement& omega, const HeckeElement& h) const;

    HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
    /// H_w^{-1} as a combination of basis elements.
    HeckeElement inverse_basis(const AffineElement& w) const;
    /// H_s^{-1} = H_s + (v^s - v^{-s}).
    HeckeElement inverse_gen(int a) const;

    /// The ring involution d: v^w -> v^{-w}, H_w -> H_{w^{-1}}^{-1}.
    HeckeElement dual(const HeckeElement& h) const;
    HeckeElement dual_basis(const AffineElement& w) const;

    /// Y_tau = H_{t_{tau+mu}} H_{t_mu}^{-1} with mu the least multiple of 2rho^v making tau+mu dominant.
    HeckeElement Y(const Coweight& tau) const;
    /// Same with an explicit dominant mu (tau + mu must be dominant).
    HeckeElement Y_with(const Coweight& tau, const Coweight& mu) const;
    /// Phi(sum c_tau e^tau) = sum c_tau Y_tau.
    HeckeElement Phi(const ExpPoly& xi) const;
    /// H_u Phi(u^{-1} xi) H_u^{-1} for finite u.
    HeckeElement Phi_w(const ExpPoly& xi, int u) const;

    /// theta = sum_{w in W_f} v^{w w0} H_w.
    const HeckeElement& theta() const { return theta_; }
    /// P = v^{-w0} sum_{w in W_f} (v^w)^2, so that theta^2 = P theta.
    const LaurentPoly& P_scalar() const { return p_scalar_; }

    /// Lines "coeff  @  element", sorted by (length, element text).
    std::string format(const HeckeElement& h) const;

    void set_cache_limit(std::size_t limit) { cache_limit_ = limit; }

private:
    const AffineWeyl& W_;
    const Parameters& P_;
    std::vector<LaurentPoly> quad_; // v^{-s} - v^s per node
    HeckeElement theta_;
    LaurentPoly p_scalar_;

    mutable std::mutex dual_mutex_;
    mutable std::unordered_map<AffineElement, HeckeElement, AffineElementHash> dual_memo_;
    mutable std::mutex y_mutex_;
    mutable std::map<Coweight, HeckeElement> y_memo_;
    std::size_t cache_limit_ = 1u << 16;
};

} // namespace sphkl
