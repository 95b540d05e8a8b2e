#include "sphkl/spherical_kl.hpp"

#include <algorithm>

namespace sphkl {

Spherical::Spherical(const PolyRep& rep)
    : R_(rep), H_(rep.hecke()), W_(rep.weyl()), P_(rep.params())
{
}

HeckeElement Spherical::M_tau(const Coweight& tau) const
{
    const auto& Wf = W_.finite();
    AffineElement m = W_.min_coset_rep(tau).first;
    Monomial pre = P_.v_of(W_.mul(m, W_.w0()));
    HeckeElement out;
    for (int u = 0; u < Wf.size(); ++u) {
        AffineElement w{tau, u};
        out.add(w, LaurentPoly(pre * P_.v_of(w).inverse()));
    }
    return out;
}

HeckeElement Spherical::M_tau_product(const Coweight& tau) const
{
    return H_.mul(HeckeElement::basis(W_.min_coset_rep(tau).first), H_.theta());
}

HeckeElement Spherical::N_lambda_double_coset(const Coweight& lambda) const
{
    Monomial pre = P_.v_of(W_.longest_double_rep(lambda));
    HeckeElement out;
    for (const auto& w : W_.double_coset(lambda))
        out.add(w, LaurentPoly(pre * P_.v_of(w).inverse()));
    return out;
}

HeckeElement Spherical::N_lambda(const Coweight& lambda) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = n_memo_.find(lambda);
        if (it != n_memo_.end())
            return it->second;
    }
    HeckeElement out;
    for (const auto& tau : R_.orbit(lambda)) {
        int w_tau = W_.min_coset_rep(tau).second;
        out += LaurentPoly(P_.v_of_finite(w_tau)) * M_tau(tau);
    }
    if (!(out == N_lambda_double_coset(lambda)))
        throw InternalError("orbit sum and double-coset sum disagree for N" + vec_to_string(lambda));
    std::lock_guard<std::mutex> lock(mutex_);
    n_memo_.emplace(lambda, out);
    return out;
}

SphericalElement Spherical::satake(const ExpPoly& xi) const
{
    SphericalElement r;
    r.n_expansion = R_.expand_in_hall_littlewood(xi);
    ExpPoly check;
    for (const auto& [mu, c] : r.n_expansion) {
        check = check + scale(c, R_.hall_littlewood(mu));
        r.element += c * N_lambda(mu);
    }
    if (check != xi)
        throw InternalError("Hall-Littlewood expansion does not reproduce its input");
    return r;
}

HeckeElement Spherical::satake_via_Y(const ExpPoly& xi) const
{
    return H_.mul(H_.Phi(xi), H_.theta());
}

KLCertificate Spherical::kl_spherical(const Coweight& lambda) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = kl_memo_.find(lambda);
        if (it != kl_memo_.end())
            return it->second;
    }
    KLCertificate cert;
    cert.lambda = lambda;
    cert.n_lambda = W_.longest_double_rep(lambda);
    cert.element = satake(R_.schur(lambda)).element;
    cert.selfdual = H_.dual(cert.element) == cert.element;
    cert.leading_ok = cert.element.coeff(cert.n_lambda) == LaurentPoly(1);
    std::vector<std::pair<std::string, OffendingTerm>> bad;
    for (const auto& [w, c] : cert.element.terms()) {
        if (w == cert.n_lambda)
            continue;
        Membership m = P_.cone().contains(c);
        if (m != Membership::Yes)
            bad.emplace_back(W_.to_string(w), OffendingTerm{w, c, m});
    }
    std::sort(bad.begin(), bad.end(), [this](const auto& x, const auto& y) {
        int lx = W_.length(x.second.w), ly = W_.length(y.second.w);
        return lx != ly ? lx > ly : x.first < y.first;
    });
    for (auto& b : bad)
        cert.offending.push_back(std::move(b.second));
    cert.positivity_ok = cert.offending.empty();
    std::lock_guard<std::mutex> lock(mutex_);
    kl_memo_.emplace(lambda, cert);
    return cert;
}

HeckeElement Spherical::star_product(const HeckeElement& x, const HeckeElement& y) const
{
    HeckeElement prod = H_.mul(x, y);
    HeckeElement out;
    for (const auto& [w, c] : prod.terms())
        out.add(w, c.divide_exact(H_.P_scalar()));
    return out;
}

bool Spherical::in_spherical(const HeckeElement& x) const
{
    for (int i = 0; i < W_.num_finite_nodes(); ++i) {
        HeckeElement expected = LaurentPoly(P_.node(i).inverse()) * x;
        if (!(H_.left_mul_gen(i, x) == expected) || !(H_.right_mul_gen(x, i) == expected))
            return false;
    }
    return true;
}

std::map<Coweight, std::int64_t> Spherical::tensor_multiplicities(const Coweight& lambda,
                                                                  const Coweight& mu) const
{
    std::map<Coweight, std::int64_t> out;
    for (const auto& [nu, c] : R_.expand_in_schur(R_.schur(lambda) * R_.schur(mu))) {
        if (!c.is_constant() || c.constant_term() < 0)
            throw TheoremViolation("tensor multiplicity of s" + vec_to_string(nu) +
                                   " is not a nonnegative integer: " + P_.format(c));
        out.emplace(nu, c.constant_term());
    }
    return out;
}

bool Spherical::star_matches(const Coweight& lambda, const Coweight& mu,
                             const std::map<Coweight, std::int64_t>& mult) const
{
    HeckeElement lhs = star_product(kl_spherical(lambda).element, kl_spherical(mu).element);
    HeckeElement rhs;
    for (const auto& [nu, m] : mult)
        rhs += LaurentPoly(m) * kl_spherical(nu).element;
    return lhs == rhs;
}

std::int64_t Spherical::weight_multiplicity(const Coweight& lambda, const Coweight& mu) const
{
    return kl_spherical(lambda).element.coeff(W_.longest_double_rep(mu)).epsilon();
}

} // namespace sphkl
