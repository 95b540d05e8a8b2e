#include "sphkl/poly_rep.hpp"

#include <set>

namespace sphkl {

DominantExpansion expand_unitriangular(const ExpPoly& f, const RootDatum& datum,
                                       const std::function<ExpPoly(const Coweight&)>& basis,
                                       const std::string& basis_name)
{
    DominantExpansion out;
    ExpPoly rest = f;
    const Weight& height = datum.two_rho();
    while (!rest.empty()) {
        const Coweight* pivot = nullptr;
        int best = 0;
        for (const auto& [tau, c] : rest) {
            if (!datum.is_dominant(tau))
                continue;
            int h = pair(height, tau);
            if (!pivot || h > best || (h == best && tau > *pivot)) {
                pivot = &tau;
                best = h;
            }
        }
        if (!pivot)
            throw std::invalid_argument("expansion input has no dominant exponent; not invariant");
        Coweight mu = *pivot;
        LaurentPoly c = rest.at(mu);
        ExpPoly b = basis(mu);
        auto lead = b.find(mu);
        if (lead == b.end() || !(lead->second == LaurentPoly(1)))
            throw TheoremViolation(basis_name + vec_to_string(mu) + " does not have leading coefficient 1");
        rest = rest - scale(c, b);
        if (rest.count(mu))
            throw InternalError("elimination did not remove the pivot");
        out.emplace(mu, c);
    }
    return out;
}

PolyRep::PolyRep(const HeckeAlgebra& hecke) : H_(hecke), W_(hecke.weyl()), P_(hecke.params())
{
    const auto& datum = W_.datum();
    const auto& tilde = P_.tilde();
    for (int i = 0; i < datum.num_simple(); ++i) {
        LaurentPoly v(P_.node(i)), v0(P_.node_v0(i));
        a_.push_back(v.bar() - v);
        b_.push_back(v0.bar() - v0);
        vinv_.push_back(v.bar());
        coroot_.push_back(datum.simple_coroot(i));
        tilde_coroot_.push_back(tilde.simple_coroots[i]);
    }
}

ExpPoly PolyRep::reflect(int i, const ExpPoly& f) const
{
    const auto& datum = W_.datum();
    ExpPoly r;
    for (const auto& [tau, c] : f)
        r.emplace(datum.reflect_coweight(i, tau), c);
    return r;
}

ExpPoly PolyRep::act(int u, const ExpPoly& f) const
{
    ExpPoly r;
    for (const auto& [tau, c] : f)
        r.emplace(W_.finite().act(u, tau), c);
    return r;
}

bool PolyRep::is_invariant(const ExpPoly& f) const
{
    for (int i = 0; i < W_.datum().num_simple(); ++i)
        if (reflect(i, f) != f)
            return false;
    return true;
}

ExpPoly PolyRep::hecke_act(int i, const ExpPoly& f) const
{
    // H_s f = v^{-s} s(f) + (a + b e^{-a^v}) (f - s f) / (1 - e^{-2a^v})
    ExpPoly sf = reflect(i, f);
    ExpPoly diff = f - sf;
    Coweight neg = scale(-1, coroot_[i]);
    ExpPoly num = scale(a_[i], diff) + scale(b_[i], shift(diff, neg));
    return scale(vinv_[i], sf) + divide_one_minus(num, scale(-2, coroot_[i]));
}

ExpPoly PolyRep::hecke_act_finite(int u, const ExpPoly& f) const
{
    const auto& word = W_.finite().word(u);
    ExpPoly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = hecke_act(*it, r);
    return r;
}

ExpPoly PolyRep::demazure(int i, const ExpPoly& f) const
{
    ExpPoly sf = reflect(i, f);
    return sf + divide_one_minus(f - sf, scale(-1, tilde_coroot_[i]));
}

ExpPoly PolyRep::demazure_word(const std::vector<int>& word, const ExpPoly& f) const
{
    ExpPoly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = demazure(*it, r);
    return r;
}

ExpPoly PolyRep::demazure_char(const Coweight& tau) const
{
    const auto& Wf = W_.finite();
    int u = Wf.to_dominant(tau);
    return demazure_word(Wf.word(u), monomial(Wf.act(Wf.inverse(u), tau)));
}

ExpPoly PolyRep::schur(const Coweight& lambda) const
{
    if (!W_.datum().is_dominant(lambda))
        throw std::invalid_argument("schur: " + vec_to_string(lambda) + " is not dominant");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = schur_memo_.find(lambda);
        if (it != schur_memo_.end())
            return it->second;
    }
    ExpPoly r = demazure_word(W_.finite().word(W_.finite().longest()), monomial(lambda));
    std::lock_guard<std::mutex> lock(mutex_);
    schur_memo_.emplace(lambda, r);
    return r;
}

ExpPoly PolyRep::p_basis(const Coweight& tau) const
{
    const auto& Wf = W_.finite();
    int u = Wf.to_dominant(tau);
    int w_tau = W_.min_coset_rep(tau).second;
    ExpPoly r = hecke_act_finite(u, monomial(Wf.act(Wf.inverse(u), tau)));
    return scale(LaurentPoly(P_.v_of_finite(w_tau) * P_.v_of_finite(u)), r);
}

std::vector<Coweight> PolyRep::orbit(const Coweight& lambda) const
{
    std::set<Coweight> seen;
    for (int u = 0; u < W_.finite().size(); ++u)
        seen.insert(W_.finite().act(u, lambda));
    return {seen.begin(), seen.end()};
}

ExpPoly PolyRep::hall_littlewood(const Coweight& lambda) const
{
    if (!W_.datum().is_dominant(lambda))
        throw std::invalid_argument("hall_littlewood: " + vec_to_string(lambda) + " is not dominant");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = hl_memo_.find(lambda);
        if (it != hl_memo_.end())
            return it->second;
    }
    ExpPoly r;
    for (const auto& tau : orbit(lambda)) {
        int w_tau = W_.min_coset_rep(tau).second;
        r = r + scale(LaurentPoly(P_.v_of_finite(w_tau)), p_basis(tau));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    hl_memo_.emplace(lambda, r);
    return r;
}

DominantExpansion PolyRep::expand_in_schur(const ExpPoly& f) const
{
    if (!is_invariant(f))
        throw std::invalid_argument("expand_in_schur: input is not W_f-invariant");
    return expand_unitriangular(f, W_.datum(), [this](const Coweight& mu) { return schur(mu); }, "s");
}

DominantExpansion PolyRep::expand_in_hall_littlewood(const ExpPoly& f) const
{
    if (!is_invariant(f))
        throw std::invalid_argument("expand_in_hall_littlewood: input is not W_f-invariant");
    return expand_unitriangular(f, W_.datum(), [this](const Coweight& mu) { return hall_littlewood(mu); },
                                "P");
}

std::string PolyRep::format_expansion(const DominantExpansion& e, const std::string& prefix) const
{
    std::vector<std::pair<std::string, LaurentPoly>> terms;
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        terms.emplace_back(prefix + vec_to_string(it->first), it->second);
    return format_combination(terms, P_.variable_names());
}

} // namespace sphkl
