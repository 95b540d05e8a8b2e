#include "sphkl/hecke.hpp"

#include <algorithm>

namespace sphkl {

// ---------------------------------------------------------------------------
// ExpPoly

void add_term(ExpPoly& f, const Coweight& tau, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = f.try_emplace(tau, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            f.erase(it);
    }
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b)
{
    ExpPoly r = a;
    for (const auto& [tau, c] : b)
        add_term(r, tau, c);
    return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b)
{
    ExpPoly r = a;
    for (const auto& [tau, c] : b)
        add_term(r, tau, -c);
    return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b)
{
    ExpPoly r;
    for (const auto& [x, c] : a)
        for (const auto& [y, d] : b)
            add_term(r, add(x, y), c * d);
    return r;
}

ExpPoly scale(const LaurentPoly& c, const ExpPoly& f)
{
    ExpPoly r;
    for (const auto& [tau, d] : f)
        add_term(r, tau, c * d);
    return r;
}

ExpPoly monomial(const Coweight& tau, const LaurentPoly& c)
{
    ExpPoly r;
    add_term(r, tau, c);
    return r;
}

ExpPoly shift(const ExpPoly& f, const Coweight& by)
{
    ExpPoly r;
    for (const auto& [tau, c] : f)
        r.emplace(add(tau, by), c);
    return r;
}

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

ExpPoly divide_one_minus(const ExpPoly& f, const Coweight& beta)
{
    std::size_t pivot = 0;
    while (pivot < beta.size() && beta[pivot] == 0)
        ++pivot;
    if (pivot == beta.size())
        throw std::domain_error("division by 1 - e^0");
    // Split the support into lines base + t*beta.
    std::map<Coweight, std::map<int, LaurentPoly>> lines;
    for (const auto& [tau, c] : f) {
        int t = floor_div(tau[pivot], beta[pivot]);
        lines[axpy(tau, -t, beta)][t] = c;
    }
    // (1 - e^beta) q = f means q_t = f_t + q_{t-1}; q vanishes past the last term.
    ExpPoly q;
    for (const auto& [base, line] : lines) {
        LaurentPoly running;
        int t = line.begin()->first;
        const int last = line.rbegin()->first;
        auto it = line.begin();
        for (; t <= last; ++t) {
            if (it != line.end() && it->first == t) {
                running += it->second;
                ++it;
            }
            if (t == last) {
                if (!running.is_zero())
                    throw InternalError("exponential polynomial not divisible by 1 - e^" + vec_to_string(beta));
                break;
            }
            if (!running.is_zero())
                q.emplace(axpy(base, t, beta), running);
        }
    }
    return q;
}

std::string format_exp(const ExpPoly& f, std::span<const std::string> names)
{
    std::vector<std::pair<std::string, LaurentPoly>> terms;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        terms.emplace_back("e" + vec_to_string(it->first), it->second);
    return format_combination(terms, names);
}

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement HeckeElement::basis(const AffineElement& w, const LaurentPoly& c)
{
    HeckeElement h;
    h.add(w, c);
    return h;
}

LaurentPoly HeckeElement::coeff(const AffineElement& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add(const AffineElement& w, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h)
{
    HeckeElement r;
    if (c.is_zero())
        return r;
    for (const auto& [w, d] : h.terms_)
        r.terms_.emplace(w, c * d);
    return r;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(const Parameters& params) : W_(params.weyl()), P_(params)
{
    for (int a = 0; a < W_.num_nodes(); ++a) {
        const Monomial& m = P_.node(a);
        quad_.push_back(LaurentPoly(m.inverse()) - LaurentPoly(m));
    }
    const auto& Wf = W_.finite();
    const int w0 = Wf.longest();
    LaurentPoly sum;
    for (int u = 0; u < Wf.size(); ++u) {
        theta_.add(W_.finite_element(u), LaurentPoly(P_.v_of_finite(Wf.mul(u, w0))));
        Monomial vu = P_.v_of_finite(u);
        sum += LaurentPoly(vu * vu);
    }
    p_scalar_ = sum.times(P_.v_of_finite(w0).inverse());
}

HeckeElement HeckeAlgebra::right_mul_gen(const HeckeElement& h, int a) const
{
    HeckeElement out;
    for (const auto& [w, c] : h.terms()) {
        AffineElement ws = W_.right_mul_simple(w, a);
        out.add(ws, c);
        if (W_.length(ws) < W_.length(w))
            out.add(w, c * quad_[a]);
    }
    return out;
}

HeckeElement HeckeAlgebra::left_mul_gen(int a, const HeckeElement& h) const
{
    HeckeElement out;
    for (const auto& [w, c] : h.terms()) {
        AffineElement sw = W_.left_mul_simple(a, w);
        out.add(sw, c);
        if (W_.length(sw) < W_.length(w))
            out.add(w, c * quad_[a]);
    }
    return out;
}

HeckeElement HeckeAlgebra::right_mul_gen_inv(const HeckeElement& h, int a) const
{
    HeckeElement out = right_mul_gen(h, a);
    out -= quad_[a] * h;
    return out;
}

HeckeElement HeckeAlgebra::left_mul_gen_inv(int a, const HeckeElement& h) const
{
    HeckeElement out = left_mul_gen(a, h);
    out -= quad_[a] * h;
    return out;
}

HeckeElement HeckeAlgebra::right_mul_omega(const HeckeElement& h, const AffineElement& omega) const
{
    if (omega == W_.identity())
        return h;
    HeckeElement out;
    for (const auto& [w, c] : h.terms())
        out.add(W_.mul(w, omega), c);
    return out;
}

HeckeElement HeckeAlgebra::left_mul_omega(const AffineElement& omega, const HeckeElement& h) const
{
    if (omega == W_.identity())
        return h;
    HeckeElement out;
    for (const auto& [w, c] : h.terms())
        out.add(W_.mul(omega, w), c);
    return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const
{
    HeckeElement out;
    if (y.size() <= x.size()) {
        for (const auto& [w, c] : y.terms()) {
            ReducedWord rw = W_.reduced_word(w);
            HeckeElement t = right_mul_omega(x, rw.omega);
            for (int a : rw.letters)
                t = right_mul_gen(t, a);
            out += c * t;
        }
    } else {
        for (const auto& [u, c] : x.terms()) {
            ReducedWord rw = W_.reduced_word(u);
            HeckeElement t = y;
            for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
                t = left_mul_gen(*it, t);
            out += c * left_mul_omega(rw.omega, t);
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::inverse_gen(int a) const
{
    HeckeElement h = HeckeElement::basis(W_.simple_reflection(a));
    h.add(W_.identity(), -quad_[a]);
    return h;
}

HeckeElement HeckeAlgebra::inverse_basis(const AffineElement& w) const
{
    // (H_omega H_{s_1} ... H_{s_r})^{-1} = H_{s_r}^{-1} ... H_{s_1}^{-1} H_{omega^{-1}}
    ReducedWord rw = W_.reduced_word(w);
    HeckeElement t = HeckeElement::basis(W_.identity());
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
        t = right_mul_gen_inv(t, *it);
    return right_mul_omega(t, W_.inverse(rw.omega));
}

HeckeElement HeckeAlgebra::dual_basis(const AffineElement& w) const
{
    {
        std::lock_guard<std::mutex> lock(dual_mutex_);
        auto it = dual_memo_.find(w);
        if (it != dual_memo_.end())
            return it->second;
    }
    HeckeElement result;
    const int len = W_.length(w);
    if (len == 0) {
        result = HeckeElement::basis(w);
    } else {
        int descent = -1;
        AffineElement ws;
        for (int a = 0; a < W_.num_nodes() && descent < 0; ++a) {
            ws = W_.right_mul_simple(w, a);
            if (W_.length(ws) < len)
                descent = a;
        }
        if (descent < 0)
            throw InternalError("element of positive length without a right descent");
        // H_w = H_{ws} H_s, so d(H_w) = d(H_{ws}) H_s^{-1}.
        result = right_mul_gen_inv(dual_basis(ws), descent);
    }
    std::lock_guard<std::mutex> lock(dual_mutex_);
    if (dual_memo_.size() > cache_limit_)
        dual_memo_.clear();
    dual_memo_.emplace(w, result);
    return result;
}

HeckeElement HeckeAlgebra::dual(const HeckeElement& h) const
{
    HeckeElement out;
    for (const auto& [w, c] : h.terms())
        out += c.bar() * dual_basis(w);
    return out;
}

HeckeElement HeckeAlgebra::Y_with(const Coweight& tau, const Coweight& mu) const
{
    const auto& datum = W_.datum();
    Coweight lambda = add(tau, mu);
    if (!datum.is_dominant(mu) || !datum.is_dominant(lambda))
        throw std::invalid_argument("Y_with: mu and tau + mu must be dominant");
    ReducedWord rw = W_.reduced_word(W_.translation(mu));
    HeckeElement t = HeckeElement::basis(W_.translation(lambda));
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
        t = right_mul_gen_inv(t, *it);
    return right_mul_omega(t, W_.inverse(rw.omega));
}

HeckeElement HeckeAlgebra::Y(const Coweight& tau) const
{
    {
        std::lock_guard<std::mutex> lock(y_mutex_);
        auto it = y_memo_.find(tau);
        if (it != y_memo_.end())
            return it->second;
    }
    const auto& datum = W_.datum();
    Coweight mu(tau.size(), 0);
    while (!datum.is_dominant(add(tau, mu)))
        mu = add(mu, datum.two_rho_check());
    HeckeElement result = Y_with(tau, mu);
    std::lock_guard<std::mutex> lock(y_mutex_);
    if (y_memo_.size() > cache_limit_)
        y_memo_.clear();
    y_memo_.emplace(tau, result);
    return result;
}

HeckeElement HeckeAlgebra::Phi(const ExpPoly& xi) const
{
    HeckeElement out;
    for (const auto& [tau, c] : xi)
        out += c * Y(tau);
    return out;
}

HeckeElement HeckeAlgebra::Phi_w(const ExpPoly& xi, int u) const
{
    const auto& Wf = W_.finite();
    ExpPoly moved;
    for (const auto& [tau, c] : xi)
        add_term(moved, Wf.act(Wf.inverse(u), tau), c);
    AffineElement uu = W_.finite_element(u);
    return mul(mul(HeckeElement::basis(uu), Phi(moved)), inverse_basis(uu));
}

std::string HeckeAlgebra::format(const HeckeElement& h) const
{
    std::vector<std::tuple<int, std::string, std::string>> rows;
    for (const auto& [w, c] : h.terms())
        rows.emplace_back(W_.length(w), W_.to_string(w), P_.format(c));
    std::sort(rows.begin(), rows.end());
    if (rows.empty())
        return "0\n";
    std::string out;
    for (const auto& [len, w, c] : rows)
        out += c + "  @  " + w + "\n";
    return out;
}

} // namespace sphkl
