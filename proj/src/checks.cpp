#include "sphkl/checks.hpp"

#include <random>
#include <set>
#include <sstream>

#include "sphkl/oracles.hpp"

namespace sphkl::checks {

void CheckResult::fail(std::string note)
{
    ++failures;
    if (notes.size() < 5)
        notes.push_back(std::move(note));
}

void CheckResult::merge(const CheckResult& other)
{
    cases += other.cases;
    failures += other.failures;
    for (const auto& n : other.notes)
        if (notes.size() < 5)
            notes.push_back(n);
}

namespace {

// Runs f and turns exceptions into failures, so one broken case does not hide the rest.
template <class F>
void guarded(CheckResult& r, const std::string& what, F&& f)
{
    ++r.cases;
    try {
        if (!f())
            r.fail(what);
    } catch (const std::exception& e) {
        r.fail(what + ": " + e.what());
    }
}

std::vector<Coweight> box(int rank, int radius)
{
    std::vector<Coweight> out;
    Coweight t(rank, -radius);
    while (true) {
        out.push_back(t);
        int k = 0;
        while (k < rank && t[k] == radius)
            t[k++] = -radius;
        if (k == rank)
            break;
        ++t[k];
    }
    return out;
}

// Elements of all double cosets of the grid, deduplicated.
std::vector<AffineElement> sample_elements(const Session& s, int max_length)
{
    std::set<AffineElement> seen;
    for (const auto& lam : grid(s, max_length))
        for (const auto& w : s.weyl().double_coset(lam))
            seen.insert(w);
    for (int a = 0; a < s.weyl().num_nodes(); ++a)
        seen.insert(s.weyl().simple_reflection(a));
    for (const auto& o : s.weyl().omega_generators())
        seen.insert(o);
    return {seen.begin(), seen.end()};
}

std::string cw(const Coweight& x) { return vec_to_string(x); }

LaurentPoly quad(const Parameters& P, int a)
{
    return LaurentPoly(P.node(a).inverse()) - LaurentPoly(P.node(a));
}

} // namespace

std::vector<Coweight> grid(const Session& s, int max_length)
{
    return s.weyl().dominant_grid(max_length, 1);
}

CheckResult kl_certificates(const Session& s, int max_length)
{
    CheckResult r{"KL certificates"};
    for (const auto& lam : grid(s, max_length))
        guarded(r, "lambda=" + cw(lam), [&] { return s.spherical().kl_spherical(lam).ok(); });
    return r;
}

CheckResult hl_unitriangular(const Session& s, int max_length)
{
    CheckResult r{"Hall-Littlewood unitriangular"};
    const auto& W = s.weyl();
    for (const auto& lam : grid(s, max_length)) {
        guarded(r, "lambda=" + cw(lam), [&] {
            auto e = s.rep().expand_in_schur(s.rep().hall_littlewood(lam));
            if (!e.count(lam) || !(e.at(lam) == LaurentPoly(1)))
                return false;
            for (const auto& [nu, c] : e) {
                if (nu == lam)
                    continue;
                if (!W.coweight_leq(nu, lam) || s.params().cone().contains(c) != Membership::Yes)
                    return false;
            }
            return true;
        });
    }
    return r;
}

CheckResult tensor(const Session& s, int max_length)
{
    CheckResult r{"tensor multiplicities"};
    auto table = oracles::character_table(s.datum(), s.params().tilde());
    auto g = grid(s, max_length);
    for (const auto& lam : g) {
        for (const auto& mu : g) {
            guarded(r, "lambda=" + cw(lam) + " mu=" + cw(mu), [&] {
                auto m = s.spherical().tensor_multiplicities(lam, mu);
                return m == table.tensor_decompose(lam, mu) && s.spherical().star_matches(lam, mu, m);
            });
        }
    }
    return r;
}

CheckResult weights(const Session& s, int max_length)
{
    CheckResult r{"weight multiplicities"};
    auto table = oracles::character_table(s.datum(), s.params().tilde());
    auto g = grid(s, max_length);
    for (const auto& lam : g) {
        std::set<Coweight> mus(g.begin(), g.end());
        for (const auto& [mu, m] : table.character(lam))
            if (table.is_dominant(mu))
                mus.insert(mu);
        for (const auto& mu : mus)
            guarded(r, "lambda=" + cw(lam) + " mu=" + cw(mu), [&] {
                return s.spherical().weight_multiplicity(lam, mu) == table.freudenthal(lam, mu);
            });
    }
    return r;
}

CheckResult characters(const Session& s, int max_length)
{
    CheckResult r{"Demazure character = Weyl character"};
    auto table = oracles::character_table(s.datum(), s.params().tilde());
    for (const auto& lam : grid(s, max_length)) {
        guarded(r, "lambda=" + cw(lam), [&] {
            std::map<Coweight, std::int64_t> forgot;
            for (const auto& [tau, c] : s.rep().schur(lam))
                if (auto e = c.epsilon(); e != 0)
                    forgot.emplace(tau, e);
            return forgot == table.character(lam);
        });
    }
    return r;
}

CheckResult commutation(const Session& s, int radius)
{
    CheckResult r{"commutation relations"};
    const auto& H = s.hecke();
    const auto& P = s.params();
    const auto& R = s.rep();
    for (int i = 0; i < s.datum().num_simple(); ++i) {
        const LaurentPoly a = quad(P, i);
        const LaurentPoly b = LaurentPoly(P.node_v0(i).inverse()) - LaurentPoly(P.node_v0(i));
        const Coweight& ac = s.datum().simple_coroot(i);
        const bool special = P.tilde().special.at(i);
        for (const auto& tau : box(s.weyl().rank(), radius)) {
            guarded(r, "s" + std::to_string(i + 1) + " tau=" + cw(tau), [&] {
                ExpPoly xi = monomial(tau);
                ExpPoly sxi = R.reflect(i, xi);
                ExpPoly d = xi - sxi;
                // Non-special: a (xi - s xi)/(1 - e^{-a^v}); special: two terms over 1 - e^{-2a^v}.
                ExpPoly q = special ? divide_one_minus(scale(a, d) + scale(b, shift(d, scale(-1, ac))), scale(-2, ac))
                                    : scale(a, divide_one_minus(d, scale(-1, ac)));
                HeckeElement lhs = H.left_mul_gen(i, H.Phi(xi)) - H.right_mul_gen(H.Phi(sxi), i);
                return lhs == H.Phi(q);
            });
        }
    }
    return r;
}

CheckResult quadratic_braid(const Session& s, int max_length)
{
    CheckResult r{"quadratic and braid relations"};
    const auto& W = s.weyl();
    const auto& H = s.hecke();
    const auto& P = s.params();
    const auto& R = s.rep();
    const int N = W.num_nodes();
    const HeckeElement one = HeckeElement::basis(W.identity());

    for (int a = 0; a < N; ++a) {
        guarded(r, "H_s^2 at node " + W.node_name(a), [&] {
            HeckeElement hs = HeckeElement::basis(W.simple_reflection(a));
            return H.right_mul_gen(hs, a) == one + quad(P, a) * hs &&
                   H.mul(H.inverse_gen(a), hs) == one;
        });
        for (int b = a + 1; b < N; ++b) {
            const int m = W.coxeter_entry(a, b);
            if (m == 0)
                continue;
            guarded(r, "braid " + W.node_name(a) + "," + W.node_name(b), [&] {
                HeckeElement x = one, y = one;
                for (int k = 0; k < m; ++k) {
                    x = H.right_mul_gen(x, k % 2 ? b : a);
                    y = H.right_mul_gen(y, k % 2 ? a : b);
                }
                return x == y;
            });
        }
    }

    // Any reduced word builds H_w.
    std::mt19937 rng(12345);
    for (const auto& w : sample_elements(s, max_length)) {
        guarded(r, "reduced words of " + W.to_string(w), [&] {
            for (int trial = 0; trial < 4; ++trial) {
                ReducedWord rw = W.reduced_word(w, &rng);
                HeckeElement h = HeckeElement::basis(rw.omega);
                for (int a : rw.letters)
                    h = H.right_mul_gen(h, a);
                if (!(h == HeckeElement::basis(w)) || static_cast<int>(rw.letters.size()) != W.length(w))
                    return false;
            }
            return true;
        });
    }

    // The same relations for the operators on the polynomial representation.
    const int k = W.num_finite_nodes();
    for (const auto& tau : box(W.rank(), 2)) {
        ExpPoly f = monomial(tau);
        guarded(r, "operators on e^" + cw(tau), [&] {
            for (int i = 0; i < k; ++i) {
                ExpPoly hf = R.hecke_act(i, f);
                if (!(R.hecke_act(i, hf) == f + scale(quad(P, i), hf)))
                    return false;
                for (int j = i + 1; j < k; ++j) {
                    const int m = W.coxeter_entry(i, j);
                    ExpPoly x = f, y = f;
                    for (int t = 0; t < m; ++t) {
                        x = R.hecke_act(t % 2 ? j : i, x);
                        y = R.hecke_act(t % 2 ? i : j, y);
                    }
                    if (!(x == y))
                        return false;
                }
            }
            return true;
        });
    }
    return r;
}

CheckResult duality(const Session& s, int max_length)
{
    CheckResult r{"duality d"};
    const auto& W = s.weyl();
    const auto& H = s.hecke();
    for (int a = 0; a < W.num_nodes(); ++a)
        guarded(r, "d(H_s) at " + W.node_name(a), [&] {
            return H.dual(HeckeElement::basis(W.simple_reflection(a))) == H.inverse_gen(a);
        });
    auto elems = sample_elements(s, max_length);
    for (const auto& w : elems) {
        guarded(r, "d(d(H_w)) for " + W.to_string(w), [&] {
            HeckeElement h = HeckeElement::basis(w);
            return H.dual(H.dual(h)) == h;
        });
    }
    // d is multiplicative.
    for (std::size_t i = 0; i < elems.size() && i < 12; ++i) {
        for (std::size_t j = 0; j < elems.size() && j < 12; ++j) {
            guarded(r, "d(xy) for " + W.to_string(elems[i]) + ", " + W.to_string(elems[j]), [&] {
                HeckeElement x = HeckeElement::basis(elems[i]), y = HeckeElement::basis(elems[j]);
                return H.dual(H.mul(x, y)) == H.mul(H.dual(x), H.dual(y));
            });
        }
    }
    // Phi of an invariant is self-dual.
    for (const auto& lam : grid(s, std::min(max_length, 6)))
        guarded(r, "d(Phi(s_lambda)) for " + cw(lam), [&] {
            HeckeElement h = H.Phi(s.rep().schur(lam));
            return H.dual(h) == h;
        });
    return r;
}

CheckResult bernstein(const Session& s)
{
    CheckResult r{"Bernstein elements"};
    const auto& H = s.hecke();
    const Coweight& shift2 = s.datum().two_rho_check();
    auto taus = box(s.weyl().rank(), 1);
    for (const auto& tau : taus) {
        guarded(r, "Y independent of mu at " + cw(tau), [&] {
            Coweight mu(tau.size(), 0);
            while (!s.datum().is_dominant(add(tau, mu)))
                mu = add(mu, shift2);
            return H.Y(tau) == H.Y_with(tau, add(mu, shift2));
        });
    }
    for (const auto& x : taus)
        for (const auto& y : taus)
            guarded(r, "Y_x Y_y = Y_{x+y} at " + cw(x) + "," + cw(y), [&] {
                return H.mul(H.Y(x), H.Y(y)) == H.Y(add(x, y));
            });
    return r;
}

CheckResult translation_length(const Session& s, int max_length)
{
    CheckResult r{"lengths"};
    const auto& W = s.weyl();
    for (const auto& lam : grid(s, max_length))
        guarded(r, "l(t_lambda) for " + cw(lam), [&] {
            return W.length(W.translation(lam)) == pair(s.datum().two_rho(), lam);
        });
    for (const auto& w : sample_elements(s, max_length))
        guarded(r, "length of " + W.to_string(w), [&] {
            return W.length(w) == oracles::length_bruteforce(W, w);
        });
    return r;
}

CheckResult reflection_order(const Session& s, int radius)
{
    CheckResult r{"reflection order property"};
    const auto& W = s.weyl();
    // s_b(tau) compared with tau, for b = a + k delta positive (k = 0 needs a > 0).
    for (const auto& tau : box(W.rank(), radius)) {
        for (const auto& root : s.datum().positive_roots()) {
            for (int sign : {1, -1}) {
                for (int k = sign > 0 ? 0 : 1; k <= 2; ++k) {
                    const int value = sign * pair(root.root, tau) + k;
                    Coweight image = axpy(tau, -sign * value, root.coroot);
                    guarded(r, "tau=" + cw(tau), [&] {
                        const bool ge = W.coweight_leq(tau, image);
                        const bool le = W.coweight_leq(image, tau);
                        if (value > 0)
                            return ge && !le;
                        if (value < 0)
                            return le && !ge;
                        return image == tau;
                    });
                }
            }
        }
    }
    return r;
}

CheckResult alpha_strings(const Session& s, int radius)
{
    CheckResult r{"alpha-string chains"};
    const auto& W = s.weyl();
    for (const auto& tau : box(W.rank(), radius)) {
        for (const auto& root : s.datum().positive_roots()) {
            const int N = pair(root.root, tau);
            if (N <= 0)
                continue;
            guarded(r, "tau=" + cw(tau), [&] {
                // tau_N > tau_0 > tau_{N-1} > tau_1 > ...
                std::vector<int> order;
                for (int lo = 0, hi = N; lo <= hi; ++lo, --hi) {
                    order.push_back(hi);
                    if (lo != hi)
                        order.push_back(lo);
                }
                for (std::size_t i = 0; i + 1 < order.size(); ++i) {
                    Coweight big = axpy(tau, -order[i], root.coroot);
                    Coweight small = axpy(tau, -order[i + 1], root.coroot);
                    if (!W.coweight_leq(small, big) || W.coweight_leq(big, small))
                        return false;
                }
                return true;
            });
        }
    }
    return r;
}

CheckResult bruhat_oracle(const Session& s, int max_length)
{
    CheckResult r{"Bruhat order vs subwords"};
    const auto& W = s.weyl();
    auto elems = sample_elements(s, max_length);
    for (const auto& u : elems)
        for (const auto& w : elems) {
            if (W.length(w) > max_length)
                continue;
            guarded(r, W.to_string(u) + " <= " + W.to_string(w), [&] {
                return W.bruhat_leq(u, w) == oracles::bruhat_bruteforce(W, u, w);
            });
        }
    return r;
}

CheckResult orbit_sum(const Session& s, int max_length)
{
    CheckResult r{"orbit-sum Hall-Littlewood"};
    if (!s.params().equal_standard_parameters() || s.params().tilde().any_special())
        return r;
    const LaurentPoly t(Monomial::unit(0, 2));
    for (const auto& lam : grid(s, max_length)) {
        guarded(r, "lambda=" + cw(lam), [&] {
            ExpPoly R = oracles::orbit_sum_HL(s.datum(), s.params().tilde(), lam, t);
            ExpPoly P = s.rep().hall_littlewood(lam);
            if (!P.count(lam) || !R.count(lam))
                return false;
            LaurentPoly c = R.at(lam).divide_exact(P.at(lam));
            return R == scale(c, P);
        });
    }
    return r;
}

CheckResult kl_generic(const Session& s, int max_length)
{
    CheckResult r{"KL elements vs standard recursion"};
    if (!s.params().equal_standard_parameters())
        return r;
    oracles::KLGeneric oracle(s.hecke());
    for (const auto& lam : grid(s, max_length)) {
        guarded(r, "lambda=" + cw(lam), [&] {
            auto cert = s.spherical().kl_spherical(lam);
            return oracle.element(cert.n_lambda, max_length) == cert.element;
        });
    }
    return r;
}

std::vector<CheckResult> structural(const Session& s, int max_length)
{
    const int small = std::min(max_length, 6);
    return {quadratic_braid(s, small), duality(s, small),        bernstein(s),
            translation_length(s, max_length), reflection_order(s, 2), alpha_strings(s, 2),
            bruhat_oracle(s, small),           orbit_sum(s, max_length), kl_generic(s, small)};
}

std::vector<CheckResult> run_all(const Session& s, int max_length)
{
    std::vector<CheckResult> out{kl_certificates(s, max_length), hl_unitriangular(s, max_length),
                                 tensor(s, std::min(max_length, 6)), weights(s, max_length),
                                 characters(s, max_length),       commutation(s, 2)};
    for (auto& c : structural(s, max_length))
        out.push_back(std::move(c));
    return out;
}

} // namespace sphkl::checks
