#include "sphkl/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sphkl::oracles {

namespace {

bool nonnegative_integral(const std::optional<std::vector<Rational>>& c)
{
    if (!c)
        return false;
    for (const auto& x : *c)
        if (x.denominator() != 1 || x.numerator() < 0)
            return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// Characters

CharacterTable::CharacterTable(int rank, std::vector<Coweight> roots, std::vector<Weight> coroots)
    : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots))
{
    // All (root, coroot) pairs by closure under the simple reflections.
    std::set<std::pair<Coweight, Weight>> seen;
    std::deque<std::pair<Coweight, Weight>> queue;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        seen.emplace(roots_[i], coroots_[i]);
        queue.emplace_back(roots_[i], coroots_[i]);
    }
    while (!queue.empty()) {
        auto [b, bv] = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            Coweight nb = axpy(b, -pair(coroots_[i], b), roots_[i]);
            Weight nbv = axpy(bv, -pair(bv, roots_[i]), coroots_[i]);
            if (seen.emplace(nb, nbv).second)
                queue.emplace_back(nb, nbv);
        }
        if (seen.size() > 10000)
            throw std::runtime_error("character table: root system too large");
    }
    two_rho_.assign(rank_, 0);
    for (const auto& [b, bv] : seen) {
        if (nonnegative_integral(coordinates_in(roots_, b))) {
            positive_.push_back(b);
            positive_coroots_.push_back(bv);
            two_rho_ = add(two_rho_, b);
        }
    }
}

bool CharacterTable::below(const Coweight& lambda, const Coweight& mu) const
{
    if (roots_.empty())
        return lambda == mu;
    return nonnegative_integral(coordinates_in(roots_, sub(lambda, mu)));
}

std::int64_t CharacterTable::form(const Coweight& x, const Coweight& y) const
{
    std::int64_t s = 0;
    for (const auto& g : positive_coroots_)
        s += static_cast<std::int64_t>(pair(g, x)) * pair(g, y);
    return s;
}

bool CharacterTable::is_dominant(const Coweight& mu) const
{
    for (const auto& g : coroots_)
        if (pair(g, mu) < 0)
            return false;
    return true;
}

Coweight CharacterTable::dominant_conjugate(Coweight mu) const
{
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            int c = pair(coroots_[i], mu);
            if (c < 0) {
                mu = axpy(mu, -c, roots_[i]);
                changed = true;
            }
        }
    }
    return mu;
}

std::int64_t CharacterTable::freudenthal(const Coweight& lambda, const Coweight& mu) const
{
    if (!is_dominant(lambda))
        throw std::invalid_argument("freudenthal: highest weight must be dominant");
    if (!below(lambda, mu))
        return 0;
    Coweight dom = dominant_conjugate(mu);
    if (dom != mu)
        return freudenthal(lambda, dom);
    if (mu == lambda)
        return 1;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({lambda, mu});
        if (it != memo_.end())
            return it->second;
    }
    // (|l+rho|^2 - |m+rho|^2) m(mu) = 2 sum_{b>0} sum_{k>=1} m(mu+kb) (mu+kb, b)
    std::int64_t num = 0;
    for (const auto& b : positive_) {
        for (Coweight x = add(mu, b); below(lambda, x); x = add(x, b)) {
            std::int64_t m = freudenthal(lambda, x);
            if (m != 0)
                num += 2 * m * form(x, b);
        }
    }
    std::int64_t den = form(lambda, lambda) - form(mu, mu) + form(two_rho_, sub(lambda, mu));
    if (den <= 0 || num % den != 0)
        throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
    std::int64_t result = num / den;
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::make_pair(lambda, mu), result);
    return result;
}

std::map<Coweight, std::int64_t> CharacterTable::character(const Coweight& lambda) const
{
    std::map<Coweight, std::int64_t> out;
    std::set<Coweight> seen{lambda};
    std::deque<Coweight> queue{lambda};
    while (!queue.empty()) {
        Coweight mu = queue.front();
        queue.pop_front();
        std::int64_t m = freudenthal(lambda, mu);
        if (m == 0)
            continue;
        out.emplace(mu, m);
        for (const auto& b : roots_) {
            Coweight next = sub(mu, b);
            if (seen.insert(next).second && below(lambda, dominant_conjugate(next)))
                queue.push_back(next);
        }
    }
    return out;
}

std::map<Coweight, std::int64_t> CharacterTable::tensor_decompose(const Coweight& lambda,
                                                                  const Coweight& mu) const
{
    std::map<Coweight, std::int64_t> prod;
    for (const auto& [x, a] : character(lambda))
        for (const auto& [y, b] : character(mu))
            prod[add(x, y)] += a * b;
    std::map<Coweight, std::int64_t> out;
    auto height = [this](const Coweight& x) {
        std::int64_t h = 0;
        for (const auto& g : positive_coroots_)
            h += pair(g, x);
        return h;
    };
    while (true) {
        std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
        if (prod.empty())
            break;
        const Coweight* top = nullptr;
        for (const auto& [x, m] : prod)
            if (is_dominant(x) && (!top || height(x) > height(*top) || (height(x) == height(*top) && x > *top)))
                top = &x;
        if (!top)
            throw InternalError("tensor product character has no dominant weight");
        Coweight nu = *top;
        std::int64_t m = prod.at(nu);
        out.emplace(nu, m);
        for (const auto& [x, a] : character(nu))
            prod[x] -= m * a;
    }
    return out;
}

CharacterTable character_table(const RootDatum& datum, const TildeSystem& tilde)
{
    return CharacterTable(datum.rank(), tilde.simple_coroots, tilde.simple_roots);
}

// ---------------------------------------------------------------------------
// Hall-Littlewood by the orbit-sum formula

ExpPoly orbit_sum_HL(const RootDatum& datum, const TildeSystem& tilde, const Coweight& lambda,
                     const LaurentPoly& t)
{
    if (tilde.any_special())
        throw std::invalid_argument("orbit_sum_HL: unequal parameters are not supported");
    const int n = datum.rank();
    CharacterTable table(n, tilde.simple_coroots, tilde.simple_roots);
    // Positive roots b (in X^v) of the dual system, via the table's own closure.
    std::vector<Coweight> positive;
    {
        std::set<Coweight> seen(tilde.simple_coroots.begin(), tilde.simple_coroots.end());
        std::deque<Coweight> queue(seen.begin(), seen.end());
        while (!queue.empty()) {
            Coweight b = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < tilde.simple_coroots.size(); ++i) {
                Coweight nb = axpy(b, -pair(tilde.simple_roots[i], b), tilde.simple_coroots[i]);
                if (seen.insert(nb).second)
                    queue.push_back(nb);
            }
        }
        for (const auto& b : seen)
            if (nonnegative_integral(coordinates_in(tilde.simple_coroots, b)))
                positive.push_back(b);
    }
    // W as (matrix, sign) pairs by closure.
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < tilde.simple_coroots.size(); ++i) {
        IntMatrix s = IntMatrix::identity(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                s(r, c) -= tilde.simple_coroots[i][r] * tilde.simple_roots[i][c];
        gens.push_back(s);
    }
    std::map<IntMatrix, int> group{{IntMatrix::identity(n), 1}};
    std::deque<IntMatrix> queue{IntMatrix::identity(n)};
    while (!queue.empty()) {
        IntMatrix m = queue.front();
        queue.pop_front();
        int sign = group.at(m);
        for (const auto& g : gens) {
            IntMatrix x = m * g;
            if (group.emplace(x, -sign).second)
                queue.push_back(x);
        }
    }

    Coweight two_rho(n, 0);
    for (const auto& b : positive)
        two_rho = add(two_rho, b);
    ExpPoly F = monomial(lambda);
    for (const auto& b : positive)
        F = F * (monomial(Coweight(n, 0)) - monomial(scale(-1, b), t));
    // A = sum_w sign(w) e^{w rho - rho} w(e^lambda F); then R = A / prod (1 - e^{-b}).
    ExpPoly A;
    for (const auto& [m, sign] : group) {
        Coweight diff = sub(m.apply(two_rho), two_rho);
        for (auto& x : diff)
            x /= 2;
        for (const auto& [tau, c] : F)
            add_term(A, add(m.apply(tau), diff), sign > 0 ? c : -c);
    }
    for (const auto& b : positive)
        A = divide_one_minus(A, scale(-1, b));
    return A;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig elements for equal parameters

KLGeneric::KLGeneric(const HeckeAlgebra& hecke) : H_(hecke)
{
    if (!hecke.params().equal_standard_parameters())
        throw std::invalid_argument("kl_generic requires equal parameters v^s = v");
}

HeckeElement KLGeneric::element(const AffineElement& w, int length_bound) const
{
    if (H_.weyl().length(w) > length_bound)
        throw std::length_error("kl_generic: length bound exceeded");
    return compute(w);
}

HeckeElement KLGeneric::compute(const AffineElement& w) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(w);
        if (it != memo_.end())
            return it->second;
    }
    const AffineWeyl& W = H_.weyl();
    const int len = W.length(w);
    HeckeElement result;
    if (len == 0) {
        result = HeckeElement::basis(w);
    } else {
        int s = -1;
        for (int a = 0; a < W.num_nodes() && s < 0; ++a)
            if (W.length(W.right_mul_simple(w, a)) < len)
                s = a;
        const LaurentPoly v(Monomial::unit(0));
        HeckeElement prev = compute(W.right_mul_simple(w, s));
        // C_{w'} (H_s + v), then remove the non-positive parts top-down.
        result = H_.right_mul_gen(prev, s) + v * prev;
        while (true) {
            const AffineElement* top = nullptr;
            int top_len = -1;
            for (const auto& [u, c] : result.terms()) {
                if (u == w)
                    continue;
                bool positive = std::all_of(c.terms().begin(), c.terms().end(),
                                            [](const auto& t) { return t.first.e[0] > 0; });
                int lu = W.length(u);
                if (!positive && (lu > top_len || (lu == top_len && u < *top))) {
                    top = &u;
                    top_len = lu;
                }
            }
            if (!top)
                break;
            AffineElement u = *top;
            LaurentPoly sym;
            const LaurentPoly cu = result.coeff(u);
            for (const auto& [m, k] : cu.terms()) {
                if (m.e[0] > 0)
                    continue;
                sym += LaurentPoly(m, k);
                if (m.e[0] < 0)
                    sym += LaurentPoly(m.inverse(), k);
            }
            result -= sym * compute(u);
        }
        if (!(result.coeff(w) == LaurentPoly(1)))
            throw InternalError("kl_generic: leading coefficient is not 1");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(w, result);
    return result;
}

// ---------------------------------------------------------------------------
// Coxeter combinatorics

bool bruhat_bruteforce(const AffineWeyl& W, const AffineElement& u, const AffineElement& w)
{
    ReducedWord rw = W.reduced_word(w);
    const std::size_t r = rw.letters.size();
    if (r > 24)
        throw std::length_error("bruhat_bruteforce: word too long");
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        AffineElement x = rw.omega;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i))
                x = W.mul(x, W.simple_reflection(rw.letters[i]));
        if (x == u)
            return true;
    }
    return false;
}

int length_bruteforce(const AffineWeyl& W, const AffineElement& w)
{
    const RootDatum& datum = W.datum();
    const IntMatrix& M = W.finite().matrix(w.fin);
    auto is_positive = [&](const Weight& a) {
        return nonnegative_integral(coordinates_in(datum.simple_roots(), a));
    };
    std::vector<Weight> roots;
    for (const auto& r : datum.positive_roots()) {
        roots.push_back(r.root);
        roots.push_back(scale(-1, r.root));
    }
    // alpha = a + m delta is positive iff m > 0, or m = 0 and a > 0. Under w it
    // becomes (a o wbar) + (a(tau) + m) delta.
    int count = 0;
    for (const auto& a : roots) {
        const bool a_pos = is_positive(a);
        const Weight img = M.apply_transpose(a);
        const bool img_pos = is_positive(img);
        const int shift = pair(a, w.tau);
        for (int m = a_pos ? 0 : 1; m <= std::abs(shift) + 1; ++m) {
            int level = shift + m;
            if (level < 0 || (level == 0 && !img_pos))
                ++count;
        }
    }
    return count;
}

} // namespace sphkl::oracles
