#include "sphkl/affine_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace sphkl {

// ---------------------------------------------------------------------------
// FiniteWeyl

FiniteWeyl::FiniteWeyl(const RootDatum& datum) : simple_roots_(datum.simple_roots())
{
    const int n = datum.rank();
    const int k = datum.num_simple();
    std::vector<IntMatrix> gens;
    for (int i = 0; i < k; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        const auto& a = datum.simple_root(i);
        const auto& av = datum.simple_coroot(i);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                s(r, c) -= av[r] * a[c];
        gens.push_back(s);
    }
    matrices_.push_back(IntMatrix::identity(n));
    index_[matrices_.front()] = 0;
    length_.push_back(0);
    word_.emplace_back();
    for (std::size_t q = 0; q < matrices_.size(); ++q) {
        for (int i = 0; i < k; ++i) {
            IntMatrix m = matrices_[q] * gens[i];
            if (index_.count(m))
                continue;
            index_[m] = static_cast<int>(matrices_.size());
            matrices_.push_back(m);
            length_.push_back(length_[q] + 1);
            auto w = word_[q];
            w.push_back(i);
            word_.push_back(std::move(w));
            if (matrices_.size() > 100000)
                throw DatumError("finite Weyl group too large");
        }
    }
    for (int i = 0; i < k; ++i)
        simple_.push_back(index_.at(gens[i]));
    const int N = size();
    mul_.assign(N, std::vector<int>(N));
    inverse_.assign(N, -1);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
            mul_[u][v] = index_.at(matrices_[u] * matrices_[v]);
            if (mul_[u][v] == 0)
                inverse_[u] = v;
        }
    const auto& pos = datum.positive_roots();
    sign_after_.assign(N, std::vector<int>(pos.size()));
    for (int u = 0; u < N; ++u)
        for (std::size_t r = 0; r < pos.size(); ++r) {
            Weight img = compose(pos[r].root, u);
            sign_after_[u][r] = datum.find_positive(img) >= 0 ? 1 : -1;
        }
    by_length_.resize(N);
    std::iota(by_length_.begin(), by_length_.end(), 0);
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [this](int a, int b) { return length_[a] < length_[b]; });
    longest_ = by_length_.back();
}

int FiniteWeyl::find(const IntMatrix& m) const
{
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

int FiniteWeyl::to_dominant(std::span<const int> tau) const
{
    for (int u : by_length_) {
        Coweight x = act(inverse_[u], tau);
        bool dominant = true;
        for (const auto& a : simple_roots_)
            if (pair(a, x) < 0)
                dominant = false;
        if (dominant)
            return u;
    }
    throw InternalError("no Weyl group element makes the coweight dominant");
}

// ---------------------------------------------------------------------------
// AffineWeyl

AffineWeyl::AffineWeyl(RootDatum datum) : datum_(std::move(datum)), finite_(datum_)
{
    const int k = datum_.num_simple();
    for (int i = 0; i < k; ++i) {
        int idx = datum_.find_positive(datum_.simple_root(i));
        nodes_.push_back(AffineRoot{datum_.positive_roots()[idx], 0});
        reflections_.push_back(finite_element(finite_.simple(i)));
    }
    const int n = rank();
    for (const auto& comp : datum_.components()) {
        const FiniteRoot& theta = datum_.positive_roots()[comp.maximal_root];
        nodes_.push_back(AffineRoot{theta.negated(), 1});
        IntMatrix s = IntMatrix::identity(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                s(r, c) -= theta.coroot[r] * theta.root[c];
        int idx = finite_.find(s);
        if (idx < 0)
            throw InternalError("reflection in the maximal root is not in W_f");
        // s_{-theta + delta} = t_{theta^v} s_theta
        reflections_.push_back(AffineElement{theta.coroot, idx});
    }
    central_ = integer_kernel(datum_.simple_coroots(), n);
}

std::string AffineWeyl::node_name(int a) const
{
    const int k = datum_.num_simple();
    if (a < k)
        return "s" + std::to_string(a + 1);
    return "a" + std::to_string(a - k + 1);
}

AffineElement AffineWeyl::mul(const AffineElement& x, const AffineElement& y) const
{
    // (t_s u)(t_t v) = t_{s + u(t)} (uv)
    return {add(x.tau, finite_.act(x.fin, y.tau)), finite_.mul(x.fin, y.fin)};
}

AffineElement AffineWeyl::inverse(const AffineElement& x) const
{
    int ui = finite_.inverse(x.fin);
    return {scale(-1, finite_.act(ui, x.tau)), ui};
}

Coweight AffineWeyl::act(const AffineElement& w, std::span<const int> lambda) const
{
    return add(finite_.act(w.fin, lambda), w.tau);
}

AffineRoot AffineWeyl::act_on_affine_root(const AffineRoot& alpha, const AffineElement& w) const
{
    // alpha^w = abar o wbar + (abar(tau) + m) delta
    Weight img = finite_.compose(alpha.finite.root, w.fin);
    AffineRoot out;
    out.level = pair(alpha.finite.root, w.tau) + alpha.level;
    int idx = datum_.find_positive(img);
    if (idx >= 0) {
        out.finite = datum_.positive_roots()[idx];
    } else {
        idx = datum_.find_positive(scale(-1, img));
        if (idx < 0)
            throw InternalError("image of a root is not a root");
        out.finite = datum_.positive_roots()[idx].negated();
    }
    return out;
}

int AffineWeyl::length(const AffineElement& w) const
{
    // t_tau wbar = wbar t_sigma with sigma = wbar^{-1}(tau); then
    // l(wbar t_sigma) = sum_{a in D+ cap (D+)^wbar} |a(sigma)| + sum_{a in D+ \ (D+)^wbar} |a(sigma)+1|.
    const int inv = finite_.inverse(w.fin);
    Coweight sigma = finite_.act(inv, w.tau);
    const auto& pos = datum_.positive_roots();
    int len = 0;
    for (std::size_t r = 0; r < pos.size(); ++r) {
        int x = pair(pos[r].root, sigma);
        // a in (D+)^wbar  <=>  a o wbar^{-1} > 0
        len += finite_.root_sign_after(inv, static_cast<int>(r)) > 0 ? std::abs(x) : std::abs(x + 1);
    }
    return len;
}

bool AffineWeyl::is_right_descent(const AffineElement& w, int a) const
{
    return length(right_mul_simple(w, a)) < length(w);
}

bool AffineWeyl::is_left_descent(int a, const AffineElement& w) const
{
    return length(left_mul_simple(a, w)) < length(w);
}

ReducedWord AffineWeyl::reduced_word(const AffineElement& w, std::mt19937* rng) const
{
    ReducedWord out;
    AffineElement cur = w;
    int len = length(cur);
    while (len > 0) {
        std::vector<int> descents;
        for (int a = 0; a < num_nodes(); ++a)
            if (length(right_mul_simple(cur, a)) == len - 1) {
                descents.push_back(a);
                if (!rng)
                    break;
            }
        if (descents.empty())
            throw InternalError("element of positive length without a right descent");
        int a = descents.front();
        if (rng)
            a = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng)];
        out.letters.push_back(a);
        cur = right_mul_simple(cur, a);
        --len;
    }
    std::reverse(out.letters.begin(), out.letters.end());
    out.omega = std::move(cur);
    return out;
}

bool AffineWeyl::in_coroot_lattice(std::span<const int> tau) const
{
    auto c = coordinates_in(datum_.simple_coroots(), tau);
    if (!c)
        return false;
    for (const auto& x : *c)
        if (x.denominator() != 1)
            return false;
    return true;
}

bool AffineWeyl::same_component(const AffineElement& x, const AffineElement& y) const
{
    return in_coroot_lattice(mul(inverse(x), y).tau);
}

std::pair<AffineElement, int> AffineWeyl::min_coset_rep(const Coweight& tau) const
{
    for (int u : finite_.by_length()) {
        Coweight x = finite_.act(finite_.inverse(u), tau);
        bool antidominant = true;
        for (const auto& a : datum_.simple_roots())
            if (pair(a, x) > 0)
                antidominant = false;
        if (antidominant)
            return {AffineElement{tau, u}, u};
    }
    throw InternalError("no antidominant conjugate found");
}

AffineElement AffineWeyl::longest_double_rep(const Coweight& lambda) const
{
    if (!datum_.is_dominant(lambda))
        throw std::invalid_argument("coweight " + vec_to_string(lambda) + " is not dominant");
    return mul(w0(), translation(lambda));
}

std::vector<AffineElement> AffineWeyl::double_coset(const Coweight& lambda) const
{
    std::set<AffineElement> seen;
    AffineElement t = translation(lambda);
    for (int u = 0; u < finite_.size(); ++u) {
        AffineElement ut = mul(finite_element(u), t);
        for (int v = 0; v < finite_.size(); ++v)
            seen.insert(mul(ut, finite_element(v)));
    }
    return {seen.begin(), seen.end()};
}

bool AffineWeyl::bruhat_leq(const AffineElement& u, const AffineElement& w) const
{
    if (u == w)
        return true;
    if (!same_component(u, w))
        return false;
    return bruhat_rec(u, w);
}

bool AffineWeyl::bruhat_rec(const AffineElement& u, const AffineElement& w) const
{
    if (u == w)
        return true;
    const int lu = length(u), lw = length(w);
    if (lu >= lw)
        return false;
    auto key = std::make_pair(u, w);
    {
        std::lock_guard<std::mutex> lock(bruhat_mutex_);
        auto it = bruhat_memo_.find(key);
        if (it != bruhat_memo_.end())
            return it->second;
    }
    int descent = -1;
    AffineElement sw;
    for (int a = 0; a < num_nodes() && descent < 0; ++a) {
        sw = left_mul_simple(a, w);
        if (length(sw) < lw)
            descent = a;
    }
    if (descent < 0)
        throw InternalError("element of positive length without a left descent");
    AffineElement su = left_mul_simple(descent, u);
    // Lifting: for s a left descent of w, u <= w iff min(u, su) <= sw.
    bool result = length(su) < lu ? bruhat_rec(su, sw) : bruhat_rec(u, sw);
    std::lock_guard<std::mutex> lock(bruhat_mutex_);
    if (bruhat_memo_.size() > cache_limit_)
        bruhat_memo_.clear();
    bruhat_memo_.emplace(std::move(key), result);
    return result;
}

bool AffineWeyl::coweight_leq(const Coweight& eta, const Coweight& tau) const
{
    return bruhat_leq(min_coset_rep(eta).first, min_coset_rep(tau).first);
}

std::vector<AffineElement> AffineWeyl::omega_generators() const
{
    std::set<AffineElement> gens;
    for (int i = 0; i < rank(); ++i) {
        Coweight e(rank(), 0);
        e[i] = 1;
        AffineElement omega = reduced_word(translation(e)).omega;
        if (omega != identity())
            gens.insert(omega);
    }
    return {gens.begin(), gens.end()};
}

int AffineWeyl::coxeter_entry(int a, int b) const
{
    if (a == b)
        return 1;
    const auto& x = nodes_.at(a).finite;
    const auto& y = nodes_.at(b).finite;
    int p = pair(x.root, y.coroot) * pair(y.root, x.coroot);
    switch (p) {
    case 0:
        return 2;
    case 1:
        return 3;
    case 2:
        return 4;
    case 3:
        return 6;
    default:
        return 0;
    }
}

std::vector<int> AffineWeyl::parameter_classes() const
{
    const int N = num_nodes();
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    auto unite = [&](int a, int b) { parent[root(a)] = root(b); };
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (coxeter_entry(a, b) == 3)
                unite(a, b);
    for (const auto& omega : omega_generators()) {
        AffineElement omega_inv = inverse(omega);
        for (int a = 0; a < N; ++a) {
            AffineElement conj = mul(mul(omega, reflections_[a]), omega_inv);
            auto it = std::find(reflections_.begin(), reflections_.end(), conj);
            if (it == reflections_.end())
                throw InternalError("length-zero element does not permute simple reflections");
            unite(a, static_cast<int>(it - reflections_.begin()));
        }
    }
    // Renumber classes by first occurrence.
    std::vector<int> id(N, -1), out(N);
    int next = 0;
    for (int a = 0; a < N; ++a) {
        int r = root(a);
        if (id[r] < 0)
            id[r] = next++;
        out[a] = id[r];
    }
    return out;
}

std::vector<Coweight> AffineWeyl::dominant_grid(int max_length, int central_window) const
{
    const int n = rank();
    std::vector<std::vector<int>> rows = datum_.simple_roots();
    std::vector<int> bounds(rows.size(), max_length);
    for (const auto& y : central_) {
        rows.push_back(y);
        bounds.push_back(central_window);
    }
    auto inv = rational_inverse(rows);
    std::vector<int> radius(n);
    for (int i = 0; i < n; ++i) {
        Rational r = 0;
        for (int j = 0; j < n; ++j)
            r += (inv[i][j].numerator() < 0 ? -inv[i][j] : inv[i][j]) * bounds[j];
        radius[i] = static_cast<int>(r.numerator() / r.denominator()) + 1;
    }
    std::vector<std::pair<int, Coweight>> found;
    Coweight x(n);
    for (int i = 0; i < n; ++i)
        x[i] = -radius[i];
    const int lw0 = finite_.length(finite_.longest());
    while (true) {
        bool keep = datum_.is_dominant(x);
        for (const auto& y : central_)
            keep = keep && std::abs(pair(y, x)) <= central_window;
        if (keep) {
            int len = lw0 + pair(datum_.two_rho(), x);
            if (len <= max_length)
                found.emplace_back(len, x);
        }
        int i = 0;
        while (i < n && x[i] == radius[i]) {
            x[i] = -radius[i];
            ++i;
        }
        if (i == n)
            break;
        ++x[i];
    }
    std::sort(found.begin(), found.end());
    std::vector<Coweight> out;
    for (auto& f : found)
        out.push_back(std::move(f.second));
    return out;
}

std::string AffineWeyl::to_string(const AffineElement& w) const
{
    std::vector<std::string> parts;
    if (!is_zero(w.tau))
        parts.push_back("t" + vec_to_string(w.tau));
    for (int i : finite_.word(w.fin))
        parts.push_back("s" + std::to_string(i + 1));
    if (parts.empty())
        return "id";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += "*" + parts[i];
    return out;
}

AffineElement AffineWeyl::parse(const std::string& text) const
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty Weyl group element");
    AffineElement result = identity();
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('*', pos);
        if (end == std::string::npos)
            end = s.size();
        std::string tok = s.substr(pos, end - pos);
        AffineElement factor;
        auto parse_index = [&](const std::string& digits, int count) {
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw std::invalid_argument("bad generator '" + tok + "'");
            int i = std::stoi(digits);
            if (i < 1 || i > count)
                throw std::invalid_argument("generator '" + tok + "' out of range");
            return i - 1;
        };
        if (tok == "id" || tok == "e") {
            factor = identity();
        } else if (tok == "w0") {
            factor = w0();
        } else if (tok.size() > 2 && tok[0] == 't' && tok[1] == '[' && tok.back() == ']') {
            Coweight tau;
            std::stringstream ss(tok.substr(2, tok.size() - 3));
            std::string item;
            while (std::getline(ss, item, ','))
                tau.push_back(std::stoi(item));
            if (static_cast<int>(tau.size()) != rank())
                throw std::invalid_argument("translation '" + tok + "' has wrong dimension");
            factor = translation(tau);
        } else if (!tok.empty() && tok[0] == 's') {
            factor = reflections_[parse_index(tok.substr(1), num_finite_nodes())];
        } else if (!tok.empty() && tok[0] == 'a') {
            int c = parse_index(tok.substr(1), num_nodes() - num_finite_nodes());
            factor = reflections_[num_finite_nodes() + c];
        } else {
            throw std::invalid_argument("cannot parse Weyl group element '" + text + "'");
        }
        result = mul(result, factor);
        if (end == s.size())
            break;
        pos = end + 1;
    }
    return result;
}

} // namespace sphkl
