#include "sphkl/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace sphkl {

FiniteRoot FiniteRoot::negated() const
{
    FiniteRoot r{scale(-1, root), scale(-1, coroot), -sign, scale(-1, simple_coords)};
    return r;
}

RootDatum::RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Coweight> simple_coroots)
    : rank_(rank), simple_roots_(std::move(simple_roots)), simple_coroots_(std::move(simple_coroots))
{
    if (rank_ <= 0)
        throw DatumError("rank must be positive");
    if (simple_roots_.empty())
        throw DatumError("at least one simple root is required");
    if (simple_roots_.size() != simple_coroots_.size())
        throw DatumError("number of simple roots and simple coroots differ");
    for (const auto& v : simple_roots_)
        if (static_cast<int>(v.size()) != rank_)
            throw DatumError("simple root " + vec_to_string(v) + " has wrong dimension");
    for (const auto& v : simple_coroots_)
        if (static_cast<int>(v.size()) != rank_)
            throw DatumError("simple coroot " + vec_to_string(v) + " has wrong dimension");
    const int k = num_simple();
    if (rank_of(simple_roots_) != k)
        throw DatumError("simple roots are linearly dependent");
    if (rank_of(simple_coroots_) != k)
        throw DatumError("simple coroots are linearly dependent");
    cartan_.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            cartan_[i][j] = pair(simple_roots_[j], simple_coroots_[i]);
    for (int i = 0; i < k; ++i)
        if (cartan_[i][i] != 2)
            throw DatumError("pairing of simple root " + std::to_string(i + 1) + " with its coroot is not 2");
    classify();
    enumerate_roots();
}

namespace {

// Squared root lengths (up to a common factor) along the tree of a component.
std::map<int, Rational> relative_lengths(const std::vector<int>& nodes,
                                         const std::vector<std::vector<int>>& C)
{
    std::map<int, Rational> len;
    len[nodes.front()] = 1;
    std::deque<int> queue{nodes.front()};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j : nodes) {
            if (i == j || C[i][j] == 0 || len.count(j))
                continue;
            // C_ij / C_ji = |alpha_j|^2 / |alpha_i|^2
            len[j] = len[i] * Rational(C[i][j], C[j][i]);
            queue.push_back(j);
        }
    }
    return len;
}

} // namespace

void RootDatum::classify()
{
    const int k = num_simple();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            int a = cartan_[i][j], b = cartan_[j][i];
            if (a > 0 || (a == 0) != (b == 0) || a * b > 3)
                throw DatumError("Cartan matrix is not of finite type (entries " + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
        }
    component_of_.assign(k, -1);
    for (int start = 0; start < k; ++start) {
        if (component_of_[start] >= 0)
            continue;
        Component comp;
        std::deque<int> queue{start};
        component_of_[start] = static_cast<int>(components_.size());
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp.nodes.push_back(i);
            for (int j = 0; j < k; ++j)
                if (cartan_[i][j] != 0 && component_of_[j] < 0) {
                    component_of_[j] = static_cast<int>(components_.size());
                    queue.push_back(j);
                }
        }
        std::sort(comp.nodes.begin(), comp.nodes.end());
        components_.push_back(std::move(comp));
    }

    for (auto& comp : components_) {
        const auto& nodes = comp.nodes;
        const int n = static_cast<int>(nodes.size());
        comp.rank = n;
        int edges = 0, triple = 0, doubles = 0;
        std::map<int, int> degree;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int bond = cartan_[nodes[a]][nodes[b]] * cartan_[nodes[b]][nodes[a]];
                if (bond == 0)
                    continue;
                ++edges;
                ++degree[nodes[a]];
                ++degree[nodes[b]];
                if (bond == 2)
                    ++doubles;
                if (bond == 3)
                    ++triple;
            }
        if (edges != n - 1)
            throw DatumError("Dynkin diagram contains a cycle");
        auto len = relative_lengths(nodes, cartan_);
        Rational maxlen = 0;
        for (auto& [node, l] : len)
            maxlen = std::max(maxlen, l);
        for (int node : nodes)
            comp.is_long.push_back(len[node] == maxlen);

        std::vector<int> branch;
        for (auto& [node, d] : degree) {
            if (d > 3)
                throw DatumError("Dynkin diagram node of degree > 3");
            if (d == 3)
                branch.push_back(node);
        }
        auto fail = [] { throw DatumError("Cartan matrix is not of finite type"); };
        if (n == 1) {
            comp.family = 'A';
        } else if (triple > 0) {
            if (n != 2)
                fail();
            comp.family = 'G';
        } else if (doubles > 1) {
            fail();
        } else if (doubles == 1) {
            if (!branch.empty())
                fail();
            // Locate the double bond on the path.
            int e1 = -1, e2 = -1;
            for (int a : nodes)
                for (int b : nodes)
                    if (a < b && cartan_[a][b] * cartan_[b][a] == 2) {
                        e1 = a;
                        e2 = b;
                    }
            bool at_end = degree[e1] == 1 || degree[e2] == 1;
            if (n == 2) {
                comp.family = 'C';
            } else if (at_end) {
                int end = degree[e1] == 1 ? e1 : e2;
                comp.family = len[end] == maxlen ? 'C' : 'B';
            } else if (n == 4) {
                comp.family = 'F';
            } else {
                fail();
            }
        } else if (branch.empty()) {
            comp.family = 'A';
        } else {
            if (branch.size() != 1)
                fail();
            // arm lengths from the branch node
            std::vector<int> arms;
            int b = branch.front();
            for (int nb : nodes) {
                if (nb == b || cartan_[b][nb] == 0)
                    continue;
                int length = 0, prev = b, cur = nb;
                while (true) {
                    ++length;
                    int next = -1;
                    for (int x : nodes)
                        if (x != prev && x != cur && cartan_[cur][x] != 0)
                            next = x;
                    if (next < 0)
                        break;
                    prev = cur;
                    cur = next;
                }
                arms.push_back(length);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1)
                comp.family = 'D';
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
                comp.family = 'E';
            else
                fail();
        }
    }
}

void RootDatum::enumerate_roots()
{
    const int k = num_simple();
    // Reflection closure, starting from the simple roots. Coroots are carried
    // along: s_i(beta)^v = s_i(beta^v).
    std::map<Weight, Coweight> roots;
    std::deque<Weight> queue;
    for (int i = 0; i < k; ++i) {
        if (roots.emplace(simple_roots_[i], simple_coroots_[i]).second)
            queue.push_back(simple_roots_[i]);
        auto neg = scale(-1, simple_roots_[i]);
        if (roots.emplace(neg, scale(-1, simple_coroots_[i])).second)
            queue.push_back(neg);
    }
    const std::size_t limit = 4096;
    while (!queue.empty()) {
        Weight beta = queue.front();
        queue.pop_front();
        const Coweight betav = roots.at(beta);
        for (int i = 0; i < k; ++i) {
            Weight r = reflect_weight(i, beta);
            Coweight rv = reflect_coweight(i, betav);
            auto [it, inserted] = roots.emplace(r, rv);
            if (inserted) {
                queue.push_back(r);
                if (roots.size() > limit)
                    throw DatumError("root system is not finite");
            } else if (it->second != rv) {
                throw DatumError("inconsistent coroot for root " + vec_to_string(r));
            }
        }
    }
    for (const auto& [root, coroot] : roots) {
        auto coords = coordinates_in(simple_roots_, root);
        if (!coords)
            throw InternalError("root outside the span of simple roots");
        std::vector<int> ic;
        bool nonneg = true, nonpos = true;
        for (const auto& c : *coords) {
            if (c.denominator() != 1)
                throw DatumError("root " + vec_to_string(root) + " is not an integral combination of simple roots");
            int v = static_cast<int>(c.numerator());
            ic.push_back(v);
            nonneg = nonneg && v >= 0;
            nonpos = nonpos && v <= 0;
        }
        if (!nonneg && !nonpos)
            throw DatumError("root " + vec_to_string(root) + " has mixed-sign simple coordinates");
        if (nonneg)
            positive_.push_back(FiniteRoot{root, coroot, 1, ic});
    }
    // Order by height, then lexicographically, for reproducibility.
    std::sort(positive_.begin(), positive_.end(), [](const FiniteRoot& a, const FiniteRoot& b) {
        int ha = 0, hb = 0;
        for (int c : a.simple_coords)
            ha += c;
        for (int c : b.simple_coords)
            hb += c;
        if (ha != hb)
            return ha < hb;
        return a.root < b.root;
    });
    two_rho_.assign(rank_, 0);
    two_rho_check_.assign(rank_, 0);
    for (const auto& r : positive_) {
        two_rho_ = add(two_rho_, r.root);
        two_rho_check_ = add(two_rho_check_, r.coroot);
    }

    for (std::size_t c = 0; c < components_.size(); ++c) {
        auto& comp = components_[c];
        for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
            const auto& r = positive_[idx];
            bool inside = true;
            for (int i = 0; i < k; ++i)
                if (r.simple_coords[i] != 0 && component_of_[i] != static_cast<int>(c))
                    inside = false;
            if (!inside)
                continue;
            bool maximal = true;
            for (int i = 0; i < k && maximal; ++i)
                if (is_root(add(r.root, simple_roots_[i])))
                    maximal = false;
            if (maximal) {
                if (comp.maximal_root >= 0)
                    throw InternalError("component with two maximal roots");
                comp.maximal_root = static_cast<int>(idx);
            }
        }
        if (comp.maximal_root < 0)
            throw InternalError("component without maximal root");
    }
}

bool RootDatum::is_long(int simple) const
{
    const auto& comp = components_.at(component_of_.at(simple));
    auto it = std::find(comp.nodes.begin(), comp.nodes.end(), simple);
    return comp.is_long[it - comp.nodes.begin()];
}

int RootDatum::find_positive(std::span<const int> root) const
{
    for (std::size_t i = 0; i < positive_.size(); ++i)
        if (std::equal(positive_[i].root.begin(), positive_[i].root.end(), root.begin(), root.end()))
            return static_cast<int>(i);
    return -1;
}

bool RootDatum::is_root(std::span<const int> root) const
{
    if (find_positive(root) >= 0)
        return true;
    auto neg = scale(-1, root);
    return find_positive(neg) >= 0;
}

Coweight RootDatum::reflect_coweight(int i, std::span<const int> tau) const
{
    return axpy(tau, -pair(simple_roots_[i], tau), simple_coroots_[i]);
}

Weight RootDatum::reflect_weight(int i, std::span<const int> x) const
{
    return axpy(x, -pair(x, simple_coroots_[i]), simple_roots_[i]);
}

bool RootDatum::is_dominant(std::span<const int> tau) const
{
    for (const auto& a : simple_roots_)
        if (pair(a, tau) < 0)
            return false;
    return true;
}

std::string RootDatum::describe() const
{
    std::ostringstream os;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (c)
            os << 'x';
        os << components_[c].family << components_[c].rank;
    }
    return os.str();
}

std::vector<FiniteRoot> enumerate_positive_roots(const RootDatum& datum)
{
    return datum.positive_roots();
}

std::vector<FiniteRoot> maximal_roots(const RootDatum& datum)
{
    std::vector<FiniteRoot> out;
    for (const auto& c : datum.components())
        out.push_back(datum.positive_roots()[c.maximal_root]);
    return out;
}

bool TildeSystem::any_special() const
{
    return std::find(special.begin(), special.end(), true) != special.end();
}

namespace {

bool in_orbit(const RootDatum& datum, const Weight& start, const Weight& target)
{
    std::set<Weight> seen{start};
    std::deque<Weight> queue{start};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        if (x == target)
            return true;
        for (int i = 0; i < datum.num_simple(); ++i) {
            Weight y = datum.reflect_weight(i, x);
            if (seen.insert(y).second)
                queue.push_back(y);
        }
    }
    return false;
}

} // namespace

TildeSystem detect_special(const RootDatum& datum, std::span<const int> node_param_ids)
{
    const int k = datum.num_simple();
    const int m = static_cast<int>(datum.components().size());
    if (static_cast<int>(node_param_ids.size()) != k + m)
        throw std::invalid_argument("detect_special: one parameter id per affine node required");
    TildeSystem t;
    t.special.assign(k, false);
    t.v0_node.resize(k);
    for (int i = 0; i < k; ++i) {
        const int c = datum.component_of(i);
        const auto& comp = datum.components()[c];
        const auto& theta = datum.positive_roots()[comp.maximal_root];
        bool type_c = comp.family == 'C' || comp.rank == 1;
        bool special = type_c && datum.is_long(i) && in_orbit(datum, datum.simple_root(i), theta.root) &&
                       node_param_ids[i] != node_param_ids[k + c];
        t.special[i] = special;
        t.v0_node[i] = special ? k + c : i;
        if (special) {
            Weight half = datum.simple_root(i);
            for (auto& x : half) {
                if (x % 2 != 0)
                    throw DatumError("special root " + vec_to_string(datum.simple_root(i)) +
                                     " cannot be halved inside X; unsupported datum");
                x /= 2;
            }
            t.simple_roots.push_back(half);
            t.simple_coroots.push_back(scale(2, datum.simple_coroot(i)));
        } else {
            t.simple_roots.push_back(datum.simple_root(i));
            t.simple_coroots.push_back(datum.simple_coroot(i));
        }
    }
    return t;
}

} // namespace sphkl
