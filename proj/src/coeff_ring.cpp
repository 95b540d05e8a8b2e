#include "sphkl/coeff_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sphkl {

std::map<std::string, int> parse_specialization(const std::string& text)
{
    std::map<std::string, int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("bad specialization entry '" + item + "', expected name=exponent");
        std::string name = item.substr(0, eq);
        std::size_t used = 0;
        int value = std::stoi(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1)
            throw std::invalid_argument("bad exponent in '" + item + "'");
        if (!out.emplace(name, value).second)
            throw std::invalid_argument("symbol '" + name + "' specialized twice");
    }
    return out;
}

std::string to_string(Membership m)
{
    switch (m) {
    case Membership::Yes:
        return "yes";
    case Membership::No:
        return "no";
    default:
        return "indeterminate";
    }
}

// ---------------------------------------------------------------------------
// PositiveCone

PositiveCone::PositiveCone(std::vector<Monomial> generators, std::size_t node_budget)
    : gens_(std::move(generators)), node_budget_(node_budget)
{
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    // Perceptron: converges iff some functional is positive on all generators.
    std::array<long long, kMaxVars> f{};
    for (int iter = 0; iter < 10000 && !gens_.empty(); ++iter) {
        bool updated = false;
        for (const auto& g : gens_) {
            long long x = 0;
            for (int i = 0; i < kMaxVars; ++i)
                x += f[i] * g.e[i];
            if (x <= 0) {
                for (int i = 0; i < kMaxVars; ++i)
                    f[i] += g.e[i];
                updated = true;
            }
        }
        if (!updated) {
            functional_ = f;
            break;
        }
    }
    if (functional_) {
        min_value_ = value(gens_.front());
        for (const auto& g : gens_)
            min_value_ = std::min(min_value_, value(g));
    }
}

long long PositiveCone::value(const Monomial& m) const
{
    long long x = 0;
    for (int i = 0; i < kMaxVars; ++i)
        x += (*functional_)[i] * m.e[i];
    return x;
}

Membership PositiveCone::search(const Monomial& m, std::size_t& budget) const
{
    auto it = memo_.find(m);
    if (it != memo_.end())
        return it->second ? Membership::Yes : Membership::No;
    if (std::binary_search(gens_.begin(), gens_.end(), m)) {
        memo_[m] = true;
        return Membership::Yes;
    }
    if (budget == 0)
        return Membership::Indeterminate;
    --budget;
    bool unknown = false;
    const long long vm = value(m);
    for (const auto& g : gens_) {
        if (vm - value(g) < min_value_)
            continue;
        Membership r = search(m * g.inverse(), budget);
        if (r == Membership::Yes) {
            memo_[m] = true;
            return r;
        }
        if (r == Membership::Indeterminate)
            unknown = true;
    }
    if (unknown)
        return Membership::Indeterminate;
    memo_[m] = false;
    return Membership::No;
}

Membership PositiveCone::contains(const Monomial& m) const
{
    if (!functional_)
        return Membership::Indeterminate;
    if (value(m) < min_value_)
        return Membership::No;
    std::lock_guard<std::mutex> lock(mutex_);
    std::size_t budget = node_budget_;
    return search(m, budget);
}

Membership PositiveCone::contains(const LaurentPoly& x) const
{
    Membership result = Membership::Yes;
    for (const auto& [m, c] : x.terms()) {
        Membership r = contains(m);
        if (r == Membership::No)
            return r;
        if (r == Membership::Indeterminate)
            result = r;
    }
    return result;
}

PhiReport phi_maps(const std::vector<Monomial>& generators, bool standard)
{
    PhiReport report;
    PositiveCone cone(generators);
    // phi(x) = 0 forces x = bar(x). A positive functional separates the exponents
    // of x from those of bar(x); without one some product of generators is 1 (Gordan).
    report.injective = cone.functional().has_value();
    if (!report.injective) {
        report.detail = "some product of generators equals 1, so phi kills a nonzero element";
        return report;
    }
    if (standard) {
        // L^- has basis v^k - v^-k (k > 0), each the image of v^k.
        report.surjective = true;
        report.detail = "standard case: v^k -> v^k - v^-k is a bijection of bases";
    } else {
        report.detail = "no generator product is bar-invariant; surjectivity not checked";
    }
    return report;
}

// ---------------------------------------------------------------------------
// Parameters

Parameters::Parameters(const AffineWeyl& W, std::vector<std::string> node_labels,
                       std::optional<std::map<std::string, int>> specialization)
    : W_(W), labels_(std::move(node_labels))
{
    const int N = W_.num_nodes();
    if (static_cast<int>(labels_.size()) != N)
        throw DatumError("expected " + std::to_string(N) + " node labels, got " +
                         std::to_string(labels_.size()));
    auto classes = W_.parameter_classes();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (classes[a] == classes[b] && labels_[a] != labels_[b])
                throw DatumError("label conflict: nodes " + W_.node_name(a) + " and " + W_.node_name(b) +
                                 " are conjugate but labelled '" + labels_[a] + "' and '" + labels_[b] + "'");
    for (const auto& l : labels_)
        if (std::find(spec_.symbols.begin(), spec_.symbols.end(), l) == spec_.symbols.end())
            spec_.symbols.push_back(l);
    spec_.specialization = std::move(specialization);

    if (spec_.specialization) {
        names_ = {"v"};
        for (const auto& [sym, n] : *spec_.specialization)
            if (std::find(spec_.symbols.begin(), spec_.symbols.end(), sym) == spec_.symbols.end())
                throw std::invalid_argument("specialization names unknown symbol '" + sym + "'");
        for (const auto& l : labels_) {
            auto it = spec_.specialization->find(l);
            if (it == spec_.specialization->end())
                throw std::invalid_argument("symbol '" + l + "' is not specialized");
            node_.push_back(Monomial::unit(0, it->second));
        }
    } else {
        if (spec_.symbols.size() > static_cast<std::size_t>(kMaxVars))
            throw DatumError("too many parameter classes (at most " + std::to_string(kMaxVars) + ")");
        names_ = spec_.symbols;
        for (const auto& l : labels_) {
            auto idx = std::find(names_.begin(), names_.end(), l) - names_.begin();
            node_.push_back(Monomial::unit(static_cast<int>(idx)));
        }
    }

    std::vector<int> ids;
    for (const auto& m : node_)
        ids.push_back(static_cast<int>(std::find(node_.begin(), node_.end(), m) - node_.begin()));
    tilde_ = detect_special(W_.datum(), ids);

    std::vector<Monomial> gens;
    if (spec_.specialization) {
        gens.push_back(Monomial::unit(0));
    } else {
        for (int i = 0; i < W_.num_finite_nodes(); ++i) {
            gens.push_back(node_[i]);
            if (tilde_.special[i]) {
                gens.push_back(node_[i] * node_v0(i));
                gens.push_back(node_[i] * node_v0(i).inverse());
            }
        }
    }
    cone_ = std::make_unique<PositiveCone>(std::move(gens));
}

Monomial Parameters::v_of(const AffineElement& w) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = v_memo_.find(w);
        if (it != v_memo_.end())
            return it->second;
    }
    Monomial m;
    for (int a : W_.reduced_word(w).letters)
        m = m * node_[a];
    std::lock_guard<std::mutex> lock(mutex_);
    if (v_memo_.size() > cache_limit_)
        v_memo_.clear();
    v_memo_.emplace(w, m);
    return m;
}

bool Parameters::equal_standard_parameters() const
{
    for (const auto& m : node_)
        if (!(m == Monomial::unit(0)))
            return false;
    return true;
}

std::string format_combination(const std::vector<std::pair<std::string, LaurentPoly>>& terms,
                               std::span<const std::string> names)
{
    std::string out;
    for (const auto& [label, c] : terms) {
        if (c.is_zero())
            continue;
        bool negative = false;
        std::string body;
        if (c.size() == 1) {
            const auto& [m, k] = c.terms().front();
            negative = k < 0;
            std::int64_t mag = negative ? -k : k;
            std::string mono = monomial_to_string(m, names);
            if (mono.empty())
                body = mag == 1 ? label : std::to_string(mag) + " " + label;
            else
                body = (mag == 1 ? mono : std::to_string(mag) + "*" + mono) + " " + label;
        } else {
            body = "(" + c.to_string(names) + ") " + label;
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

} // namespace sphkl
