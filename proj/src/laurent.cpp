#include "sphkl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sphkl/lattice.hpp"

namespace sphkl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(std::int64_t c)
{
    if (c != 0)
        terms_.emplace_back(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const Monomial& m, std::int64_t c)
{
    if (c != 0)
        terms_.emplace_back(m, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Monomial m = terms_[i].first;
        std::int64_t c = 0;
        for (; i < terms_.size() && terms_[i].first == m; ++i)
            c = checked_add(c, terms_[i].second);
        if (c != 0)
            terms_[out++] = {m, c};
    }
    terms_.resize(out);
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

std::int64_t LaurentPoly::coeff(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m)
        return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.terms_.empty())
        return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            std::int64_t c = checked_add(a->second, b->second);
            if (c != 0)
                merged.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (b.terms_.size() == 1)
        return a.times(b.terms_.front().first) * b.terms_.front().second;
    if (a.terms_.size() == 1)
        return b.times(a.terms_.front().first) * a.terms_.front().second;
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.emplace_back(ma * mb, checked_mul(ca, cb));
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second = checked_mul(t.second, c);
    return *this;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.first = t.first * m;
    return r; // multiplication by a monomial preserves the order
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(it->first.inverse(), it->second);
    return r;
}

std::int64_t LaurentPoly::epsilon() const
{
    std::int64_t s = 0;
    for (const auto& t : terms_)
        s = checked_add(s, t.second);
    return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero())
        return {};
    // The quotient's exponents lie in the box [min(f)-min(d), max(f)-max(d)].
    std::array<int, kMaxVars> lo{}, hi{};
    for (int i = 0; i < kMaxVars; ++i) {
        int fmin = terms_.front().first.e[i], fmax = fmin, dmin = d.terms_.front().first.e[i],
            dmax = dmin;
        for (const auto& t : terms_) {
            fmin = std::min(fmin, t.first.e[i]);
            fmax = std::max(fmax, t.first.e[i]);
        }
        for (const auto& t : d.terms_) {
            dmin = std::min(dmin, t.first.e[i]);
            dmax = std::max(dmax, t.first.e[i]);
        }
        lo[i] = fmin - dmin;
        hi[i] = fmax - dmax;
    }
    LaurentPoly rem = *this;
    std::vector<Term> quotient;
    const auto& [dm, dc] = d.terms_.back();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.terms_.back();
        if (rc % dc != 0)
            throw InternalError("inexact Laurent division");
        Monomial t = rm * dm.inverse();
        for (int i = 0; i < kMaxVars; ++i)
            if (t.e[i] < lo[i] || t.e[i] > hi[i])
                throw InternalError("inexact Laurent division");
        std::int64_t c = rc / dc;
        quotient.emplace_back(t, c);
        rem -= d.times(t) * c;
    }
    return from_terms(std::move(quotient));
}

std::string monomial_to_string(const Monomial& m, std::span<const std::string> names)
{
    std::string out;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] == 0)
            continue;
        if (static_cast<std::size_t>(i) >= names.size())
            throw std::invalid_argument("monomial uses an unnamed variable");
        if (!out.empty())
            out += '*';
        out += names[i];
        if (m.e[i] != 1)
            out += '^' + std::to_string(m.e[i]);
    }
    return out;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::int64_t c = it->second;
        std::string mono = monomial_to_string(it->first, names);
        std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + '*' + mono;
        first = false;
    }
    return out;
}

std::size_t LaurentPoly::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [m, c] : terms_) {
        for (int x : m.e)
            h = h * 1000003u ^ std::hash<int>{}(x);
        h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
    }
    return h;
}

LaurentPoly parse_laurent(const std::string& text, std::span<const std::string> names)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw std::invalid_argument("empty Laurent polynomial");
    std::vector<LaurentPoly::Term> terms;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos) {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("expected integer in '" + text + "'");
        return std::stoll(s.substr(start, pos - start));
    };
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        }
        std::int64_t coef = 1;
        Monomial m;
        bool have_factor = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (have_factor) {
                if (s[i] != '*')
                    throw std::invalid_argument("expected '*' in '" + text + "'");
                ++i;
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef *= read_int(i);
            } else {
                std::size_t start = i;
                while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                    ++i;
                std::string name = s.substr(start, i - start);
                auto it = std::find(names.begin(), names.end(), name);
                if (name.empty() || it == names.end())
                    throw std::invalid_argument("unknown variable '" + name + "' in '" + text + "'");
                int power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    power = static_cast<int>(read_int(i));
                }
                m.e[it - names.begin()] += power;
            }
            have_factor = true;
        }
        if (!have_factor)
            throw std::invalid_argument("dangling sign in '" + text + "'");
        terms.emplace_back(m, sign * coef);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace sphkl
