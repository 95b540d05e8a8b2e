#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sphkl {

/// Maximum number of independent parameter variables in a coefficient ring.
inline constexpr int kMaxVars = 6;

/// A monomial v_1^{e_1} ... v_k^{e_k} of the Laurent ring; unused slots are 0.
struct Monomial {
    std::array<int, kMaxVars> e{};

    static Monomial unit(int var, int power = 1)
    {
        Monomial m;
        m.e[var] = power;
        return m;
    }

    bool is_one() const
    {
        for (int x : e)
            if (x != 0)
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = e[i] + o.e[i];
        return r;
    }
    Monomial inverse() const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = -e[i];
        return r;
    }
    Monomial pow(int k) const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = k * e[i];
        return r;
    }

    /// Lexicographic on the exponent vector.
    auto operator<=>(const Monomial&) const = default;
};

/// Exact element of Z[v_1^{+-1}, ..., v_k^{+-1}] stored as sorted sparse terms.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, std::int64_t>;

    LaurentPoly() = default;
    LaurentPoly(std::int64_t c); // NOLINT: integers embed as constants
    LaurentPoly(const Monomial& m, std::int64_t c = 1);

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    /// Coefficient of the given monomial.
    std::int64_t coeff(const Monomial& m) const;
    /// Coefficient of 1; convenience for constants.
    std::int64_t constant_term() const { return coeff(Monomial{}); }
    bool is_monomial() const { return terms_.size() == 1 && terms_.front().second == 1; }

    /// Lowest and highest monomials in lexicographic order (requires nonzero).
    const Monomial& low() const { return terms_.front().first; }
    const Monomial& high() const { return terms_.back().first; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(std::int64_t c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, std::int64_t c) { return a *= c; }
    friend LaurentPoly operator*(std::int64_t c, LaurentPoly a) { return a *= c; }
    LaurentPoly times(const Monomial& m) const;

    bool operator==(const LaurentPoly&) const = default;

    /// The involution v^a -> v^{-a}.
    LaurentPoly bar() const;
    /// Sum of coefficients: the evaluation at all variables = 1.
    std::int64_t epsilon() const;

    /// Exact quotient; throws InternalError when d does not divide *this.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// Canonical text: terms by descending lexicographic exponent vector,
    /// e.g. "-v^2 + 1" or "-v*v0 + v*v0^-1".
    std::string to_string(std::span<const std::string> names) const;

    std::size_t hash() const;

private:
    void normalize();

    std::vector<Term> terms_; // ascending by monomial, nonzero coefficients
};

std::string monomial_to_string(const Monomial& m, std::span<const std::string> names);

/// Parses text produced by LaurentPoly::to_string (and simple variations such as
/// "v^2 - 3*v^-1 + 1"). Unknown variable names throw std::invalid_argument.
LaurentPoly parse_laurent(const std::string& text, std::span<const std::string> names);

} // namespace sphkl
