#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace sphkl {

// Elements of X = Z^n (weights) and X^v = Z^n (coweights). The pairing
// between them is the dot product.
using Weight = std::vector<int>;
using Coweight = std::vector<int>;
using Rational = boost::rational<std::int64_t>;

/// Raised for malformed or unsupported root data.
class DatumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Seeing one means a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a computed object fails a property the theory guarantees
/// under the stated hypotheses (e.g. a non-unit pivot during elimination).
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int pair(std::span<const int> x, std::span<const int> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("pairing of vectors with different dimension");
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<long long>(x[i]) * y[i];
    return static_cast<int>(s);
}

std::vector<int> add(std::span<const int> x, std::span<const int> y);
std::vector<int> sub(std::span<const int> x, std::span<const int> y);
std::vector<int> scale(int c, std::span<const int> x);
/// x + c*y
std::vector<int> axpy(std::span<const int> x, int c, std::span<const int> y);
bool is_zero(std::span<const int> x);

/// "[1,0,-1]"
std::string vec_to_string(std::span<const int> x);

// Small dense integer matrices, row major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
    static IntMatrix identity(int n);

    int& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    std::vector<int> apply(std::span<const int> x) const;
    /// x^T M, i.e. the transpose applied to x.
    std::vector<int> apply_transpose(std::span<const int> x) const;
    IntMatrix operator*(const IntMatrix& other) const;
    auto operator<=>(const IntMatrix&) const = default;
};

/// Rank of the integer vectors viewed over Q.
int rank_of(const std::vector<std::vector<int>>& vectors);

/// Solve sum_i c_i basis[i] = target over Q. Returns nullopt when target is
/// outside the span. The basis must be linearly independent.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<std::vector<int>>& basis,
                                                    std::span<const int> target);

/// Integer basis of {x in Z^n : <row, x> = 0 for every row}.
std::vector<std::vector<int>> integer_kernel(const std::vector<std::vector<int>>& rows, int n);

/// Inverse of a square rational matrix given by integer rows; throws if singular.
std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& rows);

} // namespace sphkl
