#include "sphkl/lattice.hpp"

#include <numeric>
#include <sstream>

namespace sphkl {

std::vector<int> add(std::span<const int> x, std::span<const int> y)
{
    return axpy(x, 1, y);
}

std::vector<int> sub(std::span<const int> x, std::span<const int> y)
{
    return axpy(x, -1, y);
}

std::vector<int> scale(int c, std::span<const int> x)
{
    std::vector<int> r(x.begin(), x.end());
    for (auto& v : r)
        v *= c;
    return r;
}

std::vector<int> axpy(std::span<const int> x, int c, std::span<const int> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("vector dimension mismatch");
    std::vector<int> r(x.begin(), x.end());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += c * y[i];
    return r;
}

bool is_zero(std::span<const int> x)
{
    for (int v : x)
        if (v != 0)
            return false;
    return true;
}

std::string vec_to_string(std::span<const int> x)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            os << ',';
        os << x[i];
    }
    os << ']';
    return os.str();
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<int> IntMatrix::apply(std::span<const int> x) const
{
    std::vector<int> r(rows, 0);
    for (int i = 0; i < rows; ++i) {
        long long s = 0;
        for (int j = 0; j < cols; ++j)
            s += static_cast<long long>((*this)(i, j)) * x[j];
        r[i] = static_cast<int>(s);
    }
    return r;
}

std::vector<int> IntMatrix::apply_transpose(std::span<const int> x) const
{
    std::vector<int> r(cols, 0);
    for (int j = 0; j < cols; ++j) {
        long long s = 0;
        for (int i = 0; i < rows; ++i)
            s += static_cast<long long>((*this)(i, j)) * x[i];
        r[j] = static_cast<int>(s);
    }
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    IntMatrix r(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            int a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols; ++j)
                r(i, j) += a * other(k, j);
        }
    return r;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix to_rational(const std::vector<std::vector<int>>& rows)
{
    RMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows)
        m.emplace_back(r.begin(), r.end());
    return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& m, int ncols)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].numerator() == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].numerator() == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank_of(const std::vector<std::vector<int>>& vectors)
{
    if (vectors.empty())
        return 0;
    RMatrix m = to_rational(vectors);
    return static_cast<int>(rref(m, static_cast<int>(vectors.front().size())).size());
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<std::vector<int>>& basis,
                                                    std::span<const int> target)
{
    const int k = static_cast<int>(basis.size());
    const std::size_t n = target.size();
    // Augmented system: columns are basis vectors, last column the target.
    RMatrix m(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j)
            m[i][j] = basis[j].at(i);
        m[i][k] = target[i];
    }
    auto pivots = rref(m, k + 1);
    std::vector<Rational> coords(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k)
            return std::nullopt;
        coords[pivots[r]] = m[r][k];
    }
    return coords;
}

std::vector<std::vector<int>> integer_kernel(const std::vector<std::vector<int>>& rows, int n)
{
    RMatrix m = to_rational(rows);
    auto pivots = rref(m, n);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        std::int64_t l = 1;
        for (const auto& x : v)
            l = std::lcm(l, x.denominator());
        std::vector<int> iv(n);
        std::int64_t g = 0;
        for (int i = 0; i < n; ++i) {
            iv[i] = static_cast<int>(v[i].numerator() * (l / v[i].denominator()));
            g = std::gcd(g, static_cast<std::int64_t>(iv[i]));
        }
        if (g > 1)
            for (auto& x : iv)
                x = static_cast<int>(x / g);
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& rows)
{
    const std::size_t n = rows.size();
    RMatrix m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("rational_inverse: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = rows[i][j];
        m[i][n + i] = 1;
    }
    auto pivots = rref(m, static_cast<int>(n));
    if (pivots.size() != n)
        throw std::invalid_argument("rational_inverse: singular matrix");
    RMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

} // namespace sphkl
