#ifndef POLYADJ_EXACTLIN_HPP
#define POLYADJ_EXACTLIN_HPP

// Exact rational linear algebra on top of Eigen dense types.
//
// All routines are templated on the Eigen expression type so they accept
// blocks, transposes and products without forcing a copy at the call site.
// Elimination is plain Gauss-Jordan over the rationals; the pivot is the
// first nonzero entry in column order, so results are deterministic.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace polyadj {

using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index   = Eigen::Index;

class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
    QMatrix reduced;
    std::vector<Index> pivots;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon rref(const Eigen::MatrixBase<Derived>& m)
{
    Echelon out{m.template cast<Rational>(), {}};
    QMatrix& a = out.reduced;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index pivot = -1;
        for (Index r = row; r < a.rows(); ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            a.row(pivot).swap(a.row(row));
        const Rational inv = 1 / a(row, col);
        for (Index c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            const Rational factor = a(r, col);
            for (Index c = col; c < a.cols(); ++c)
                a(r, c) -= factor * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return rref(m).rank();
}

/// Rescale to integer entries with gcd 1 and a positive first nonzero entry.
/// The zero vector is returned unchanged.
inline QVector make_primitive(const QVector& v)
{
    Integer lcm_den = 1;
    for (Index i = 0; i < v.size(); ++i)
        lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(v[i])));
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        const Integer num = numerator(v[i]) * (lcm_den / Integer(denominator(v[i])));
        g = boost::multiprecision::gcd(g, abs(num));
    }
    if (g == 0)
        return v;
    Rational scale = Rational(lcm_den) / Rational(g);
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] < 0)
                scale = -scale;
            break;
        }
    }
    return v * scale;
}

/// Same as make_primitive but keeps the sign of the input.
inline QVector make_primitive_keep_sign(const QVector& v)
{
    QVector p = make_primitive(v);
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if ((v[i] < 0) != (p[i] < 0))
                p = -p;
            break;
        }
    }
    return p;
}

/// Basis of the right null space, one primitive-integer vector per free column.
template <typename Derived>
std::vector<QVector> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    const Echelon e = rref(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : e.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<QVector> basis;
    for (Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        QVector v = QVector::Zero(cols);
        v[free] = 1;
        for (Index r = 0; r < e.rank(); ++r)
            v[e.pivots[static_cast<std::size_t>(r)]] = -e.reduced(r, free);
        basis.push_back(make_primitive(v));
    }
    return basis;
}

/// A particular solution of m x = rhs, or nullopt when the system is inconsistent.
template <typename DerivedM, typename DerivedV>
std::optional<QVector> solve(const Eigen::MatrixBase<DerivedM>& m,
                             const Eigen::MatrixBase<DerivedV>& rhs)
{
    if (rhs.size() != m.rows())
        throw DimensionMismatch("solve: right-hand side length differs from row count");
    QMatrix augmented(m.rows(), m.cols() + 1);
    augmented.leftCols(m.cols()) = m.template cast<Rational>();
    augmented.col(m.cols()) = rhs.template cast<Rational>();
    const Echelon e = rref(augmented);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    QVector x = QVector::Zero(m.cols());
    for (Index r = 0; r < e.rank(); ++r)
        x[e.pivots[static_cast<std::size_t>(r)]] = e.reduced(r, m.cols());
    return x;
}

template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant: matrix is not square");
    QMatrix a = m.template cast<Rational>();
    const Index n = a.rows();
    Rational det = 1;
    for (Index col = 0; col < n; ++col) {
        Index pivot = -1;
        for (Index r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return Rational(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Index r = col + 1; r < n; ++r) {
            if (a(r, col) == 0)
                continue;
            const Rational factor = a(r, col) / a(col, col);
            for (Index c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

template <typename Derived>
QMatrix inverse(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse: matrix is not square");
    const Index n = m.rows();
    if (n == 0)
        return QMatrix(0, 0);
    QMatrix augmented(n, 2 * n);
    augmented.leftCols(n) = m.template cast<Rational>();
    augmented.rightCols(n) = QMatrix::Identity(n, n);
    const Echelon e = rref(augmented);
    if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    return e.reduced.rightCols(n);
}

/// Extend the given columns to a basis of Q^n by appending standard basis
/// vectors greedily. The given columns must be linearly independent.
template <typename Derived>
QMatrix complete_basis(const Eigen::MatrixBase<Derived>& cols)
{
    const Index n = cols.rows();
    QMatrix out = cols.template cast<Rational>();
    Index current = rank(out);
    if (current != out.cols())
        throw std::domain_error("complete_basis: columns are dependent");
    for (Index i = 0; i < n && out.cols() < n; ++i) {
        QMatrix trial(n, out.cols() + 1);
        trial.leftCols(out.cols()) = out;
        trial.col(out.cols()) = QVector::Unit(n, i);
        if (rank(trial) > current) {
            out = std::move(trial);
            ++current;
        }
    }
    return out;
}

inline QVector to_qvector(const std::vector<Rational>& entries)
{
    QVector v(static_cast<Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        v[static_cast<Index>(i)] = entries[i];
    return v;
}

/// Lexicographic comparison of equal-length vectors; used for sorting outputs.
inline bool lex_less(const QVector& a, const QVector& b)
{
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline bool is_zero(const QVector& v)
{
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0)
            return false;
    }
    return true;
}

inline bool equal(const QVector& a, const QVector& b)
{
    return a.size() == b.size() && a == b;
}

/// a and b span the same line (both nonzero).
inline bool proportional(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        return false;
    return equal(make_primitive(a), make_primitive(b)) && !is_zero(a);
}

}  // namespace polyadj

#endif
