#include "polyadj/projective.hpp"

#include "polyadj/errors.hpp"

namespace polyadj {

LinearForm LinearForm::oriented(const QVector& c)
{
    if (is_zero(c))
        throw InputError("linear form: all coefficients are zero");
    return LinearForm{make_primitive_keep_sign(c)};
}

LinearForm LinearForm::canonical(const QVector& c)
{
    if (is_zero(c))
        throw InputError("linear form: all coefficients are zero");
    return LinearForm{make_primitive(c)};
}

Rational LinearForm::at_affine(const QVector& x) const
{
    if (x.size() + 1 != coeffs.size())
        throw DimensionMismatch("linear form: point has wrong dimension");
    return coeffs[0] + coeffs.tail(x.size()).dot(x);
}

ProjectivePoint ProjectivePoint::from(const QVector& c)
{
    if (is_zero(c))
        throw InputError("projective point: zero vector");
    return ProjectivePoint{make_primitive(c)};
}

ProjectivePoint ProjectivePoint::from_affine(const QVector& x)
{
    QVector h(x.size() + 1);
    h[0] = 1;
    h.tail(x.size()) = x;
    return from(h);
}

QVector ProjectivePoint::affine() const
{
    if (!is_affine())
        throw GeometryError("projective point lies at infinity");
    return coords.tail(coords.size() - 1) / coords[0];
}

QMatrix LinearSubspace::basis() const
{
    if (spanning_points.empty())
        return QMatrix(0, 0);
    const Index rows = spanning_points.front().coords.size();
    QMatrix b(rows, static_cast<Index>(spanning_points.size()));
    for (std::size_t i = 0; i < spanning_points.size(); ++i)
        b.col(static_cast<Index>(i)) = spanning_points[i].coords;
    return b;
}

LinearSubspace LinearSubspace::cut_out_by(const std::vector<LinearForm>& forms, Index nvars)
{
    LinearSubspace s;
    QMatrix rows(0, nvars);
    Index current = 0;
    for (const LinearForm& f : forms) {
        QMatrix trial(rows.rows() + 1, nvars);
        trial.topRows(rows.rows()) = rows;
        trial.row(rows.rows()) = f.coeffs.transpose();
        const Index r = rank(trial);
        if (r > current) {
            rows = std::move(trial);
            current = r;
            s.defining_forms.push_back(LinearForm::canonical(f.coeffs));
        }
    }
    for (const QVector& v : kernel_basis(rows))
        s.spanning_points.push_back(ProjectivePoint::from(v));
    return s;
}

QVector restrict_linear(const QVector& form, const QVector& h, Index pivot)
{
    if (form.size() != h.size())
        throw DimensionMismatch("restrict_linear: forms live in different spaces");
    if (pivot < 0 || pivot >= h.size() || h[pivot] == 0)
        throw InputError("restrict_linear: pivot coefficient is zero");
    QVector out(h.size() - 1);
    const Rational ratio = form[pivot] / h[pivot];
    Index k = 0;
    for (Index i = 0; i < h.size(); ++i) {
        if (i == pivot)
            continue;
        out[k++] = form[i] - ratio * h[i];
    }
    return out;
}

Index default_pivot(const QVector& h)
{
    for (Index i = h.size() - 1; i >= 0; --i) {
        if (h[i] != 0)
            return i;
    }
    throw InputError("default_pivot: zero form");
}

}  // namespace polyadj
