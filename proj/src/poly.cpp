#include "polyadj/poly.hpp"

#include <algorithm>
#include <numeric>

#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

int total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

void check_same_ring(const HomoPoly& f, const HomoPoly& g, const char* what)
{
    if (f.nvars() != g.nvars())
        throw DimensionMismatch(std::string(what) + ": different number of variables");
}

void generate(Index nvars, int degree, Index pos, Monomial& current, std::vector<Monomial>& out)
{
    if (pos == nvars - 1) {
        current[static_cast<std::size_t>(pos)] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current[static_cast<std::size_t>(pos)] = e;
        generate(nvars, degree - e, pos + 1, current, out);
    }
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

HomoPoly::HomoPoly(Index nvars, int degree) : nvars_(nvars), degree_(degree) {}

HomoPoly HomoPoly::constant(Index nvars, const Rational& c)
{
    HomoPoly p(nvars, 0);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

HomoPoly HomoPoly::variable(Index nvars, Index i)
{
    HomoPoly p(nvars, 1);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

HomoPoly HomoPoly::linear(const QVector& coeffs)
{
    HomoPoly p(coeffs.size(), 1);
    for (Index i = 0; i < coeffs.size(); ++i) {
        Monomial m(static_cast<std::size_t>(coeffs.size()), 0);
        m[static_cast<std::size_t>(i)] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

Rational HomoPoly::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational HomoPoly::leading_coefficient() const
{
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void HomoPoly::add_term(const Monomial& m, const Rational& c)
{
    if (static_cast<Index>(m.size()) != nvars_)
        throw DimensionMismatch("add_term: monomial has wrong number of variables");
    if (total_degree(m) != degree_)
        throw DimensionMismatch("add_term: monomial has wrong degree");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational HomoPoly::operator()(const QVector& x) const
{
    if (x.size() != nvars_)
        throw DimensionMismatch("evaluate: point has wrong number of coordinates");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size() && t != 0; ++i) {
            for (int e = 0; e < m[i]; ++e)
                t *= x[static_cast<Index>(i)];
        }
        sum += t;
    }
    return sum;
}

HomoPoly HomoPoly::operator-() const
{
    HomoPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& other)
{
    check_same_ring(*this, other, "add");
    if (other.is_zero())
        return *this;
    if (is_zero() && degree_ != other.degree_)
        degree_ = other.degree_;
    if (degree_ != other.degree_)
        throw DimensionMismatch("add: degrees differ");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& other)
{
    return *this += -other;
}

HomoPoly& HomoPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_)
        coef *= c;
    return *this;
}

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b)
{
    check_same_ring(a, b, "multiply");
    HomoPoly out(a.nvars(), a.degree() + b.degree());
    Monomial m(static_cast<std::size_t>(a.nvars()));
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

bool HomoPoly::operator==(const HomoPoly& other) const
{
    if (nvars_ != other.nvars_)
        return false;
    if (is_zero() && other.is_zero())
        return true;
    return degree_ == other.degree_ && terms_ == other.terms_;
}

HomoPoly add(const HomoPoly& f, const HomoPoly& g) { return f + g; }
HomoPoly multiply(const HomoPoly& f, const HomoPoly& g) { return f * g; }
HomoPoly scale(const HomoPoly& f, const Rational& c) { return f * c; }

HomoPoly power(const HomoPoly& f, int k)
{
    HomoPoly out = HomoPoly::constant(f.nvars(), Rational(1));
    for (int i = 0; i < k; ++i)
        out = out * f;
    return out;
}

HomoPoly exact_divide(const HomoPoly& f, const HomoPoly& g)
{
    check_same_ring(f, g, "exact_divide");
    if (g.is_zero())
        throw std::domain_error("exact_divide: division by the zero polynomial");
    HomoPoly quotient(f.nvars(), f.degree() - g.degree());
    if (f.is_zero())
        return quotient;
    if (f.degree() < g.degree())
        throw NotDivisible("exact_divide: divisor has larger degree");

    const auto& [lead_g, coef_g] = *g.terms().begin();
    HomoPoly remainder = f;
    Monomial shift(static_cast<std::size_t>(f.nvars()));
    while (!remainder.is_zero()) {
        const auto& [lead_r, coef_r] = *remainder.terms().begin();
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = lead_r[i] - lead_g[i];
            if (shift[i] < 0)
                throw NotDivisible("exact_divide: polynomial is not divisible");
        }
        HomoPoly step(f.nvars(), quotient.degree());
        step.add_term(shift, coef_r / coef_g);
        quotient += step;
        remainder -= step * g;
    }
    return quotient;
}

HomoPoly partial_derivative(const HomoPoly& f, Index var)
{
    if (var < 0 || var >= f.nvars())
        throw DimensionMismatch("partial_derivative: variable index out of range");
    HomoPoly out(f.nvars(), f.degree() > 0 ? f.degree() - 1 : 0);
    for (const auto& [m, c] : f.terms()) {
        const int e = m[static_cast<std::size_t>(var)];
        if (e == 0)
            continue;
        Monomial d = m;
        --d[static_cast<std::size_t>(var)];
        out.add_term(d, c * e);
    }
    return out;
}

HomoPoly linear_substitute(const HomoPoly& f, const QMatrix& m)
{
    if (m.rows() != f.nvars())
        throw DimensionMismatch("linear_substitute: matrix rows differ from variable count");
    const Index out_vars = m.cols();
    std::vector<std::vector<HomoPoly>> powers(static_cast<std::size_t>(f.nvars()));
    for (Index i = 0; i < f.nvars(); ++i) {
        auto& list = powers[static_cast<std::size_t>(i)];
        list.push_back(HomoPoly::constant(out_vars, Rational(1)));
        const HomoPoly row = HomoPoly::linear(m.row(i).transpose());
        for (int k = 1; k <= f.degree(); ++k)
            list.push_back(list.back() * row);
    }
    HomoPoly out(out_vars, f.degree());
    for (const auto& [mono, c] : f.terms()) {
        HomoPoly t = HomoPoly::constant(out_vars, c);
        for (Index i = 0; i < f.nvars(); ++i) {
            const int e = mono[static_cast<std::size_t>(i)];
            if (e > 0)
                t = t * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
        }
        out += t;
    }
    return out;
}

HomoPoly restrict_to_hyperplane(const HomoPoly& f, const QVector& h, Index pivot)
{
    if (h.size() != f.nvars())
        throw DimensionMismatch("restrict_to_hyperplane: form has wrong number of variables");
    if (pivot < 0 || pivot >= h.size() || h[pivot] == 0)
        throw InputError("restrict_to_hyperplane: pivot coefficient is zero");
    const Index n = f.nvars();
    QMatrix m = QMatrix::Zero(n, n - 1);
    Index k = 0;
    for (Index i = 0; i < n; ++i) {
        if (i == pivot)
            continue;
        m(i, k) = 1;
        m(pivot, k) = -h[i] / h[pivot];
        ++k;
    }
    return linear_substitute(f, m);
}

HomoPoly restrict_to_hyperplane(const HomoPoly& f, const LinearForm& h, Index pivot)
{
    return restrict_to_hyperplane(f, h.coeffs, pivot);
}

HomoPoly normalized(const HomoPoly& f)
{
    if (f.is_zero())
        return f;
    QVector coeffs(static_cast<Index>(f.terms().size()));
    Index k = 0;
    for (const auto& [m, c] : f.terms())
        coeffs[k++] = c;
    const QVector p = make_primitive(coeffs);
    // make_primitive makes the first entry positive, which is the leading term.
    return f * (p[0] / coeffs[0]);
}

std::optional<Rational> proportionality_factor(const HomoPoly& f, const HomoPoly& g)
{
    if (f.nvars() != g.nvars() || f.is_zero() || g.is_zero())
        return std::nullopt;
    if (f.degree() != g.degree() || f.terms().size() != g.terms().size())
        return std::nullopt;
    const Rational c = f.leading_coefficient() / g.leading_coefficient();
    auto it = g.terms().begin();
    for (const auto& [m, coef] : f.terms()) {
        if (it->first != m || it->second * c != coef)
            return std::nullopt;
        ++it;
    }
    return c;
}

bool proportional(const HomoPoly& f, const HomoPoly& g)
{
    return proportionality_factor(f, g).has_value();
}

int vanishing_order_at_point(const HomoPoly& f, const QVector& x)
{
    if (f.is_zero())
        throw ZeroPolynomial("vanishing order of the zero polynomial is undefined");
    if (x.size() != f.nvars())
        throw DimensionMismatch("vanishing_order_at_point: point has wrong number of coordinates");
    if (is_zero(x))
        throw InputError("vanishing_order_at_point: zero vector is not a point");
    // Smallest k with a nonzero k-th partial derivative at x.
    const std::size_t nv = static_cast<std::size_t>(f.nvars());
    for (int k = 0; k <= f.degree(); ++k) {
        for (const Monomial& alpha : monomials_of_degree(f.nvars(), k)) {
            Rational value = 0;
            for (const auto& [mono, c] : f.terms()) {
                Rational t = c;
                for (std::size_t i = 0; i < nv && t != 0; ++i) {
                    const int e = mono[i];
                    const int a = alpha[i];
                    if (e < a) {
                        t = 0;
                        break;
                    }
                    for (int j = 0; j < a; ++j)
                        t *= e - j;
                    for (int j = a; j < e; ++j)
                        t *= x[static_cast<Index>(i)];
                }
                value += t;
            }
            if (value != 0)
                return k;
        }
    }
    return f.degree();
}

int vanishing_order_at_point(const HomoPoly& f, const ProjectivePoint& x)
{
    return vanishing_order_at_point(f, x.coords);
}

int vanishing_order_along(const HomoPoly& f, const QMatrix& basis)
{
    if (f.is_zero())
        throw ZeroPolynomial("vanishing order of the zero polynomial is undefined");
    if (basis.rows() != f.nvars())
        throw DimensionMismatch("vanishing_order_along: basis has wrong number of coordinates");
    const QMatrix m = complete_basis(basis);
    const HomoPoly g = linear_substitute(f, m);
    const Index k = basis.cols();
    int order = f.degree();
    for (const auto& [mono, c] : g.terms()) {
        int normal = 0;
        for (Index i = k; i < f.nvars(); ++i)
            normal += mono[static_cast<std::size_t>(i)];
        order = std::min(order, normal);
    }
    return order;
}

int vanishing_order_along(const HomoPoly& f, const LinearSubspace& L)
{
    return vanishing_order_along(f, L.basis());
}

std::vector<Monomial> monomials_of_degree(Index nvars, int degree)
{
    std::vector<Monomial> out;
    if (nvars == 0)
        return out;
    Monomial current(static_cast<std::size_t>(nvars), 0);
    generate(nvars, degree, 0, current, out);
    std::sort(out.begin(), out.end(), GradedLexGreater{});
    return out;
}

}  // namespace polyadj
