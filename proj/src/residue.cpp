#include "polyadj/residue.hpp"

#include <algorithm>

#include "polyadj/adjoint.hpp"
#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// c with a = c b, for proportional nonzero vectors.
Rational vector_ratio(const QVector& a, const QVector& b)
{
    for (Index i = 0; i < b.size(); ++i) {
        if (b[i] != 0)
            return a[i] / b[i];
    }
    throw GeometryError("vector_ratio: zero vector");
}

void recurse(const Polytope& p, const PolytopeForm& form, std::vector<Index>& path, RecursionReport& report)
{
    for (Index h = 0; h < p.num_facets(); ++h) {
        path.push_back(h);
        const Residue r = residue_along(form, p, h);
        const PolytopeForm expected = canonical_form(r.facet.polytope);

        RecursionStep step;
        step.path = path;
        step.dim = r.facet.polytope.dim();
        step.factor = proportionality_factor(r.form.numerator, expected.numerator);
        step.proportional = step.factor.has_value();
        report.steps.push_back(step);

        if (step.dim == 0)
            report.terminals.emplace_back(path, terminal_value(r.form));
        else
            recurse(r.facet.polytope, r.form, path, report);
        path.pop_back();
    }
}

}  // namespace

PolytopeForm canonical_form(const Polytope& p)
{
    return {warren_adjoint(p), p.facets()};
}

Residue residue_along(const PolytopeForm& form, const Polytope& p, Index h, std::optional<Index> pivot)
{
    const Index n = p.dim();
    if (form.nvars() != n + 1 || static_cast<Index>(form.denominator.size()) != p.num_facets())
        throw DimensionMismatch("residue_along: form does not match the polytope");
    if (h < 0 || h >= p.num_facets())
        throw InputError("residue_along: facet index out of range");
    if (n == 0)
        throw InputError("residue_along: a point has no facets to take residues along");
    for (Index j = 0; j < p.num_facets(); ++j) {
        if (!form.denominator[static_cast<std::size_t>(j)].proportional_to(p.facet(j)))
            throw InputError("residue_along: denominator does not list the facet hyperplanes");
    }

    const QVector& lh = form.denominator[static_cast<std::size_t>(h)].coeffs;
    const Index piv = pivot ? *pivot : default_pivot(lh);
    if (piv < 1 || piv > n || lh[piv] == 0)
        throw InputError("residue_along: pivot coefficient is zero");

    const HomoPoly restricted = restrict_to_hyperplane(form.numerator, lh, piv);
    if (restricted.is_zero())
        throw ResiduePreconditionError("residue_along: numerator vanishes on the facet hyperplane");

    FacetPolytope fp = facet_polytope(p, h, piv);
    const std::vector<Index>& incident = fp.incident_facets;

    HomoPoly others = HomoPoly::constant(n, 1);
    Rational scalar = ((n - piv) % 2 == 0 ? Rational(1) : Rational(-1)) / lh[piv];
    for (Index g = 0; g < p.num_facets(); ++g) {
        if (g == h)
            continue;
        const QVector rg = restrict_linear(form.denominator[static_cast<std::size_t>(g)].coeffs, lh, piv);
        const auto it = std::find(incident.begin(), incident.end(), g);
        if (it == incident.end()) {
            others = others * HomoPoly::linear(rg);
            continue;
        }
        const LinearForm& target = fp.polytope.facet(static_cast<Index>(it - incident.begin()));
        scalar /= vector_ratio(rg, target.coeffs);
    }

    HomoPoly numerator(n, 0);
    try {
        numerator = exact_divide(restricted, others);
    } catch (const NotDivisible&) {
        throw ResiduePreconditionError("residue_along: non-incident facet forms do not divide the numerator");
    }
    numerator *= scalar;

    const int expected_degree = static_cast<int>(incident.size()) - static_cast<int>(n);
    if (numerator.degree() != expected_degree)
        throw TheoremViolation("residue_along: residue has the wrong degree");

    Residue out{{std::move(numerator), fp.polytope.facets()}, std::move(fp)};
    return out;
}

Rational terminal_value(const PolytopeForm& form)
{
    if (form.nvars() != 1)
        throw DimensionMismatch("terminal_value: form is not on P^0");
    const Monomial m{form.numerator.degree()};
    Rational value = form.numerator.coefficient(m);
    for (const LinearForm& l : form.denominator)
        value /= l.coeffs[0];
    return value;
}

RecursionReport recursion_check(const Polytope& p)
{
    RecursionReport report;
    std::vector<Index> path;
    if (p.dim() >= 1)
        recurse(p, canonical_form(p), path, report);

    report.steps_pass = std::all_of(report.steps.begin(), report.steps.end(),
                                    [](const RecursionStep& s) { return s.proportional; });

    report.magnitudes_equal = !report.terminals.empty();
    for (const auto& [where, value] : report.terminals) {
        if (value == 0 || abs_value(value) != abs_value(report.terminals.front().second))
            report.magnitudes_equal = false;
    }

    // Terminals come in pairs: the two endpoints of one edge share the path prefix.
    report.endpoint_signs_opposite = report.terminals.size() % 2 == 0;
    for (std::size_t i = 0; i + 1 < report.terminals.size(); i += 2) {
        const auto& [pa, va] = report.terminals[i];
        const auto& [pb, vb] = report.terminals[i + 1];
        const bool same_edge = std::equal(pa.begin(), pa.end() - 1, pb.begin(), pb.end() - 1);
        if (!same_edge || va * vb >= 0)
            report.endpoint_signs_opposite = false;
    }
    return report;
}

bool one_level_residues_pass(const Polytope& p)
{
    const PolytopeForm form = canonical_form(p);
    for (Index h = 0; h < p.num_facets(); ++h) {
        const Residue r = residue_along(form, p, h);
        if (!proportional(r.form.numerator, canonical_form(r.facet.polytope).numerator))
            return false;
    }
    return true;
}

AntisymmetryReport double_residue_antisymmetry(const Polytope& p, Index g, Index h)
{
    const Index n = p.dim();
    if (g < 0 || h < 0 || g >= p.num_facets() || h >= p.num_facets())
        throw InputError("double_residue_antisymmetry: facet index out of range");
    if (!facets_adjacent(p, g, h) || n < 1)
        throw InputError("double_residue_antisymmetry: facets are not incident");

    const QVector& a = p.facet(h).coeffs;
    const QVector& b = p.facet(g).coeffs;
    Index ph = 0;
    Index pg = 0;
    for (Index i = n; i >= 1 && ph == 0; --i) {
        for (Index j = n; j >= 1; --j) {
            if (i != j && a[i] != 0 && b[j] != 0 && a[i] * b[j] - a[j] * b[i] != 0) {
                ph = i;
                pg = j;
                break;
            }
        }
    }
    if (ph == 0)
        throw InputError("double_residue_antisymmetry: facet hyperplanes have no common pivot pair");

    const PolytopeForm form = canonical_form(p);
    auto twice = [&](Index first, Index first_pivot, Index second, Index second_pivot) {
        const Residue r1 = residue_along(form, p, first, first_pivot);
        const auto& inc = r1.facet.incident_facets;
        const Index k = static_cast<Index>(std::find(inc.begin(), inc.end(), second) - inc.begin());
        const Index shifted = second_pivot > first_pivot ? second_pivot - 1 : second_pivot;
        return residue_along(r1.form, r1.facet.polytope, k, shifted);
    };
    const Residue hg = twice(h, ph, g, pg);
    const Residue gh = twice(g, pg, h, ph);

    // Match the two denominator lists hyperplane by hyperplane.
    Rational denominator_ratio = 1;
    for (const LinearForm& l : gh.form.denominator) {
        const auto it = std::find_if(hg.form.denominator.begin(), hg.form.denominator.end(),
                                     [&](const LinearForm& m) { return m.proportional_to(l); });
        if (it == hg.form.denominator.end())
            throw TheoremViolation("double_residue_antisymmetry: iterated residues have different poles");
        denominator_ratio *= vector_ratio(l.coeffs, it->coeffs);
    }
    const std::optional<Rational> c = proportionality_factor(gh.form.numerator, hg.form.numerator);
    if (!c)
        throw TheoremViolation("double_residue_antisymmetry: iterated residues are not proportional");
    // Res_H Res_G / Res_G Res_H, inverted to report Res_G Res_H over Res_H Res_G.
    const Rational gh_over_hg = *c / denominator_ratio;
    return {hg.form.numerator.is_zero() ? Rational(0) : Rational(1 / gh_over_hg), ph, pg};
}

}  // namespace polyadj
