#ifndef POLYADJ_RESIDUE_HPP
#define POLYADJ_RESIDUE_HPP

// Canonical forms adj_P / prod l_H * omega and their residues along facet
// hyperplanes. Forms are kept as (numerator, denominator list) pairs; omega is
// implicit.
//
// Sign convention: the residue along l_H eliminates the pivot variable p and
// carries the factor (-1)^(n-p) / a_p, where a_p is the pivot coefficient of l_H.

#include <optional>
#include <vector>

#include "polyadj/poly.hpp"
#include "polyadj/polytope.hpp"

namespace polyadj {

struct PolytopeForm {
    HomoPoly numerator;
    std::vector<LinearForm> denominator;

    Index nvars() const { return numerator.nvars(); }
};

/// Numerator the normalized adjoint, denominator the facet forms of p.
PolytopeForm canonical_form(const Polytope& p);

struct Residue {
    /// Denominator equal to facet.polytope.facets(), entry by entry.
    PolytopeForm form;
    FacetPolytope facet;
};

/// Res_H of a form whose denominator lists the facet hyperplanes of p (in the
/// facet order of p, any scaling). Throws ResiduePreconditionError when the
/// numerator vanishes on H or the non-incident forms do not divide it.
Residue residue_along(const PolytopeForm& form, const Polytope& p, Index h,
                      std::optional<Index> pivot = std::nullopt);

/// The scalar carried by a form on P^0: numerator / prod of denominator constants.
Rational terminal_value(const PolytopeForm& form);

struct RecursionStep {
    /// Facet indices chosen at each level, outermost first.
    std::vector<Index> path;
    /// Dimension of the facet polytope reached.
    Index dim = 0;
    /// The residue is a nonzero multiple of the facet's canonical form.
    bool proportional = false;
    std::optional<Rational> factor;
};

struct RecursionReport {
    std::vector<RecursionStep> steps;
    /// Iterated residues at the vertices, with their paths.
    std::vector<std::pair<std::vector<Index>, Rational>> terminals;
    bool steps_pass = false;
    bool magnitudes_equal = false;
    bool endpoint_signs_opposite = false;

    bool passed() const { return steps_pass && magnitudes_equal && endpoint_signs_opposite; }
};

/// Takes residues of the canonical form down to the vertices, comparing each
/// level with the canonical form of the facet reached.
RecursionReport recursion_check(const Polytope& p);

/// Residue check at every facet, one level only.
bool one_level_residues_pass(const Polytope& p);

struct AntisymmetryReport {
    /// Res_G Res_H over Res_H Res_G, both in the same remaining variables.
    Rational ratio;
    Index pivot_h = 0;
    Index pivot_g = 0;
};

/// Compares the two iterated residues along adjacent facets g and h. Throws
/// InputError when the facets do not meet in a ridge.
AntisymmetryReport double_residue_antisymmetry(const Polytope& p, Index g, Index h);

}  // namespace polyadj

#endif
