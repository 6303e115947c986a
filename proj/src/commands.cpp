#include "polyadj/commands.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

#include "polyadj/adjoint.hpp"
#include "polyadj/arrangement.hpp"
#include "polyadj/errors.hpp"
#include "polyadj/io.hpp"
#include "polyadj/residue.hpp"

namespace polyadj {

namespace {

using nlohmann::json;

Polytope load(std::string_view document, const CommandOptions& options)
{
    Polytope p = to_polytope(parse_document(document));
    if (options.chart)
        p = apply_projective_map(p, *options.chart);
    return p;
}

CommandResult guarded(const std::function<CommandResult()>& body)
{
    auto failure = [](int code, const std::exception& e) {
        return CommandResult{code, "", std::string("error: ") + e.what() + "\n"};
    };
    try {
        return body();
    } catch (const ResiduePreconditionError& e) {
        return failure(exit_residue_precondition, e);
    } catch (const TheoremViolation& e) {
        return failure(exit_theorem_violation, e);
    } catch (const GeometryError& e) {
        return failure(exit_geometry_error, e);
    } catch (const InputError& e) {
        return failure(exit_input_error, e);
    } catch (const DimensionMismatch& e) {
        return failure(exit_input_error, e);
    } catch (const ZeroPolynomial& e) {
        return failure(exit_input_error, e);
    } catch (const json::exception& e) {
        return failure(exit_input_error, e);
    }
}

std::string format_point(const QVector& x)
{
    std::string s = "(";
    for (Index i = 0; i < x.size(); ++i) {
        if (i > 0)
            s += ':';
        s += format_rational(x[i]);
    }
    return s + ")";
}

std::string format_set(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string format_path(const std::vector<Index>& path)
{
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0)
            out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

std::string format_forms(const std::vector<LinearForm>& forms)
{
    std::string out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += format_polynomial(HomoPoly::linear(forms[i].coeffs));
    }
    return out;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

CommandResult cmd_facets(std::string_view document, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        std::vector<QVector> rows;
        for (const LinearForm& f : p.facets())
            rows.push_back(f.coeffs);
        CommandResult r;
        if (options.format == OutputFormat::doc) {
            r.out = write_document({p.dim(), std::nullopt, rows});
        } else {
            for (const QVector& row : rows)
                r.out += format_row(row) + "\n";
        }
        return r;
    });
}

CommandResult cmd_vertices(std::string_view document, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        CommandResult r;
        if (options.format == OutputFormat::doc) {
            r.out = write_document({p.dim(), p.vertices(), std::nullopt});
        } else {
            for (const QVector& v : p.vertices())
                r.out += format_row(v) + "\n";
        }
        return r;
    });
}

CommandResult cmd_residual(std::string_view document, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        const std::vector<ResidualPoint> points = point_residual(Arrangement(p));
        CommandResult r;
        if (options.format == OutputFormat::doc) {
            json j;
            j["points"] = json::array();
            j["orders"] = json::array();
            j["vertex"] = json::array();
            for (const ResidualPoint& x : points) {
                json row = json::array();
                for (Index i = 0; i < x.point.coords.size(); ++i)
                    row.push_back(format_rational(x.point.coords[i]));
                j["points"].push_back(std::move(row));
                j["orders"].push_back(x.order);
                j["vertex"].push_back(x.is_vertex);
            }
            r.out = j.dump(2) + "\n";
        } else {
            for (const ResidualPoint& x : points)
                r.out += format_point(x.point.coords) + " " + std::to_string(x.order) + "\n";
        }
        return r;
    });
}

CommandResult cmd_flats(std::string_view document, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        CommandResult r;
        for (const FlatData& f : flats(Arrangement(p))) {
            std::ostringstream line;
            line << format_set(f.members) << " rank " << f.rank << " dim " << f.dim() << " face "
                 << f.face_dim << " nullity " << f.nullity << " ord " << f.order << "\n";
            r.out += line.str();
        }
        return r;
    });
}

CommandResult cmd_adjoint(std::string_view document, AdjointMethod method, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        std::optional<HomoPoly> adj;
        if (method != AdjointMethod::interpolate)
            adj = warren_adjoint(p);
        if (method != AdjointMethod::warren) {
            HomoPoly other = interpolation_adjoint(p);
            if (adj && !(*adj == other))
                throw TheoremViolation("adjoint: triangulation and interpolation disagree: " +
                                       format_polynomial(*adj) + " vs " + format_polynomial(other));
            adj = std::move(other);
        }
        CommandResult r;
        if (options.format == OutputFormat::doc) {
            json j;
            j["adjoint"] = format_polynomial(*adj);
            j["degree"] = adj->degree();
            j["nvars"] = adj->nvars();
            r.out = j.dump(2) + "\n";
        } else {
            r.out = format_polynomial(*adj) + "\n";
        }
        return r;
    });
}

CommandResult cmd_verify(std::string_view document, std::string_view polynomial, const CommandOptions& options)
{
    return guarded([&] {
        const Polytope p = load(document, options);
        const HomoPoly f = parse_polynomial(polynomial, p.dim() + 1);
        const int degree = static_cast<int>(p.num_facets() - p.dim() - 1);
        if (f.is_zero() || f.degree() != degree)
            throw InputError("verify: polynomial must be nonzero of degree " + std::to_string(degree));

        const OrderReport report = verify_orders(p, f);
        CommandResult r;
        r.out = "flat\trank\tdim\tface\tord\tmu\tstatus\n";
        for (const OrderRow& row : report.rows) {
            std::ostringstream line;
            line << format_set(row.flat.members) << '\t' << row.flat.rank << '\t' << row.flat.dim() << '\t'
                 << row.flat.face_dim << '\t' << row.flat.order << '\t' << row.mu << '\t'
                 << (!row.satisfied ? "FAIL" : row.strict ? "strict" : "ok") << '\n';
            r.out += line.str();
        }
        r.out += std::string("verdict: ") + verdict(report.all_satisfied()) + "\n";
        r.exit_code = report.all_satisfied() ? exit_ok : exit_verification_failed;
        return r;
    });
}

CommandResult cmd_residue(std::string_view document, std::optional<Index> facet, bool recurse,
                          const CommandOptions& options)
{
    return guarded([&] {
        if (!facet && !recurse)
            throw InputError("residue: give a facet index, --recurse, or both");
        const Polytope p = load(document, options);
        CommandResult r;
        if (facet) {
            const Residue res = residue_along(canonical_form(p), p, *facet);
            r.out += "facet " + std::to_string(*facet) + " pivot X" + std::to_string(res.facet.pivot) + "\n";
            r.out += "numerator: " + format_polynomial(res.form.numerator) + "\n";
            r.out += "denominator: " + format_forms(res.form.denominator) + "\n";
        }
        if (recurse) {
            const RecursionReport report = recursion_check(p);
            for (const RecursionStep& step : report.steps) {
                r.out += "step " + format_path(step.path) + " dim " + std::to_string(step.dim) + " " +
                         (step.proportional ? "proportional " + format_rational(*step.factor) : "MISMATCH") +
                         "\n";
            }
            for (const auto& [path, value] : report.terminals)
                r.out += "value " + format_path(path) + " " + format_rational(value) + "\n";
            r.out += std::string("steps: ") + verdict(report.steps_pass) + "\n";
            r.out += std::string("magnitudes: ") + verdict(report.magnitudes_equal) + "\n";
            r.out += std::string("endpoint signs: ") + verdict(report.endpoint_signs_opposite) + "\n";
            r.out += std::string("verdict: ") + verdict(report.passed()) + "\n";
            if (!report.passed())
                r.exit_code = exit_theorem_violation;
        }
        return r;
    });
}

}  // namespace polyadj
