// polyadj: adjoints, residual points and residues of rational polytopes.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "polyadj/commands.hpp"
#include "polyadj/errors.hpp"
#include "polyadj/io.hpp"

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw polyadj::InputError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adjoint polynomials of rational convex polytopes"};
    app.require_subcommand(1);

    std::string chart_file;
    std::string format = "text";
    app.add_option("--chart", chart_file, "Matrix file with a projective change of coordinates");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "doc"}));

    std::string document;
    std::string method = "both";
    std::string polynomial_file;
    std::optional<long> facet;
    bool recurse = false;

    std::map<std::string, CLI::App*> sub;
    for (const auto& [name, help] : std::initializer_list<std::pair<const char*, const char*>>{
             {"facets", "Print the facet inequalities"},
             {"vertices", "Print the vertices"},
             {"residual", "Print the point residual with orders"},
             {"flats", "Print the proper flats of the facet arrangement"},
             {"adjoint", "Print the normalized adjoint polynomial"},
             {"verify", "Check vanishing orders of a polynomial along every flat"},
             {"residue", "Residues of the canonical form"}}) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("document", document, "Polytope document, - for stdin")->required();
        sub[name] = s;
    }
    sub["adjoint"]
        ->add_option("--method", method, "Computation route")
        ->check(CLI::IsMember({"warren", "interpolate", "both"}));
    sub["verify"]->add_option("polynomial", polynomial_file, "File with the polynomial")->required();
    sub["residue"]->add_option("facet", facet, "Facet index");
    sub["residue"]->add_flag("--recurse", recurse, "Run the full residue recursion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : polyadj::exit_input_error;
    }

    polyadj::CommandResult result;
    try {
        polyadj::CommandOptions options;
        options.format = format == "doc" ? polyadj::OutputFormat::doc : polyadj::OutputFormat::text;
        if (!chart_file.empty())
            options.chart = polyadj::parse_matrix(read_input(chart_file));
        const std::string text = read_input(document);

        if (sub["facets"]->parsed()) {
            result = polyadj::cmd_facets(text, options);
        } else if (sub["vertices"]->parsed()) {
            result = polyadj::cmd_vertices(text, options);
        } else if (sub["residual"]->parsed()) {
            result = polyadj::cmd_residual(text, options);
        } else if (sub["flats"]->parsed()) {
            result = polyadj::cmd_flats(text, options);
        } else if (sub["adjoint"]->parsed()) {
            const auto m = method == "warren"        ? polyadj::AdjointMethod::warren
                           : method == "interpolate" ? polyadj::AdjointMethod::interpolate
                                                     : polyadj::AdjointMethod::both;
            result = polyadj::cmd_adjoint(text, m, options);
        } else if (sub["verify"]->parsed()) {
            result = polyadj::cmd_verify(text, read_input(polynomial_file), options);
        } else {
            std::optional<polyadj::Index> f;
            if (facet)
                f = static_cast<polyadj::Index>(*facet);
            result = polyadj::cmd_residue(text, f, recurse, options);
        }
    } catch (const polyadj::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return polyadj::exit_input_error;
    }

    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
