#ifndef POLYADJ_COMMANDS_HPP
#define POLYADJ_COMMANDS_HPP

// The command-line operations as pure functions from input text to output
// text and an exit code, so they can be tested without a process.

#include <optional>
#include <string>
#include <string_view>

#include "polyadj/exactlin.hpp"

namespace polyadj {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_input_error = 2,
    exit_geometry_error = 3,
    exit_theorem_violation = 4,
    exit_residue_precondition = 5,
};

enum class OutputFormat { text, doc };
enum class AdjointMethod { warren, interpolate, both };

struct CommandOptions {
    /// Projective change of coordinates applied to the polytope first.
    std::optional<QMatrix> chart;
    OutputFormat format = OutputFormat::text;
};

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

CommandResult cmd_facets(std::string_view document, const CommandOptions& options = {});
CommandResult cmd_vertices(std::string_view document, const CommandOptions& options = {});
CommandResult cmd_residual(std::string_view document, const CommandOptions& options = {});
CommandResult cmd_flats(std::string_view document, const CommandOptions& options = {});
CommandResult cmd_adjoint(std::string_view document, AdjointMethod method,
                          const CommandOptions& options = {});
CommandResult cmd_verify(std::string_view document, std::string_view polynomial,
                         const CommandOptions& options = {});
/// Residue of the canonical form at one facet, and with recurse the full
/// recursion check; at least one of the two must be requested.
CommandResult cmd_residue(std::string_view document, std::optional<Index> facet, bool recurse,
                          const CommandOptions& options = {});

}  // namespace polyadj

#endif
