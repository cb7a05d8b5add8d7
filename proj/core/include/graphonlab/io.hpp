#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/pmf.hpp"
#include "graphonlab/verifier.hpp"

namespace graphonlab::io {

/// Graphon documents are JSON objects {"parts": [...], "values": [[...]]}.
/// Entries are JSON integers or "a/b" strings (exact), or JSON floats
/// (which make the whole graphon floating). Malformed text raises
/// Error(ParseError); well-formed but invalid graphons raise the
/// validate_graphon() errors.
StepGraphon parse_graphon(std::string_view text);
std::string format_graphon(const StepGraphon& w);

/// Text format: first line "n m", then m lines "i j" with 0-based endpoints.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

/// "[1/8, 0, 3/4, 0, 1/8]". The parser also accepts quoted entries, so
/// JSON arrays of numbers or "a/b" strings read back too.
std::string format_pmf(const EdgeCountPMF& pmf);
EdgeCountPMF parse_pmf(std::string_view text);

/// {"verdict": ..., "contradiction": ..., "checks": [{name, lhs, rhs, gap, pass}]}.
/// Exact values are written as strings, floating values as JSON numbers.
std::string format_report(const VerifierReport& report, int indent = 2);
VerifierReport parse_report(std::string_view text);

/// Whole-file read. Errors: ParseError if the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace graphonlab::io
