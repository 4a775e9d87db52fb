#pragma once

// Text formats: digraph and matrix files, perspective files, and the TSV /
// JSON renderings of an expansion report.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "omt/expansions.hpp"

namespace omt {

enum class InputFormat { digraph, matrix, perspective };

/// Throws InputError for anything but "digraph", "matrix" or "perspective".
InputFormat parse_format_name(std::string_view name);
/// From the first non-comment line: a "major:" or "pair:" header, two
/// tokens (matrix dimensions) or three (an arc).
InputFormat infer_format(std::string_view text);

/// One arc per line: `<label> <tail> <head>`; `#` starts a comment.
Digraph parse_digraph(std::string_view text);
/// `<rows> <cols>` then rows*cols entries (integers or p/q), row major.
/// Columns are labelled 1..cols.
Realization parse_matrix(std::string_view text);
Realization parse_realization(std::string_view text, InputFormat format);

/// Either
///   major: digraph|matrix
///   <body>
///   contract: <labels>
/// or
///   pair: digraph|matrix
///   <body of M>
///   ---
///   <body of M'>
/// The pair form is validated; AxiomError if it is not a perspective.
Perspective parse_perspective(std::string_view text, const SweepOptions& opts = {});

/// Header `A O* O Θ* Θ̄* Θ Θ̄ monomial`, one tab-separated row per A in
/// binary counting order, "-" for empty sets.
std::string to_tsv(const GroundSet& ground, const ExpansionReport& report);
/// Reads rows written by to_tsv (or transcribed in the same layout). The
/// header line is optional; rows keep file order.
std::vector<ThetaRecord> parse_tsv(const GroundSet& ground, std::string_view text);

nlohmann::json to_json(const GroundSet& ground, const ExpansionReport& report);

}  // namespace omt
