#ifndef CYCPRES_JSON_IO_HPP
#define CYCPRES_JSON_IO_HPP

#include <string>

#include "cycpres/presentation.hpp"
#include "cycpres/search.hpp"
#include "cycpres/special.hpp"
#include "cycpres/stargraph.hpp"

namespace cycpres {

// All emitters are byte-stable for fixed inputs: keys appear in schema order
// and numbers are plain integers.  Multi-line objects are indented with two
// spaces; the *_line emitters are single-line (JSON-lines friendly).

// {"n", "word", "kind", "root_power", "period":{"u","h"}, "rotation"?,
//  "half_word"?, "refinement_t", "deficiency"}
std::string to_json(const RedundancyReport& rep);

// {"n", "t", "word", "deficiency", "relators":[...]}
std::string to_json(const Truncation& tr);

// {"n", "edges":[["x0","x1-"],...], "girth", "diameter":[...], "components",
//  "regular"}; girth/regular are null when undefined.
std::string to_json(const Multigraph& g);

// {"special", "m", "k", "nu", "components":[{"vertices","girth","diameter",
//  "min_degree","recognized_as"},...], "witness", "theorem_checker":
//  {"name","verdict","failed_clause"?}, "flags":{"large","tits","hyperbolic"}}
std::string to_json(const SpecialCertificate& cert, const TheoremVerdict& tv,
                    const GroupFlags& flags);

std::string to_json_line(const Counterexample& ce);
std::string to_json_line(const SpecialHit& hit);

// Summary trailer with counts only; wall time goes to stderr so reports stay
// byte-identical across runs and worker counts.
std::string summary_json_line(const CrossValidationReport& rep);

// Text renderings mirroring the shift/rotation notation ("theta^h", "phi^s").
std::string to_text(const RedundancyReport& rep);
std::string to_text(const Truncation& tr);
std::string to_text(const Multigraph& g);
std::string to_text(const SpecialCertificate& cert, const TheoremVerdict& tv,
                    const GroupFlags& flags);

}  // namespace cycpres

#endif  // CYCPRES_JSON_IO_HPP
