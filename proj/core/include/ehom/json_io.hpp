#pragma once

#include <string>

#include "ehom/burnside.hpp"
#include "ehom/euler_homology.hpp"
#include "ehom/permgroup.hpp"
#include "ehom/simplicial.hpp"
#include "ehom/stratifold.hpp"

namespace ehom {

// JSON encodings of the file formats consumed and produced by the CLI.
// All parsers throw std::invalid_argument with a one-line diagnostic on
// malformed input; all writers emit deterministic, key-sorted JSON.
//
//   complex:  {"facets": [[int,...],...]}
//   diagram:  {"dim": n, "strata": [[{"chi":0|1, "fiber":{"f":0|1,"e":0|1}},...],...],
//              "boundary": <diagram|null>}
//   group:    {"degree": m, "generators": [[images],...]}
//   cells:    {"cells": [{"dim": d, "points": k, "action": {"<gen>": [images],...}},...]}
//   swdata:   {"dim": i, "classes": {"<j>": [bits],...}}
//   gdiagram: {"group": <group>, "dim": n,
//              "strata": [[{"quotient_chi": q, "isotropy": k,
//                           "fiber_punctured": [...], "fiber_full": [...],
//                           "fixed_dims": {"<class>": d,...}},...],...],
//              "boundary": <gdiagram sans group|null>}

std::string to_json_string(const SimplicialComplex& c);
SimplicialComplex complex_from_json_string(const std::string& text);

std::string to_json_string(const StratumDiagram& d);
StratumDiagram diagram_from_json_string(const std::string& text);

std::string to_json_string(const PermGroup& g);
PermGroup group_from_json_string(const std::string& text);

HCWComplex cells_from_json_string(const std::string& text);

SWData swdata_from_json_string(const std::string& text);

std::string to_json_string(const GStratumDiagram& d);
GStratumDiagram gdiagram_from_json_string(const std::string& text);

std::string to_json_string(const PolyClass& c);

/// Whole-file read; throws std::invalid_argument when the file is unreadable.
std::string read_text_file(const std::string& path);

}  // namespace ehom
