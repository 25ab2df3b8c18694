#pragma once

#include <string>

#include "jetvar/variational.hpp"

namespace jetvar {

/// JSON wire formats (stable across patch versions):
///   MultiIndex   [c1, ..., cn]
///   JetPoly      {"terms":[{"coeff":"p/q","monomial":[["x",lambda,exp] |
///                 ["u",i,[counts],exp], ...]}]}            (1-based indices)
///   Form         {"config":{"n":..,"m":..},"degree":k,
///                 "terms":[{"covectors":[["dx",lambda] | ["om",[i,[counts]]],
///                 ...],"coeff":<jetpoly>}]}
///   CDiffOp      {"config":...,"rows":r,"cols":c,
///                 "entries":[[[{"sigma":[counts],"coeff":<jetpoly>},...]]]}
///   SourceForm   {"config":...,"components":[<jetpoly>,...]}
std::string to_json(const MultiIndex& sigma);
std::string to_json(const JetPoly& p);
std::string to_json(const Form& a);
std::string to_json(const CDiffOp& op);
std::string to_json(const SourceForm& eta);

MultiIndex multiindex_from_json(const std::string& text);
JetPoly poly_from_json(const std::string& text);
Form form_from_json(const std::string& text, const JetSpaceConfig& cfg);
CDiffOp op_from_json(const std::string& text, const JetSpaceConfig& cfg);
SourceForm source_from_json(const std::string& text, const JetSpaceConfig& cfg);

}  // namespace jetvar
