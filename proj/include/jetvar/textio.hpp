#pragma once

#include <string>

#include "jetvar/variational.hpp"

namespace jetvar {

/// Text renderers emit the CLI grammar, so render -> parse is the identity
/// on canonical values. Term order is the canonical map order, making all
/// output deterministic.
std::string render_poly(const JetPoly& p, const JetSpaceConfig& cfg);
std::string render_form(const Form& a);
std::string render_op(const CDiffOp& op);
std::string render_source(const SourceForm& eta);

/// LaTeX renderers follow the coordinate notation omega^i_sigma, D_sigma.
std::string latex_poly(const JetPoly& p, const JetSpaceConfig& cfg);
std::string latex_form(const Form& a);
std::string latex_op(const CDiffOp& op);
std::string latex_source(const SourceForm& eta);

/// Name pieces shared with the parser.
std::string coord_token(const JetCoord& c, const JetSpaceConfig& cfg);
std::string index_word(const MultiIndex& sigma, const JetSpaceConfig& cfg);

}  // namespace jetvar
