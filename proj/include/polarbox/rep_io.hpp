#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polarbox/rep.hpp"

namespace polarbox {

/// Parses the cdd/lrs-style polyhedron file format:
///
///   <optional name line>
///   H-representation | V-representation
///   [linearity k i1 i2 ... ik]        (H-files only; 1-based row indices)
///   begin
///   m  d  rational                    (d = n+1 columns)
///   <m rows of d whitespace-separated rationals, "p/q" or integer>
///   end
///
/// Column 0 is the b column of an H-file and the 1|0 column of a V-file.
/// Vertex rows with a positive leading entry are divided through by it;
/// a negative leading entry is an error. V-files with linearity lines are
/// rejected (they would encode a non-pointed polyhedron). Content after
/// `end` is ignored; if non-blank, a warning is appended to `warnings`.
Rep parse_rep(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Emits the same file format. parse_rep(emit_rep(r)) equals r canonically,
/// and is bit-exact on canonical forms.
std::string emit_rep(const HRep& h);
std::string emit_rep(const VRep& v);
std::string emit_rep(const Rep& r);

}  // namespace polarbox
