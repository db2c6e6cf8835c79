#ifndef ISOELL_REPORT_IO_HPP
#define ISOELL_REPORT_IO_HPP

#include <string>

#include "isoell/invariants.hpp"

namespace isoell {

/// Input schema, version 1. Unknown fields are rejected.
///   {"schema":1,"p":5,"group":[{"kind":"mu","n":5}],"gY":0,
///    "e_type":"ordinary","orbits":[{"n":5,"weight":[1]}],
///    "x_hint":"unknown","hom_rank":0}
SurfaceData parse_surface_json(const std::string& text);
std::string surface_to_json(const SurfaceData& d);

std::string report_to_json(const InvariantReport& rep);

/// Aligned text: one classification row (kappa, S, X, g(Y), b1, b2) followed
/// by the detailed invariant lines.
std::string report_to_table(const InvariantReport& rep);

}  // namespace isoell

#endif
