#pragma once

#include <string>

#include "igusa/zeta.hpp"

namespace igusa {

/// Self-describing JSON document with fields prime, prefactor, atoms[],
/// numerator[], denominator[] and scale.  Integers are decimal strings
/// so arbitrary precision survives any JSON parser.
std::string to_machine(const ZetaFunction& z);

/// Inverse of to_machine; the result carries the normalized fraction.
ZetaFunction from_machine(const std::string& text);

}  // namespace igusa
