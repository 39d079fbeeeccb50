#pragma once

#include "orbitcalc/algebra.hpp"
#include "orbitcalc/degeneration.hpp"
#include "orbitcalc/induction.hpp"
#include "orbitcalc/orbit.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/terminalization.hpp"

namespace orbitcalc {

inline constexpr const char* kEngineName = "orbitcalc";
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace orbitcalc
