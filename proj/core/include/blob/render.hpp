#pragma once

#include <string>

#include "blob/alcove.hpp"
#include "blob/tableaux.hpp"

namespace blob {

// ASCII picture of the walled Pascal triangle for levels 0..n: one row per
// level, lattice vertices as '.', wall columns as '|' and the walk as '*'.
std::string render_triangle(const Walk& walk, const AlcoveSystem& sys);

}  // namespace blob
