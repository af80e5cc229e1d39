#pragma once

#include <string>

#include "evac/field.hpp"

namespace evac {

// 8-bit binary PGM, rows written top to bottom, values scaled to the field's
// min/max. The raw range goes to "<path>.minmax.txt" so pixel values can be
// mapped back.
void write_heatmap_pgm(const ScalarField& f, const std::string& path);

}  // namespace evac
