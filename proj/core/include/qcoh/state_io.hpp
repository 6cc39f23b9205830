// state_io.hpp — JSON state-file loading and writing
//
// Schema: {"dims": [2,2], "matrix": [[[re,im], ...], ...]} with the matrix
// row-major and every entry an explicit [re, im] pair.

#pragma once

#include "qcoh/matops.hpp"

#include <iosfwd>
#include <string>

namespace qcoh {

// Parses and validates a state file; throws std::runtime_error on schema
// problems and std::invalid_argument (naming the violated invariant) when
// the matrix fails the density-matrix checks.
DensityMatrix load_state(std::istream& in);
DensityMatrix load_state_file(const std::string& path);

std::string state_to_json(const DensityMatrix& rho);
void save_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace qcoh
