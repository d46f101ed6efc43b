#pragma once

#include <cstdint>
#include <string>

#include "hexforge/lattice.hpp"

namespace hexforge {

struct VerifyResult {
  bool pass = false;
  int J = 0, K = 0;
  int qubits = 0;
  int measurements = 0;
  std::string detail;  // stabilizer diff summary when pass is false
};

// End-to-end oracle: runs the classical identification, performs Q.1/Q.2 in
// an independent stabilizer tableau with the recorded outcomes, and checks
// that the resulting physical state equals the byproduct frames applied to
// the target brick-wall cluster state (plus the fixed post-measurement
// factors), with zero tolerance.
//
// Throws NotApplicableError when the sample yields fewer than 2 H-paths or 2
// retained V-paths, and std::invalid_argument when the qubit count exceeds
// max_qubits.
VerifyResult verify_concentration(const OccupancyGrid& grid, std::uint64_t seed,
                                  int max_qubits = 400);

}  // namespace hexforge
