#pragma once

#include <string>
#include <vector>

#include "unram/packet.hpp"

namespace unram {

/// Alcove points with a_i = k_i / q for q up to max_denominator, one per Omega orbit,
/// sorted by barycentric coordinates.
std::vector<AlcovePoint> enumerate_points(const Alcove& a, const std::vector<OmegaElement>& omega,
                                          std::size_t max_denominator);

struct SweepPointResult {
  AlcovePoint point;
  std::string r_group;
  std::vector<TheoremRecord> records;
  bool passed = true;
  std::string error;
};

struct SweepResult {
  std::vector<SweepPointResult> points;
  std::size_t records = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

SweepResult verify_points_serial(const Alcove& a, const std::vector<OmegaElement>& omega,
                                 const std::vector<HyperspecialVertex>& vertices,
                                 const std::vector<AlcovePoint>& points);
/// Same output as the serial version; jobs <= 0 uses the OpenMP default.
SweepResult verify_points_parallel(const Alcove& a, const std::vector<OmegaElement>& omega,
                                   const std::vector<HyperspecialVertex>& vertices,
                                   const std::vector<AlcovePoint>& points, int jobs);

}  // namespace unram
