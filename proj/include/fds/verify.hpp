#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fds/esscan.hpp"

namespace fds {

struct VerifyOptions {
  int samples_per_edge = 16;  // intervals; k + 1 points including both ends
  std::optional<Length> step;    // fixed grid step instead of a per-edge count
  std::vector<int> drop_endpoints;  // negative controls
  int interior_samples = 5;
};

struct CheckTally {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
};

struct Finding {
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckTally> checks;
  std::vector<Finding> violations;
  std::vector<Finding> notes;  // informational (existential-only coverage off the dense regime)
  bool ok() const { return violations.empty(); }
};

std::vector<Length> sample_offsets(const Length& len, const VerifyOptions& o);

VerifyReport verify(const ScanResult& s, const VerifyOptions& o);

std::string point_text(const Network& net, const EdgePoint& x);

}  // namespace fds
