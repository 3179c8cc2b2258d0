#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fds/esscan.hpp"

namespace fds {

struct Candidate {
  std::string label;
  std::vector<int> signature;  // sorted route indices
  long long flow = 0;
  std::vector<std::string> members;
  int source = -1;  // class index in the originating scan, when there is one
};

struct CoverInstance {
  std::vector<std::string> routes;
  std::vector<long long> flows;
  std::vector<Candidate> candidates;
};

struct CoverSolution {
  int p = 0;
  std::vector<std::vector<int>> optima;  // candidate indices, ascending within each set
};

struct ClassRow {
  std::string label;
  std::vector<std::string> routes;
};

// Rows with equal signatures collapse into one candidate; empty rows are dropped.
CoverInstance make_instance(const std::vector<std::string>& routes, const std::vector<long long>& flows,
                            const std::vector<ClassRow>& rows);
CoverInstance build_instance(const ScanResult& s);
// Candidates are network vertices only.
CoverInstance vertex_instance(const ScanResult& s);

void check_feasible(const CoverInstance& inst);
bool is_cover(const CoverInstance& inst, const std::vector<int>& pick);

CoverSolution solve(const CoverInstance& inst);
CoverSolution enumerate_all_minima(const CoverInstance& inst, std::uint64_t limit = 10'000'000);

struct Expansion {
  int candidate = -1;
  std::vector<int> endpoints;
  std::vector<Segment> segments;  // open intervals whose points can replace the candidate
};

std::vector<Expansion> expand_alternatives(const CoverInstance& inst, const std::vector<int>& optimum,
                                           const ScanResult& s);

std::string signature_text(const CoverInstance& inst, const std::vector<int>& sig);

}  // namespace fds
