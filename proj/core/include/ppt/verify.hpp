#ifndef PPT_VERIFY_HPP
#define PPT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/perturbation.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

struct VerifyEntry {
  std::string anchor;  // e.g. "Theorem main 1(a)"
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  bool all_passed() const;
  std::vector<std::string> failed_anchors() const;
};

struct VerifyOptions {
  FScheme scheme;
  Normalization norm;
  std::uint64_t seed = 1;
  int random_motions = 20;
  /// Brute-force ray oracle runs only up to this size.
  std::size_t oracle_max_n = 6;
};

/// Default options for ps: centroid DetProduct scheme and default anchors.
VerifyOptions default_verify_options(const PointSet& ps);

/// Runs every applicable structural check on ps. Checks never throw; an
/// exception inside a check is recorded as that check's failure.
VerifyReport run_verify(const PointSet& ps, const VerifyOptions& options);

}  // namespace ppt

#endif  // PPT_VERIFY_HPP
