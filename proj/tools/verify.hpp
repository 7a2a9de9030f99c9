#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcpoly/assigning.hpp"
#include "gcpoly/cycles.hpp"
#include "gcpoly/errors.hpp"
#include "gcpoly/group.hpp"
#include "gcpoly/io.hpp"
#include "gcpoly/multigraph.hpp"

namespace gcpoly::cli {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Instance {
  MultiGraph graph;
  Assigning assigning;
  std::optional<EdgeFunction> f;  // set when the assigning came from f
  LinearOrder order;
};

/// Cross-method and brute-force checks on one instance.
std::vector<CheckResult> verify_instance(const Instance& inst, const Budget& budget);

io::Json to_json(const CheckResult& r);

}  // namespace gcpoly::cli
