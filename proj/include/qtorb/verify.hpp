#pragma once

// Whole-model self checks: every identity, cross-path agreement, metamorphic
// invariance and the McKay equality under each available crepant blowup.

#include <cstdint>
#include <string>
#include <vector>

#include "qtorb/model.hpp"

namespace qtorb {

struct VerifyOptions {
  /// Also run the exhaustive dilate counter on faces of small order.
  bool oracle = false;
  long oracle_order_limit = 200;
  int metamorphic_trials = 2;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ModelVerification {
  std::string model;
  std::vector<CheckResult> checks;
  std::size_t crepant_blowups = 0;

  bool pass() const;
  std::vector<std::string> failures() const;
};

ModelVerification verify_model(const Model& model, const VerifyOptions& options = {});

}  // namespace qtorb
