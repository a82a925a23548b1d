#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qgl {

/// One computed-versus-reference comparison.
struct DemoCheck {
  std::string name;
  std::string computed;
  std::string expected;
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct DemoReport {
  std::string id;
  std::vector<DemoCheck> checks;
  std::optional<std::string> svg;

  bool pass() const;
};

/// Case ids of the built-in reproductions.
const std::vector<std::string>& demo_cases();

/// Runs one built-in reproduction. Throws UnknownCase.
DemoReport run_demo(const std::string& case_id);

nlohmann::json demo_json(const DemoReport& r);

/// Fixed-width table, one line per check.
std::string demo_table(const DemoReport& r);

}  // namespace qgl
