#pragma once

// Worked examples with known answers, each checked end to end.

#include <string>
#include <vector>

namespace arfkit {

  struct GoldenResult {
    std::string              name;
    std::vector<std::string> failures;  // empty on success

    [[nodiscard]] bool passed() const noexcept {
      return failures.empty();
    }
  };

  std::vector<GoldenResult> run_golden_examples();

}  // namespace arfkit
