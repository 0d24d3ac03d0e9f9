#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbx/linalg.hpp"
#include "rbx/search.hpp"

namespace rbx {

struct ClaimParams {
  std::uint64_t p = 3;
  /// Weight in the text encoding; each claim has its own default.
  std::optional<std::string> weight;
  /// Builder spec overriding the claim's default algebra where that makes
  /// sense (T2-even-splitting, C5-no-invertible-derivations).
  std::optional<std::string> algebra;
  std::size_t jobs = 1;
  bool allow_char2 = false;
};

struct PassReport {
  std::string claim;
  bool pass = false;
  /// "pass: ..." or "fail: ...".
  std::string summary;
  std::vector<std::string> details;
  std::optional<Matrix> counterexample;

  std::string to_text() const;
};

const std::vector<std::string>& claim_ids();

/// Throws InvalidSpec for unknown ids or unsuitable parameters,
/// SearchSpaceTooLarge.
PassReport verify_claim(const std::string& id, const ClaimParams& params);

}  // namespace rbx
