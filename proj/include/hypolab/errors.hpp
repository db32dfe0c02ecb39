#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypolab {

/// A mathematical obstruction (resonance, non-exactness, failed center
/// test, ...) as opposed to malformed input. The CLI maps these to a
/// dedicated exit code.
struct MathObstruction : std::runtime_error {
  explicit MathObstruction(const std::string& what) : std::runtime_error(what) {}
};

struct ResonanceError : MathObstruction {
  std::vector<long long> frequency;
  ResonanceError(std::string what, std::vector<long long> n)
      : MathObstruction(std::move(what)), frequency(std::move(n)) {}
};

struct NotExactError : MathObstruction {
  using MathObstruction::MathObstruction;
};

struct NotClosedError : MathObstruction {
  using MathObstruction::MathObstruction;
};

}  // namespace hypolab
