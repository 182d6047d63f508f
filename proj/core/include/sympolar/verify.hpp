#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympolar {

enum class Suite { kGeometry, kCapacity, kGaussian, kAll };
enum class Level { kQuick, kFull };

struct CheckResult {
  std::string key;
  int pass = 0;
  int fail = 0;
  double max_residual = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Seeded property runs over randomized inputs, each cross-checked against
// the oracle layer or an exact algebraic consequence. Checks are keyed by
// the result they exercise:
//   geometry: Prop1 (inscribed product ellipsoid), Prop3 (duality vs
//             quantization), Thm1 (projection/intersection duality),
//             Thm3 (dual intersections on Lagrangian planes)
//   capacity: Eq-yaron3 (largest product capacity), Eq-clinmax (smallest
//             linear capacity)
//   gaussian: Thm2 (tomographic purity), Moyal (overlap identity),
//             Fermi-PDE (state annihilated by its quadratic symbol)
// Deterministic for a fixed (suite, seed, level); per-key sub-seeds are
// derived from the master seed, so a key's outcome is the same whether it
// runs alone or inside `all`.
VerifyReport run_verify(Suite suite, std::uint64_t seed, Level level);

}  // namespace sympolar
