#pragma once

#include <functional>
#include <vector>

namespace surfchem {

struct NelderMeadOptions {
  int max_evaluations = 500;
  double simplex_tolerance = 1e-8;  // infinity-norm simplex diameter
};

struct NelderMeadResult {
  std::vector<double> best;
  double best_value = 0.0;
  int evaluations = 0;
  bool converged = false;  // simplex collapsed below tolerance
};

/// Downhill simplex minimization with the standard reflection, expansion,
/// contraction and shrink moves. `initial_simplex` supplies n+1 vertices
/// of dimension n; all evaluation and tie-breaking order is fixed, so the
/// result is deterministic. On hitting the evaluation budget the best
/// vertex so far is returned with converged = false.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<std::vector<double>>& initial_simplex,
    const NelderMeadOptions& options = {});

}  // namespace surfchem
