#include "surfchem/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "surfchem/errors.hpp"

namespace surfchem {

namespace {

double diameter(const std::vector<std::vector<double>>& simplex) {
  double d = 0.0;
  const auto& base = simplex.front();
  for (std::size_t v = 1; v < simplex.size(); ++v) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      d = std::max(d, std::abs(simplex[v][i] - base[i]));
    }
  }
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<std::vector<double>>& initial_simplex,
    const NelderMeadOptions& options) {
  const std::size_t n = initial_simplex.empty() ? 0 : initial_simplex[0].size();
  if (n == 0 || initial_simplex.size() != n + 1) {
    throw DomainError("initial simplex must have n+1 vertices of dimension n");
  }
  for (const auto& v : initial_simplex) {
    if (v.size() != n) {
      throw DomainError("initial simplex vertices differ in dimension");
    }
  }

  std::vector<std::vector<double>> simplex = initial_simplex;
  std::vector<double> value(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return objective(x);
  };
  for (std::size_t i = 0; i <= n; ++i) value[i] = eval(simplex[i]);

  // Ascending by value; stable so equal values keep insertion order.
  std::vector<std::size_t> order(n + 1);
  auto sort_order = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return value[a] < value[b];
    });
  };
  sort_order();

  while (evals < options.max_evaluations &&
         diameter(simplex) > options.simplex_tolerance) {
    const std::size_t best = order[0];
    const std::size_t second_worst = order[n - 1];
    const std::size_t worst = order[n];

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      // Point centroid + t (centroid - worst).
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = centroid[i] + t * (centroid[i] - simplex[worst][i]);
      }
      return x;
    };

    const std::vector<double> reflected = blend(1.0);
    const double f_r = eval(reflected);
    // max_evaluations is a hard cap on objective calls. Each branch below
    // wants a second probe; without budget for it, fall back to the best
    // decision the reflected value alone supports.
    const bool can_probe = evals < options.max_evaluations;

    bool do_shrink = false;
    if (f_r < value[best]) {
      if (can_probe) {
        const std::vector<double> expanded = blend(2.0);
        const double f_e = eval(expanded);
        if (f_e < f_r) {
          simplex[worst] = expanded;
          value[worst] = f_e;
        } else {
          simplex[worst] = reflected;
          value[worst] = f_r;
        }
      } else {
        simplex[worst] = reflected;
        value[worst] = f_r;
      }
    } else if (f_r < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = f_r;
    } else if (f_r < value[worst]) {
      if (can_probe) {
        const std::vector<double> outside = blend(0.5);
        const double f_c = eval(outside);
        if (f_c <= f_r) {
          simplex[worst] = outside;
          value[worst] = f_c;
        } else {
          do_shrink = true;
        }
      } else {
        simplex[worst] = reflected;
        value[worst] = f_r;
      }
    } else if (can_probe) {
      const std::vector<double> inside = blend(-0.5);
      const double f_c = eval(inside);
      if (f_c < value[worst]) {
        simplex[worst] = inside;
        value[worst] = f_c;
      } else {
        do_shrink = true;
      }
    }

    if (do_shrink) {
      for (std::size_t v = 0; v <= n; ++v) {
        if (v == best) continue;
        if (evals >= options.max_evaluations) break;
        for (std::size_t i = 0; i < n; ++i) {
          simplex[v][i] =
              simplex[best][i] + 0.5 * (simplex[v][i] - simplex[best][i]);
        }
        value[v] = eval(simplex[v]);
      }
    }
    sort_order();
  }

  sort_order();
  NelderMeadResult out;
  out.best = simplex[order[0]];
  out.best_value = value[order[0]];
  out.evaluations = evals;
  out.converged = diameter(simplex) <= options.simplex_tolerance;
  return out;
}

}  // namespace surfchem
