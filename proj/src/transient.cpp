#include "surfchem/transient.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "surfchem/errors.hpp"
#include "surfchem/rates.hpp"
#include "surfchem/reaction.hpp"

namespace surfchem {

namespace {

// Transient surface chemistry written term by term from the reaction
// list. States are the adsorbed-species concentrations; the free-site
// concentration is eliminated through s = B - sum(x).
struct SurfaceOde {
  SurfaceModel model;
  double site_density;
  double c_o, c_n, c_o2;
  std::array<double, 21> k{};  // full-table constants, 1-based
  EnrichmentRates er;
  int n = 0;  // state dimension

  SurfaceOde(SurfaceModel m, const GasState& gas, double b,
             const EnrichmentRates& rates)
      : model(m), site_density(b), c_o(gas.conc_o), c_n(gas.conc_n),
        c_o2(gas.conc_o2), er(rates) {
    const auto& tab = aca_reactions();
    for (std::size_t i = 0; i < tab.size(); ++i) {
      k[i + 1] = rate_constant(tab[i], gas.temperature, b);
    }
    switch (model) {
      case SurfaceModel::Hifi:
        n = 3;  // weak O, strong O, N
        break;
      case SurfaceModel::Lofi:
        n = 1;  // strong O
        break;
      case SurfaceModel::Enriched:
        n = 2;  // strong O, placeholder
        break;
    }
  }

  double free_sites(const double* x) const {
    double s = site_density;
    for (int i = 0; i < n; ++i) s -= x[i];
    return s;
  }

  void rhs(const double* x, double* f) const {
    const double s = free_sites(x);
    switch (model) {
      case SurfaceModel::Hifi: {
        const double xw = x[0], xs = x[1], xn = x[2];
        f[0] = k[1] * c_o * s - k[2] * xw - k[3] * c_o * xw -
               k[4] * c_o * xw - 2.0 * k[9] * xw * xw +
               2.0 * k[16] * c_o2 * s * s - k[17] * c_o2 * xw -
               k[18] * c_o2 * xw;
        f[1] = k[5] * c_o * s - k[6] * xs - k[7] * c_o * xs -
               2.0 * k[8] * xs * xs + 2.0 * k[19] * c_o2 * s * s -
               k[20] * c_o2 * xs;
        f[2] = k[10] * c_n * s - k[11] * xn - k[12] * c_n * xn -
               k[13] * c_n * xn - 2.0 * k[14] * xn * xn - k[15] * xn;
        break;
      }
      case SurfaceModel::Lofi: {
        const double xs = x[0];
        f[0] = k[5] * c_o * s - k[6] * xs - k[7] * c_o * xs -
               2.0 * k[8] * xs * xs + 2.0 * k[19] * c_o2 * s * s -
               k[20] * c_o2 * xs;
        break;
      }
      case SurfaceModel::Enriched: {
        const double xs = x[0], xp = x[1];
        f[0] = k[5] * c_o * s - k[6] * xs - k[7] * c_o * xs -
               2.0 * k[8] * xs * xs + 2.0 * k[19] * c_o2 * s * s -
               k[20] * c_o2 * xs;
        f[1] = er.k_1p * c_o * s + er.k_2p * c_n * s - er.k_3p * xp;
        break;
      }
    }
  }

  // d f_i / d x_j, using d s / d x_j = -1 for every j.
  void jacobian(const double* x, double j[3][3]) const {
    const double s = free_sites(x);
    switch (model) {
      case SurfaceModel::Hifi: {
        const double xw = x[0], xs = x[1], xn = x[2];
        const double w_s = k[1] * c_o + 4.0 * k[16] * c_o2 * s;
        const double s_s = k[5] * c_o + 4.0 * k[19] * c_o2 * s;
        const double n_s = k[10] * c_n;
        j[0][0] = -w_s - k[2] - (k[3] + k[4]) * c_o -
                  (k[17] + k[18]) * c_o2 - 4.0 * k[9] * xw;
        j[0][1] = -w_s;
        j[0][2] = -w_s;
        j[1][0] = -s_s;
        j[1][1] = -s_s - k[6] - k[7] * c_o - k[20] * c_o2 -
                  4.0 * k[8] * xs;
        j[1][2] = -s_s;
        j[2][0] = -n_s;
        j[2][1] = -n_s;
        j[2][2] = -n_s - k[11] - (k[12] + k[13]) * c_n - k[15] -
                  4.0 * k[14] * xn;
        break;
      }
      case SurfaceModel::Lofi: {
        const double xs = x[0];
        j[0][0] = -(k[5] * c_o + 4.0 * k[19] * c_o2 * s) - k[6] -
                  k[7] * c_o - k[20] * c_o2 - 4.0 * k[8] * xs;
        break;
      }
      case SurfaceModel::Enriched: {
        const double xs = x[0];
        const double s_s = k[5] * c_o + 4.0 * k[19] * c_o2 * s;
        const double p_s = er.k_1p * c_o + er.k_2p * c_n;
        j[0][0] = -s_s - k[6] - k[7] * c_o - k[20] * c_o2 -
                  4.0 * k[8] * xs;
        j[0][1] = -s_s;
        j[1][0] = -p_s;
        j[1][1] = -p_s - er.k_3p;
        break;
      }
    }
  }
};

// Gaussian elimination with partial pivoting for systems up to 3x3.
bool solve_linear(int n, double a[3][3], double* b) {
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[perm[r]][col]) > std::abs(a[perm[pivot]][col])) {
        pivot = r;
      }
    }
    std::swap(perm[col], perm[pivot]);
    const double diag = a[perm[col]][col];
    if (diag == 0.0 || !std::isfinite(diag)) return false;
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[perm[r]][col] / diag;
      a[perm[r]][col] = 0.0;
      for (int c = col + 1; c < n; ++c) a[perm[r]][c] -= factor * a[perm[col]][c];
      b[perm[r]] -= factor * b[perm[col]];
    }
  }
  double x[3] = {};
  for (int row = n - 1; row >= 0; --row) {
    double sum = b[perm[row]];
    for (int c = row + 1; c < n; ++c) sum -= a[perm[row]][c] * x[c];
    x[row] = sum / a[perm[row]][row];
    if (!std::isfinite(x[row])) return false;
  }
  for (int i = 0; i < n; ++i) b[i] = x[i];
  return true;
}

double max_abs(const double* v, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

bool in_domain(const SurfaceOde& ode, const double* x) {
  const double slack = 1e-9 * ode.site_density;
  double sum = 0.0;
  for (int i = 0; i < ode.n; ++i) {
    if (x[i] < -slack || !std::isfinite(x[i])) return false;
    sum += x[i];
  }
  return sum <= ode.site_density + slack;
}

// One backward Euler step x -> z solving z = x + h f(z) by Newton.
bool implicit_step(const SurfaceOde& ode, const double* x, double h,
                   double* z) {
  const int n = ode.n;
  for (int i = 0; i < n; ++i) z[i] = x[i];
  for (int iter = 0; iter < 25; ++iter) {
    double f[3] = {};
    ode.rhs(z, f);
    double res[3] = {};
    double res_norm = 0.0;
    for (int i = 0; i < n; ++i) {
      res[i] = z[i] - x[i] - h * f[i];
      res_norm = std::max(res_norm, std::abs(res[i]));
    }
    double jac[3][3] = {};
    ode.jacobian(z, jac);
    double a[3][3] = {};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = -h * jac[r][c];
      a[r][r] += 1.0;
    }
    double step[3];
    for (int i = 0; i < n; ++i) step[i] = -res[i];
    if (!solve_linear(n, a, step)) return false;
    double dz = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] += step[i];
      dz = std::max(dz, std::abs(step[i]));
    }
    if (!in_domain(ode, z)) return false;
    if (dz <= 1e-15 * ode.site_density + 1e-12 * max_abs(z, n)) return true;
    if (iter > 4 && res_norm == 0.0) return true;
  }
  return false;
}

// Newton refinement of the stationary point reached by the march.
void polish(const SurfaceOde& ode, double* x) {
  const int n = ode.n;
  double f[3] = {};
  ode.rhs(x, f);
  double best = max_abs(f, n);
  for (int iter = 0; iter < 30 && best > 0.0; ++iter) {
    double jac[3][3] = {};
    ode.jacobian(x, jac);
    double a[3][3] = {};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = jac[r][c];
    }
    double step[3];
    for (int i = 0; i < n; ++i) step[i] = -f[i];
    if (!solve_linear(n, a, step)) return;
    // Damped update: keep the iterate inside the physical simplex and
    // require the residual to shrink.
    double trial[3];
    double scale = 1.0;
    bool accepted = false;
    for (int damp = 0; damp < 40; ++damp) {
      for (int i = 0; i < n; ++i) trial[i] = x[i] + scale * step[i];
      if (in_domain(ode, trial)) {
        double ft[3] = {};
        ode.rhs(trial, ft);
        const double norm = max_abs(ft, n);
        if (norm < best) {
          for (int i = 0; i < n; ++i) x[i] = trial[i];
          best = norm;
          accepted = true;
          break;
        }
      }
      scale *= 0.5;
    }
    if (!accepted) return;
  }
}

}  // namespace

RelaxResult relax_to_steady(SurfaceModel model, const GasState& gas,
                            double site_density,
                            const EnrichmentRates& rates,
                            double rate_tol_factor) {
  if (!(site_density > 0.0)) {
    throw DomainError("site density must be positive");
  }
  if (model == SurfaceModel::Enriched) {
    const double adsorption = rates.k_1p * gas.conc_o + rates.k_2p * gas.conc_n;
    if (adsorption > 0.0 && rates.k_3p == 0.0) {
      throw SingularPlaceholderError(
          "placeholder consumption rate k_3p is zero while placeholder "
          "adsorption is active");
    }
  }
  const SurfaceOde ode(model, gas, site_density, rates);
  const int n = ode.n;
  const double tol_rate = rate_tol_factor * site_density;

  double x[3] = {};
  double f[3] = {};
  ode.rhs(x, f);

  // First step resolves the fastest local time scale at zero coverage.
  double jac0[3][3] = {};
  ode.jacobian(x, jac0);
  double scale = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) scale += std::abs(jac0[r][c]);
  }
  double h = 0.01 / std::max(scale, 1e-300);

  int steps = 0;
  const int max_steps = 20000;
  while (max_abs(f, n) >= tol_rate) {
    if (steps >= max_steps) {
      throw SolverFailureError(
          "transient relaxation did not reach stationarity", max_abs(f, n),
          h);
    }
    double z[3];
    if (implicit_step(ode, x, h, z)) {
      for (int i = 0; i < n; ++i) x[i] = std::max(z[i], 0.0);
      h = std::min(h * 2.0, 1e280);
    } else {
      h *= 0.25;
      if (h < 1e-300) {
        throw SolverFailureError("transient step size underflow",
                                 max_abs(f, n), h);
      }
    }
    ++steps;
    ode.rhs(x, f);
  }

  polish(ode, x);
  ode.rhs(x, f);

  RelaxResult out;
  switch (model) {
    case SurfaceModel::Hifi:
      out.coverages.weak_o = x[0];
      out.coverages.strong_o = x[1];
      out.coverages.nitrogen = x[2];
      break;
    case SurfaceModel::Lofi:
      out.coverages.strong_o = x[0];
      break;
    case SurfaceModel::Enriched:
      out.coverages.strong_o = x[0];
      out.coverages.placeholder = x[1];
      break;
  }
  out.free_sites = ode.free_sites(x);
  out.steps = steps;
  out.max_rate = max_abs(f, n);
  return out;
}

}  // namespace surfchem
