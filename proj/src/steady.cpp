#include "surfchem/steady.hpp"

#include <array>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "surfchem/errors.hpp"
#include "surfchem/rates.hpp"
#include "surfchem/reaction.hpp"

namespace surfchem {

namespace {

// Each adsorbed species obeys
//   d[X]/dt = a s^2 + b s - d [X] - c [X]^2,   s = free sites,
// so its steady coverage given s follows from the quadratic in [X]. The
// rationalized root below stays finite as the quadratic loss vanishes.
struct SiteChannel {
  double prod_site_sq = 0.0;  // a: production scaling with s^2
  double prod_site = 0.0;     // b: production scaling with s
  double loss_linear = 0.0;   // d: first-order coverage consumption
  double loss_quad = 0.0;     // c: second-order coverage consumption

  double coverage(double s) const {
    const double q = (prod_site_sq * s + prod_site) * s;
    if (q == 0.0) return 0.0;
    const double disc = loss_linear * loss_linear + 4.0 * loss_quad * q;
    return 2.0 * q / (loss_linear + std::sqrt(disc));
  }
};

struct RootResult {
  double free_sites = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Site balance defect B - s - sum of coverages; positive when s is below
// the root. Strictly decreasing in s, so the root in [0, B] is unique.
template <std::size_t N>
double balance(const std::array<SiteChannel, N>& channels, int count,
               double site_density, double s) {
  double r = site_density - s;
  for (int i = 0; i < count; ++i) r -= channels[i].coverage(s);
  return r;
}

template <std::size_t N>
RootResult solve_free_sites(const std::array<SiteChannel, N>& channels,
                            int count, double site_density) {
  if (!(site_density > 0.0)) {
    throw DomainError("site density must be positive");
  }
  auto f = [&](double s) { return balance(channels, count, site_density, s); };

  double lo = 0.0;
  double hi = site_density;
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};

  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    // Defensive: scan 64 log-spaced subintervals for a sign change before
    // giving up. The closed forms guarantee bracketing for valid inputs,
    // so this only fires on corrupted coefficients.
    bool bracketed = false;
    double prev_s = 0.0;
    double prev_f = f_lo;
    for (int i = 0; i <= 64 && !bracketed; ++i) {
      const double s = site_density * std::pow(10.0, -30.0 * (1.0 - i / 64.0));
      const double fs = f(s);
      if ((prev_f > 0.0 && fs <= 0.0) || (prev_f < 0.0 && fs >= 0.0)) {
        lo = prev_s;
        hi = s;
        f_lo = prev_f;
        f_hi = fs;
        bracketed = true;
      }
      prev_s = s;
      prev_f = fs;
    }
    if (!bracketed) {
      throw SolverFailureError("site balance has no sign change", f_lo, f_hi);
    }
    if (f_lo < 0.0) {
      std::swap(lo, hi);  // keep the positive side at lo
    }
  }

  // Bisect down to the floating-point resolution of the interval. Steep
  // channels (fast adsorption against slow consumption) amplify interval
  // width into balance residual, so an early exit on a loose width
  // tolerance would leave residuals far above roundoff.
  const double tol =
      4.0 * (std::nextafter(site_density,
                            std::numeric_limits<double>::infinity()) -
             site_density);
  int iterations = 0;
  while (std::abs(hi - lo) > tol && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  const double s = 0.5 * (lo + hi);
  return {s, f(s), iterations};
}

// Rate constants of the full table, 1-based by reaction id.
std::array<double, 21> aca_rate_constants(double temperature,
                                          double site_density) {
  const auto& tab = aca_reactions();
  assert(tab.size() == 20 && tab[15].id == "16");
  std::array<double, 21> k{};
  for (std::size_t i = 0; i < tab.size(); ++i) {
    k[i + 1] = rate_constant(tab[i], temperature, site_density);
  }
  return k;
}

struct ReducedRateSet {
  double k5, k6, k7, k8, k19, k20;
};

ReducedRateSet reduced_rate_constants(double temperature,
                                      double site_density) {
  const auto& tab = reduced_reactions();
  auto at = [&](std::string_view id) {
    return rate_constant(find_reaction(tab, id), temperature, site_density);
  };
  return {at("5"), at("6"), at("7"), at("8"), at("19"), at("20")};
}

// Shared implementation of the reduced and enriched models. The enriched
// corrections are strictly additive so that zero placeholder adsorption
// reproduces the reduced solution bit for bit.
SurfaceSolution solve_reduced_impl(const GasState& gas, double site_density,
                                   const EnrichmentRates* er) {
  const ReducedRateSet k =
      reduced_rate_constants(gas.temperature, site_density);
  const double c_o = gas.conc_o;
  const double c_n = gas.conc_n;
  const double c_o2 = gas.conc_o2;

  std::array<SiteChannel, 2> ch{};
  int count = 1;
  ch[0] = {2.0 * k.k19 * c_o2, k.k5 * c_o,
           k.k6 + k.k7 * c_o + k.k20 * c_o2, 2.0 * k.k8};
  if (er != nullptr) {
    if (er->k_1p < 0.0 || er->k_2p < 0.0 || er->k_3p < 0.0) {
      throw DomainError("enrichment rates must be non-negative");
    }
    const double adsorption = er->k_1p * c_o + er->k_2p * c_n;
    if (adsorption > 0.0 && er->k_3p == 0.0) {
      throw SingularPlaceholderError(
          "placeholder consumption rate k_3p is zero while placeholder "
          "adsorption is active");
    }
    ch[1] = {0.0, adsorption, er->k_3p, 0.0};
    count = 2;
  }

  const RootResult root = solve_free_sites(ch, count, site_density);
  const double s = root.free_sites;
  const double x_strong = ch[0].coverage(s);
  const double x_p = er != nullptr ? ch[1].coverage(s) : 0.0;

  SurfaceSolution out;
  out.coverages.strong_o = x_strong;
  out.coverages.placeholder = x_p;
  out.free_sites = s;
  out.balance_residual = root.residual;
  out.iterations = root.iterations;

  SurfaceFluxes& f = out.fluxes;
  f.co = (k.k7 * c_o + k.k20 * c_o2) * x_strong;
  f.o = gas.flux_o - k.k5 * c_o * s + k.k6 * x_strong;
  f.o2 = gas.flux_o2 + k.k8 * x_strong * x_strong - k.k19 * c_o2 * s * s;
  if (er != nullptr) {
    f.co += er->k_3p * x_p;
    f.o -= er->k_1p * c_o * s;
    f.n = 0.0 - er->k_2p * c_n * s;  // placeholder consumes the N flux
  }
  return out;
}

}  // namespace

SurfaceSolution solve_hifi(const GasState& gas, double site_density) {
  const auto k = aca_rate_constants(gas.temperature, site_density);
  const double c_o = gas.conc_o;
  const double c_n = gas.conc_n;
  const double c_o2 = gas.conc_o2;

  std::array<SiteChannel, 3> ch{};
  // weakly bonded oxygen: reactions 1-4, 9, 16-18
  ch[0] = {2.0 * k[16] * c_o2, k[1] * c_o,
           k[2] + (k[3] + k[4]) * c_o + (k[17] + k[18]) * c_o2, 2.0 * k[9]};
  // strongly bonded oxygen: reactions 5-8, 19, 20
  ch[1] = {2.0 * k[19] * c_o2, k[5] * c_o,
           k[6] + k[7] * c_o + k[20] * c_o2, 2.0 * k[8]};
  // adsorbed nitrogen: reactions 10-15
  ch[2] = {0.0, k[10] * c_n,
           k[11] + k[15] + (k[12] + k[13]) * c_n, 2.0 * k[14]};

  const RootResult root = solve_free_sites(ch, 3, site_density);
  const double s = root.free_sites;
  const double x_w = ch[0].coverage(s);
  const double x_s = ch[1].coverage(s);
  const double x_n = ch[2].coverage(s);

  SurfaceSolution out;
  out.coverages.weak_o = x_w;
  out.coverages.strong_o = x_s;
  out.coverages.nitrogen = x_n;
  out.free_sites = s;
  out.balance_residual = root.residual;
  out.iterations = root.iterations;

  SurfaceFluxes& f = out.fluxes;
  f.co = (k[3] * c_o + k[17] * c_o2) * x_w + (k[7] * c_o + k[20] * c_o2) * x_s;
  f.co2 = (k[4] * c_o + k[18] * c_o2) * x_w;
  f.o = gas.flux_o - k[1] * c_o * s + k[2] * x_w - k[4] * c_o * x_w -
        k[5] * c_o * s + k[6] * x_s + k[18] * c_o2 * x_w;
  f.o2 = gas.flux_o2 + k[8] * x_s * x_s + k[9] * x_w * x_w -
         k[16] * c_o2 * s * s - k[18] * c_o2 * x_w - k[19] * c_o2 * s * s;
  f.cn = k[12] * c_n * x_n + k[15] * x_n;
  f.n = gas.flux_n - k[10] * c_n * s + k[11] * x_n - k[13] * c_n * x_n;
  f.n2 = k[13] * c_n * x_n + k[14] * x_n * x_n;
  return out;
}

SurfaceSolution solve_lofi(const GasState& gas, double site_density) {
  return solve_reduced_impl(gas, site_density, nullptr);
}

SurfaceSolution solve_enriched(const GasState& gas, double site_density,
                               const EnrichmentRates& rates) {
  return solve_reduced_impl(gas, site_density, &rates);
}

EnrichmentRates physics_enrichment_rates(double temperature,
                                         double site_density, double k_3p) {
  if (!(k_3p >= 0.0)) {
    throw DomainError("pseudo rate k_3p must be non-negative");
  }
  const auto& tab = enriched_reactions();
  EnrichmentRates er;
  er.k_1p = rate_adsorption(find_reaction(tab, "1p"), temperature,
                            site_density);
  er.k_2p = rate_adsorption(find_reaction(tab, "2p"), temperature,
                            site_density);
  er.k_3p = k_3p;
  return er;
}

}  // namespace surfchem
