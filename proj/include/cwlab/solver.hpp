#pragma once

#include <string>
#include <vector>

#include "cwlab/config.hpp"
#include "cwlab/diagnostics.hpp"
#include "cwlab/profiles.hpp"
#include "cwlab/shift.hpp"

namespace cwlab {

// Uniform grid of n points on [xi_min, xi_max] with xi_min < 0 < xi_max.
struct Grid1D {
  double xi_min, xi_max;
  int n;

  Grid1D(double a, double b, int n_points);
  double dxi() const { return (xi_max - xi_min) / static_cast<double>(n - 1); }
  double xi(int i) const { return xi_min + dxi() * static_cast<double>(i); }
  std::vector<double> coords() const;
};

// Everything a run needs: the composite background, weight, shift constants
// and grid, derived from a RunConfig.
struct RunSetup {
  WaveConfig cfg;
  ShockProfile shock;
  ApproxRarefaction rare;
  WeightFunction weight;
  ShiftParams shift;
  Grid1D grid;
  std::vector<double> xi;  // cached grid coordinates
  double cfl;
};

RunSetup build_setup(const RunConfig& rc);

struct SimState {
  double t = 0.0;
  std::vector<double> v, u;
  double X = 0.0;
};

// Composite background at t = 0 plus the configured gaussian perturbations.
// Returns the state and the discrete H1 norm of the added perturbation.
struct InitialData {
  SimState state;
  double perturb_h1;
};

InitialData initial_data(const RunSetup& setup, const std::vector<PerturbationSpec>& perts);

struct Tendency {
  std::vector<double> dv, du;
  double dX = 0.0;
};

// Semi-discrete right-hand side of the shock-frame system
//   v_t = sigma v_xi + u_xi,
//   u_t = sigma u_xi - p(v)_xi + (u_xi / v)_xi,
// with second-order central differences, a conservative face-averaged viscous
// flux, zero tendency at the Dirichlet boundary nodes, and the shift ODE
// coupled through dX.
void rhs(const SimState& s, const RunSetup& setup, Tendency& out);
Tendency rhs(const SimState& s, const RunSetup& setup);

// Largest stable step (cfl = 1): min(dxi/s_max, dxi^2 min(v)/2) with
// s_max = sigma + max lambda2(v).
double stable_dt(const SimState& s, const RunSetup& setup);

// One classical RK4 step of the coupled (v, u, X) system; boundary values are
// pinned to the composite background at the stage times. Throws StepError when
// dt exceeds the stable bound.
void advance(SimState& s, const RunSetup& setup, double dt);

struct RunResult {
  std::vector<DiagnosticRecord> records;
  std::vector<InteractionNorms> interactions;  // one per record
  SimState state;                              // final state
  double perturb_h1_initial = 0.0;
};

struct RunIO {
  std::string out_dir;         // where diagnostics.csv / snapshots go
  bool write_files = false;
};

// Steps from t = 0 to t_end, emitting a diagnostics record every
// output_interval (plus t = 0 and t_end) and snapshots at the configured
// times. Deterministic for identical configs. Partial outputs are flushed
// if the state blows up.
RunResult run(const RunConfig& rc, const RunIO& io = {});

}  // namespace cwlab
