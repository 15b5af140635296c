// Copyright 2026 The ringpoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RINGPOA_NP_VERIFIER_H_
#define RINGPOA_NP_VERIFIER_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

// Numeric side of the covering case: the five-variable minimization of
//
//   f = h/x + x/h - (h/(x(x+1)) - 1/h) y - z - 2 + beta
//   subject to g = 2x/h - 1/x + (2/h + 1/(x(x+1))) y + 2z - (h-1)/h - beta
//   <= 0, x >= 1, y in [0, 1], z >= beta/h
//
// and the claim that its minimum is at least (1 + beta)/3.

namespace ringpoa::np {

struct FgValue {
  double f = 0;
  double g = 0;
};

struct Gradient {
  double x = 0;
  double y = 0;
  double z = 0;
};

// Throws std::domain_error when x < 1.
FgValue EvalFg(double h, double beta, double x, double y, double z);
Gradient GradF(double h, double x, double y);
Gradient GradG(double h, double x, double y);

// z on g = 0 for the given (x, y).
double ZOnConstraint(double h, double beta, double x, double y);
// y on g = 0 with z pinned to beta/h.
double YOnLowerZ(double h, double beta, double x);

inline double TargetBound(double beta) { return (1 + beta) / 3; }

double Chi(double h);
double Nu(double h);
double Z2(double h, double beta);
double Z3(double h, double beta);
// f(nu, 0, z2) and f(chi, (chi+1)/(2chi+1), z3) in closed form.
double Omega3Closed(double h, double beta);
double Omega4Closed(double h, double beta);

struct NPCandidate {
  int h = 0;
  double beta = 0;
  double x = 0;
  double y = 0;
  double z = 0;
  double f = 0;
  double g = 0;
  std::string source;  // table row, KKT branch or grid cell
  bool feasible = false;
  // KKT multipliers for grad f + lambda grad g + sum mu_i grad g_i = 0 with
  // g1 = 1 - x, g2 = y - 1, g3 = -y, g4 = beta/h - z.
  std::optional<double> lambda;
  std::optional<std::array<double, 4>> mu;
  // Relaxed problems without the z bound use theta (on g) and eta (on 1-x).
  std::optional<double> theta;
  std::optional<double> eta;
  std::optional<double> kkt_residual;

  double margin() const { return f - TargetBound(beta); }
};

// Feasibility with absolute slack `tol` on every constraint; g must vanish.
bool IsFeasible(double h, double beta, double x, double y, double z,
                double tol = 1e-9);

// ----- consecutive support -------------------------------------------------

// Objective sum (h/i + i/h) D_i - z and constraint left-hand side
// sum (2i/h - 1/i) D_i + 2z, with D indexed from i = 1.
double SupportObjective(int h, const std::vector<double>& d, double z);
double SupportConstraint(int h, const std::vector<double>& d, double z);

// When D has nonzero entries at i1 and i2 >= i1 + 2 (smallest and largest
// support indices), moves m1 from i1 to i1+1 and m2 from i2 to i2-1 with
// m1/m2 strictly between the two admissible thresholds. The result stays
// feasible and lowers the objective. Returns nullopt when no such gap exists.
// Throws std::invalid_argument on infeasible input.
std::optional<std::vector<double>> ConsecutiveSupportCheck(
    int h, double beta, const std::vector<double>& d, double z);

// ----- tables for h in {3, 4, 6} ------------------------------------------

struct TableRow {
  int table = 1;        // 1: z pinned to beta/h; 2: y in {0, 1}
  int h = 0;
  int x = 0;            // Table 2 rows use the (x, 0) representative
  double beta = 0;
  bool in_range = false;  // beta inside the row's feasibility interval
  double beta_lo = 0;
  double beta_hi = 0;
  // Free coordinate (y for Table 1, z for Table 2) by closed form and by
  // solving g = 0 numerically.
  double closed = 0;
  double solved = 0;
  double y = 0;
  double z = 0;
  double f = 0;
  double f_closed = 0;
  // The printed column and the two readings of it: f itself and the
  // objective f + 2 - beta of the support problem.
  double printed_closed = 0;
  double f_plus_2_minus_beta = 0;
  bool printed_is_f = false;
  std::string label;

  double margin() const { return f - TargetBound(beta); }
};

// Every row for h, evaluated at beta. Infeasible rows are included with
// in_range = false. Throws std::invalid_argument unless h is 3, 4 or 6.
std::vector<TableRow> TableCases(int h, double beta);

// ----- KKT candidates for h >= 7 ------------------------------------------

// Candidates for every branch: x = 1 with y in {0, 1}, the y = 0 interior
// point (nu, 0, z2) and its z = beta/h boundary point, the interior point at
// x = chi on y = (x+1)/(2x+1) and its z = beta/h boundary point.
// Throws std::invalid_argument when h < 7.
std::vector<NPCandidate> KktCandidates(int h, double beta);

// ----- grid certification -------------------------------------------------

struct GridMin {
  double beta = 0;
  double x = 0;
  double y = 0;
  double z = 0;
  double f = 0;
  double g = 0;
  double margin = 0;
  std::string cell;  // "y0", "y1", "zlow" or "refined"
};

struct GridReport {
  int h = 0;
  bool integer_x = false;
  double beta_max = 0;
  double beta_step = 0;
  double resolution = 0;
  std::vector<GridMin> per_beta;
  GridMin worst;
};

// Integer x for h <= 6 and continuous x in [1, h] otherwise. Along g = 0, f
// is affine in y for fixed x, so each x is minimized exactly over the
// feasible y interval [0, min(1, YOnLowerZ)]. Continuous grids are refined
// around the best cell by a bracketed 1-D minimization in x.
GridReport GridCertify(int h, double beta_max, double beta_step,
                       double resolution, int jobs = 1);

}  // namespace ringpoa::np

#endif  // RINGPOA_NP_VERIFIER_H_
