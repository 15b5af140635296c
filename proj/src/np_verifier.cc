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

#include "ringpoa/np_verifier.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "ringpoa/parallel.h"

namespace ringpoa::np {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Root of a monotone function on a generous bracket.
double SolveMonotone(const std::function<double(double)>& fn) {
  double lo = -64, hi = 64;
  while (fn(lo) * fn(hi) > 0 && hi < 1e9) {
    lo *= 2;
    hi *= 2;
  }
  boost::uintmax_t iters = 200;
  auto [a, b] = boost::math::tools::toms748_solve(
      fn, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return (a + b) / 2;
}

}  // namespace

FgValue EvalFg(double h, double beta, double x, double y, double z) {
  if (!(x >= 1)) throw std::domain_error("x must be at least 1");
  const double xx1 = x * (x + 1);
  FgValue v;
  v.f = h / x + x / h - (h / xx1 - 1 / h) * y - z - 2 + beta;
  v.g = 2 * x / h - 1 / x + (2 / h + 1 / xx1) * y + 2 * z - (h - 1) / h - beta;
  return v;
}

Gradient GradF(double h, double x, double y) {
  return {1 / h - h * (1 - y) / (x * x) - h * y / ((x + 1) * (x + 1)),
          1 / h - h / (x * (x + 1)), -1};
}

Gradient GradG(double h, double x, double y) {
  return {2 / h + (1 - y) / (x * x) + y / ((x + 1) * (x + 1)),
          2 / h + 1 / (x * (x + 1)), 2};
}

double ZOnConstraint(double h, double beta, double x, double y) {
  const double rest = 2 * x / h - 1 / x + (2 / h + 1 / (x * (x + 1))) * y -
                      (h - 1) / h - beta;
  return -rest / 2;
}

double YOnLowerZ(double h, double beta, double x) {
  const double rest =
      2 * x / h - 1 / x + 2 * beta / h - (h - 1) / h - beta;
  return -rest / (2 / h + 1 / (x * (x + 1)));
}

double Chi(double h) { return (std::sqrt(2 * h * h - h + 1) - 1) / 2; }
double Nu(double h) { return std::sqrt(2 * h * h - h) / 2; }

double Z2(double h, double beta) {
  const double nu = Nu(h);
  return ((h - 1 - 2 * nu) / h + 1 / nu + beta) / 2;
}

double Z3(double h, double beta) {
  const double chi = Chi(h);
  const double y = (chi + 1) / (2 * chi + 1);
  return (1 + beta - (1 + 2 * chi) / h + 1 / chi -
          (2 / h + 1 / (chi * (chi + 1))) * y) /
         2;
}

double Omega3Closed(double h, double beta) {
  return (4 * std::sqrt(2 * h * h - h) + 1) / (2 * h) + (beta - 5) / 2;
}

double Omega4Closed(double h, double beta) {
  return (4 * std::sqrt(2 * h * h - h + 1) + 1) / (2 * h) + (beta - 5) / 2;
}

bool IsFeasible(double h, double beta, double x, double y, double z,
                double tol) {
  if (x < 1 - tol || y < -tol || y > 1 + tol || z < beta / h - tol) {
    return false;
  }
  return std::abs(EvalFg(h, beta, std::max(x, 1.0), y, z).g) <= tol;
}

// ----- consecutive support -------------------------------------------------

double SupportObjective(int h, const std::vector<double>& d, double z) {
  double total = -z;
  for (int i = 1; i <= h; ++i) {
    total += (static_cast<double>(h) / i + static_cast<double>(i) / h) * d[i - 1];
  }
  return total;
}

double SupportConstraint(int h, const std::vector<double>& d, double z) {
  double total = 2 * z;
  for (int i = 1; i <= h; ++i) {
    total += (2.0 * i / h - 1.0 / i) * d[i - 1];
  }
  return total;
}

std::optional<std::vector<double>> ConsecutiveSupportCheck(
    int h, double beta, const std::vector<double>& d, double z) {
  constexpr double kTol = 1e-9;
  if (h < 1 || static_cast<int>(d.size()) != h) {
    throw std::invalid_argument("support vector must have h entries");
  }
  if (std::any_of(d.begin(), d.end(), [](double v) { return v < -kTol; })) {
    throw std::invalid_argument("negative support entry");
  }
  if (std::abs(std::accumulate(d.begin(), d.end(), 0.0) - 1) > kTol) {
    throw std::invalid_argument("support does not sum to 1");
  }
  if (z < beta / h - kTol || z > beta + kTol) {
    throw std::invalid_argument("z outside [beta/h, beta]");
  }
  const double hd = h;
  if (SupportConstraint(h, d, z) > (hd - 1) / hd + beta + kTol) {
    throw std::invalid_argument("support constraint violated");
  }

  int i1 = 0, i2 = 0;
  for (int i = 1; i <= h; ++i) {
    if (d[i - 1] > 0) {
      if (i1 == 0) i1 = i;
      i2 = i;
    }
  }
  if (i2 - i1 < 2) return std::nullopt;

  const double upper = (1.0 / ((i2 - 1.0) * i2) + 2 / hd) /
                       (1.0 / ((i1 + 1.0) * i1) + 2 / hd);
  const double lower = (hd / ((i2 - 1.0) * i2) - 1 / hd) /
                       (hd / (i1 * (i1 + 1.0)) - 1 / hd);
  const double ratio = (upper + lower) / 2;
  const double m2 = std::min(d[i2 - 1], d[i1 - 1] / ratio);
  const double m1 = ratio * m2;

  std::vector<double> out = d;
  out[i1 - 1] -= m1;
  out[i1] += m1;
  out[i2 - 1] -= m2;
  out[i2 - 2] += m2;
  for (double& v : out) v = std::max(v, 0.0);
  return out;
}

// ----- tables ---------------------------------------------------------------

namespace {

struct RowSpec {
  int table;
  int h;
  int x;
  double (*closed)(double);    // y* (table 1) or z* (table 2)
  double (*f_closed)(double);
  double (*printed)(double);   // nullptr for infeasible rows
  double lo;
  double hi;
  bool printed_is_f;
  const char* label;
};

constexpr double kBetaCap = 2.0;

// clang-format off
const RowSpec kRows[] = {
  {1, 3, 1, [](double b) { return 6.0 / 7 + 2 * b / 7; },
            [](double b) { return (1 + b) / 3; },
            [](double b) { return (1 + b) / 3; }, 0, 0.5, true, "h3 x1 z=b/3"},
  {1, 4, 1, [](double b) { return 5.0 / 4 + b / 2; },
            nullptr, nullptr, 1, 0, false, "h4 x1 z=b/4"},
  {1, 4, 2, [](double b) { return 3.0 / 8 + 3 * b / 4; },
            [](double b) { return 11.0 / 32 + 7 * b / 16; },
            [](double b) { return (75 - 18 * b) / 32; }, 0, 5.0 / 6, false,
            "h4 x2 z=b/4"},
  {1, 6, 1, [](double b) { return 9.0 / 5 + 4 * b / 5; },
            nullptr, nullptr, 1, 0, false, "h6 x1 z=b/6"},
  {1, 6, 2, [](double b) { return 4.0 / 3 + 4 * b / 3; },
            nullptr, nullptr, 1, 0, false, "h6 x2 z=b/6"},
  {1, 6, 3, [](double b) { return 2.0 / 5 + 8 * b / 5; },
            [](double b) { return 11.0 / 30 + 3 * b / 10; },
            [](double b) { return (71 - 21 * b) / 30; }, 0, 3.0 / 8, false,
            "h6 x3 z=b/6"},
  {2, 3, 2, [](double b) { return b / 2 - 1.0 / 12; },
            [](double b) { return 1.0 / 4 + b / 2; },
            [](double b) { return (9 - 2 * b) / 4; }, 0.5, kBetaCap, false,
            "h3 (1,1)~(2,0)"},
  {2, 4, 2, [](double b) { return b / 2 + 1.0 / 8; },
            [](double b) { return 3.0 / 8 + b / 2; },
            [](double b) { return (19 - 4 * b) / 8; }, 0, kBetaCap, false,
            "h4 (1,1)~(2,0)"},
  {2, 4, 3, [](double b) { return b / 2 - 5.0 / 24; },
            [](double b) { return 7.0 / 24 + b / 2; },
            [](double b) { return (55 - 12 * b) / 24; }, 5.0 / 6, kBetaCap,
            false, "h4 (2,1)~(3,0)"},
  {2, 6, 2, [](double b) { return b / 2 + 1.0 / 3; },
            [](double b) { return 1 + b / 2; },
            [](double b) { return (6 - b) / 2; }, 0, kBetaCap, false,
            "h6 (1,1)~(2,0)"},
  {2, 6, 3, [](double b) { return b / 2 + 1.0 / 12; },
            [](double b) { return 5.0 / 12 + b / 2; },
            [](double b) { return (29 - 6 * b) / 12; }, 0, kBetaCap, false,
            "h6 (2,1)~(3,0)"},
  {2, 6, 4, [](double b) { return b / 2 - 1.0 / 8; },
            [](double b) { return 7.0 / 24 + b / 2; },
            [](double b) { return (55 - 12 * b) / 24; }, 3.0 / 8, kBetaCap,
            false, "h6 (3,1)~(4,0)"},
  {2, 6, 5, [](double b) { return b / 2 - 19.0 / 60; },
            [](double b) { return 7.0 / 20 + b / 2; },
            [](double b) { return (47 - 10 * b) / 20; }, 19.0 / 20, kBetaCap,
            false, "h6 (5,0)"},
};
// clang-format on

}  // namespace

std::vector<TableRow> TableCases(int h, double beta) {
  if (h != 3 && h != 4 && h != 6) {
    throw std::invalid_argument("tables cover h in {3, 4, 6}");
  }
  const double hd = h;
  std::vector<TableRow> out;
  for (const RowSpec& def : kRows) {
    if (def.h != h) continue;
    TableRow row;
    row.table = def.table;
    row.h = h;
    row.x = def.x;
    row.beta = beta;
    row.beta_lo = def.lo;
    row.beta_hi = def.hi;
    row.in_range = def.printed != nullptr && beta >= def.lo - 1e-12 &&
                   beta <= def.hi + 1e-12;
    row.label = def.label;
    row.printed_is_f = def.printed_is_f;
    row.closed = def.closed(beta);
    const double x = def.x;
    if (def.table == 1) {
      row.z = beta / hd;
      row.solved = SolveMonotone(
          [&](double y) { return EvalFg(hd, beta, x, y, row.z).g; });
      row.y = row.solved;
    } else {
      row.y = 0;
      row.solved = SolveMonotone(
          [&](double z) { return EvalFg(hd, beta, x, 0, z).g; });
      row.z = row.solved;
    }
    row.f = EvalFg(hd, beta, x, row.y, row.z).f;
    row.f_plus_2_minus_beta = row.f + 2 - beta;
    row.f_closed = def.f_closed ? def.f_closed(beta) : kNaN;
    row.printed_closed = def.printed ? def.printed(beta) : kNaN;
    out.push_back(std::move(row));
  }
  return out;
}

// ----- KKT ------------------------------------------------------------------

namespace {

void AttachMultipliers(NPCandidate& c) {
  constexpr double kActive = 1e-9;
  const double h = c.h;
  const Gradient df = GradF(h, c.x, c.y);
  const Gradient dg = GradG(h, c.x, c.y);
  const bool x_active = c.x <= 1 + kActive;
  const bool y_low = c.y <= kActive;
  const bool y_high = c.y >= 1 - kActive;
  const bool z_active = c.z <= c.beta / h + kActive;

  // z row: f_z + lambda g_z - mu4 = 0.
  double lambda;
  if (!z_active) {
    lambda = -df.z / dg.z;
  } else if (!x_active) {
    lambda = -df.x / dg.x;
  } else if (!y_low && !y_high) {
    lambda = -df.y / dg.y;
  } else {
    lambda = -df.z / dg.z;
  }
  std::array<double, 4> mu{0, 0, 0, 0};
  double residual = 0;

  const double rx = df.x + lambda * dg.x;  // = mu1
  if (x_active) {
    mu[0] = rx;
  } else {
    residual = std::max(residual, std::abs(rx));
  }
  const double ry = df.y + lambda * dg.y;  // = mu3 - mu2
  if (y_low) {
    mu[2] = ry;
  } else if (y_high) {
    mu[1] = -ry;
  } else {
    residual = std::max(residual, std::abs(ry));
  }
  const double rz = df.z + lambda * dg.z;  // = mu4
  if (z_active) {
    mu[3] = rz;
  } else {
    residual = std::max(residual, std::abs(rz));
  }
  for (double m : mu) residual = std::max(residual, std::max(0.0, -m));
  c.lambda = lambda;
  c.mu = mu;
  c.kkt_residual = residual;
}

NPCandidate MakeCandidate(int h, double beta, double x, double y, double z,
                          std::string source) {
  NPCandidate c;
  c.h = h;
  c.beta = beta;
  c.x = x;
  c.y = y;
  c.z = z;
  c.source = std::move(source);
  const FgValue v = EvalFg(h, beta, x, y, z);
  c.f = v.f;
  c.g = v.g;
  c.feasible = IsFeasible(h, beta, x, y, z);
  return c;
}

}  // namespace

std::vector<NPCandidate> KktCandidates(int h, double beta) {
  if (h < 7) throw std::invalid_argument("KKT candidates need h >= 7");
  const double hd = h;
  const double z_low = beta / hd;
  std::vector<NPCandidate> out;

  for (double y : {0.0, 1.0}) {
    out.push_back(MakeCandidate(h, beta, 1, y, ZOnConstraint(hd, beta, 1, y),
                                y == 0 ? "kkt:x1_y0" : "kkt:x1_y1"));
  }
  out.push_back(
      MakeCandidate(h, beta, 1, YOnLowerZ(hd, beta, 1), z_low, "kkt:x1_zlow"));

  {
    NPCandidate c =
        MakeCandidate(h, beta, Nu(hd), 0, Z2(hd, beta), "kkt:nu_interior");
    // Relaxed y = 0 problem without the z bound.
    c.theta = 0.5;
    c.eta = GradF(hd, c.x, 0).x + 0.5 * GradG(hd, c.x, 0).x;
    out.push_back(std::move(c));
  }
  const double b = (beta + 1) * hd - (2 * beta + 1);
  {
    const double x = (b + std::sqrt(b * b + 8 * hd)) / 4;
    out.push_back(MakeCandidate(h, beta, x, 0, z_low, "kkt:y0_boundary"));
  }
  {
    const double chi = Chi(hd);
    out.push_back(MakeCandidate(h, beta, chi, (chi + 1) / (2 * chi + 1),
                                Z3(hd, beta), "kkt:chi_interior"));
  }
  {
    const double u = (b + std::sqrt(b * b + 8 * hd - 4)) / 2;
    const double x = (u - 1) / 2;
    out.push_back(MakeCandidate(h, beta, x, (x + 1) / (2 * x + 1), z_low,
                                "kkt:chi_boundary"));
  }
  for (NPCandidate& c : out) AttachMultipliers(c);
  return out;
}

// ----- grid -------------------------------------------------------------------

namespace {

// Exact minimum over the feasible y interval at fixed x along g = 0.
GridMin BestAtX(double h, double beta, double x) {
  GridMin best;
  best.f = kInf;
  best.beta = beta;
  const double y_cap = std::min(1.0, YOnLowerZ(h, beta, x));
  if (y_cap < 0) return best;
  auto consider = [&](double y, const char* cell) {
    const double z = ZOnConstraint(h, beta, x, y);
    const FgValue v = EvalFg(h, beta, x, y, z);
    if (v.f < best.f) {
      best.x = x;
      best.y = y;
      best.z = z;
      best.f = v.f;
      best.g = v.g;
      best.cell = cell;
    }
  };
  consider(0, "y0");
  consider(y_cap, y_cap >= 1 ? "y1" : "zlow");
  return best;
}

GridMin MinimizeAtBeta(int h, double beta, bool integer_x, double resolution) {
  const double hd = h;
  GridMin best;
  best.f = kInf;
  if (integer_x) {
    for (int x = 1; x <= 2 * h; ++x) {
      GridMin m = BestAtX(hd, beta, x);
      if (m.f < best.f) best = m;
    }
  } else {
    const auto steps = static_cast<std::int64_t>(std::ceil((hd - 1) / resolution));
    for (std::int64_t j = 0; j <= steps; ++j) {
      const double x = std::min(hd, 1 + j * resolution);
      GridMin m = BestAtX(hd, beta, x);
      if (m.f < best.f) best = m;
    }
    if (std::isfinite(best.f)) {
      const double lo = std::max(1.0, best.x - resolution);
      const double hi = std::min(hd, best.x + resolution);
      auto [x, f] = boost::math::tools::brent_find_minima(
          [&](double t) { return BestAtX(hd, beta, t).f; }, lo, hi, 40);
      (void)f;
      GridMin refined = BestAtX(hd, beta, x);
      if (refined.f < best.f) {
        best = refined;
        best.cell = "refined";
      }
    }
  }
  best.beta = beta;
  best.margin = best.f - TargetBound(beta);
  return best;
}

}  // namespace

GridReport GridCertify(int h, double beta_max, double beta_step,
                       double resolution, int jobs) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  if (!(beta_step > 0) || !(resolution > 0) || beta_max < 0) {
    throw std::invalid_argument("bad grid parameters");
  }
  GridReport rep;
  rep.h = h;
  rep.integer_x = h <= 6;
  rep.beta_max = beta_max;
  rep.beta_step = beta_step;
  rep.resolution = resolution;
  const auto count =
      static_cast<std::uint64_t>(std::floor(beta_max / beta_step + 1e-9)) + 1;
  rep.per_beta.resize(count);
  ForEachBlock(count, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      rep.per_beta[i] =
          MinimizeAtBeta(h, i * beta_step, rep.integer_x, resolution);
    }
  });
  rep.worst = rep.per_beta.front();
  for (const GridMin& m : rep.per_beta) {
    if (m.margin < rep.worst.margin) rep.worst = m;
  }
  return rep;
}

}  // namespace ringpoa::np
