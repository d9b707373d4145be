// Copyright 2026 The drg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "drg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace drg {

Tridiagonal quotient_matrix(const IntersectionArray& arr) {
  return quotient_truncation(arr, arr.diameter());
}

Tridiagonal quotient_truncation(const IntersectionArray& arr, int i) {
  if (i < 0 || i > arr.diameter()) {
    throw PreconditionError("truncation index out of range [0, D]");
  }
  Tridiagonal t;
  const int n = i + 1;
  t.diag.resize(static_cast<size_t>(n));
  t.super.resize(static_cast<size_t>(n) - 1);
  t.sub.resize(static_cast<size_t>(n) - 1);
  for (int r = 0; r < n; ++r) {
    t.diag[static_cast<size_t>(r)] = static_cast<double>(arr.a_at(r));
    if (r < n - 1) {
      t.super[static_cast<size_t>(r)] = static_cast<double>(arr.b_at(r));
      t.sub[static_cast<size_t>(r)] = static_cast<double>(arr.c_at(r + 1));
    }
  }
  return t;
}

namespace {

// Number of eigenvalues of the symmetrized matrix strictly less than x,
// via the classic shifted LDL^T sign count.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x) {
  int count = 0;
  double q = 1.0;
  const size_t n = d.size();
  for (size_t i = 0; i < n; ++i) {
    q = d[i] - x - (i ? e2[i - 1] / q : 0.0);
    if (q < 0) ++count;
    if (q == 0) q = 1e-300;
  }
  return count;
}

struct SymmetrizedTridiag {
  std::vector<double> d;
  std::vector<double> e2;  // squared off-diagonals
  double lo = 0, hi = 0;   // Gershgorin interval
};

SymmetrizedTridiag symmetrize(const Tridiagonal& tri) {
  const size_t n = tri.diag.size();
  SymmetrizedTridiag s;
  s.d = tri.diag;
  s.e2.resize(n > 0 ? n - 1 : 0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double prod = tri.super[i] * tri.sub[i];
    if (prod <= 0) {
      throw PreconditionError("tridiagonal off-diagonal products must be positive");
    }
    s.e2[i] = prod;
  }
  double lo = s.d[0], hi = s.d[0];
  for (size_t i = 0; i < n; ++i) {
    double r = 0;
    if (i > 0) r += std::sqrt(s.e2[i - 1]);
    if (i + 1 < n) r += std::sqrt(s.e2[i]);
    lo = std::min(lo, s.d[i] - r);
    hi = std::max(hi, s.d[i] + r);
  }
  const double pad = 1e-8 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  s.lo = lo - pad;
  s.hi = hi + pad;
  return s;
}

// Bisects for the eigenvalue with ascending index `idx` (0 = smallest).
// Runs down to a few ulps of the Gershgorin scale, so results are as
// accurate as bisection allows; rel_tol only arms the non-convergence check.
double bisect_eigenvalue(const SymmetrizedTridiag& s, int idx, double rel_tol, int max_iter) {
  double lo = s.lo, hi = s.hi;
  const double scale = std::max({std::abs(s.lo), std::abs(s.hi), 1.0});
  const double width_floor = 8 * std::numeric_limits<double>::epsilon() * scale;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width <= width_floor || mid == lo || mid == hi) {
      if (width > rel_tol * std::max(1.0, std::abs(mid))) {
        throw NonConvergenceError(
            "eigenvalue bisection stalled above the requested tolerance");
      }
      return mid;
    }
    if (sturm_count(s.d, s.e2, mid) <= idx) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NonConvergenceError("eigenvalue bisection hit the iteration cap (tolerance too tight)");
}

double round_to_int(double x) { return std::nearbyint(x); }

}  // namespace

std::vector<double> eigenvalues(const Tridiagonal& tri, double rel_tol, int max_iter) {
  const int n = tri.order();
  if (n == 0) return {};
  if (n == 1) return {tri.diag[0]};
  const SymmetrizedTridiag s = symmetrize(tri);
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(n - 1 - i)] = bisect_eigenvalue(s, i, rel_tol, max_iter);
  }
  return out;
}

double largest_eigenvalue(const Tridiagonal& tri, double rel_tol) {
  const int n = tri.order();
  if (n == 0) throw PreconditionError("empty matrix");
  if (n == 1) return tri.diag[0];
  return bisect_eigenvalue(symmetrize(tri), n - 1, rel_tol, 200);
}

StandardSequence standard_sequence(const IntersectionArray& arr, double theta) {
  const int D = arr.diameter();
  const double k = static_cast<double>(arr.valency());
  StandardSequence seq;
  seq.theta = theta;
  seq.u.resize(static_cast<size_t>(D) + 1);
  seq.u[0] = 1.0;
  if (D >= 1) seq.u[1] = theta / k;
  for (int i = 1; i <= D - 1; ++i) {
    const double ci = static_cast<double>(arr.c_at(i));
    const double ai = static_cast<double>(arr.a_at(i));
    const double bi = static_cast<double>(arr.b_at(i));
    seq.u[static_cast<size_t>(i + 1)] =
        ((theta - ai) * seq.u[static_cast<size_t>(i)] - ci * seq.u[static_cast<size_t>(i - 1)]) /
        bi;
  }
  return seq;
}

double biggs_multiplicity(const IntersectionArray& arr, double theta) {
  const DerivedParameters dp = derive(arr);
  const StandardSequence seq = standard_sequence(arr, theta);
  double denom = 0;
  for (int i = 0; i <= arr.diameter(); ++i) {
    const double u = seq.u[static_cast<size_t>(i)];
    denom += static_cast<double>(dp.k_seq[static_cast<size_t>(i)]) * u * u;
  }
  return static_cast<double>(dp.v) / denom;
}

SpectrumOutcome spectrum_checked(const IntersectionArray& arr, const SpectralOptions& opt) {
  const int D = arr.diameter();
  const DerivedParameters dp = derive(arr);

  Spectrum sp;
  sp.theta = eigenvalues(quotient_matrix(arr), opt.eig_rel_tol, opt.max_bisect_iter);
  sp.mu.resize(static_cast<size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) {
    sp.mu[static_cast<size_t>(i)] =
        largest_eigenvalue(quotient_truncation(arr, i), opt.eig_rel_tol);
  }
  sp.m_raw.resize(static_cast<size_t>(D) + 1);
  sp.m.resize(static_cast<size_t>(D) + 1);
  sp.integer_theta.resize(static_cast<size_t>(D) + 1);
  int64_t msum = 0;
  for (int j = 0; j <= D; ++j) {
    const double theta = sp.theta[static_cast<size_t>(j)];
    sp.sequences.push_back(standard_sequence(arr, theta));
    double denom = 0;
    for (int i = 0; i <= D; ++i) {
      const double u = sp.sequences.back().u[static_cast<size_t>(i)];
      denom += static_cast<double>(dp.k_seq[static_cast<size_t>(i)]) * u * u;
    }
    const double m = static_cast<double>(dp.v) / denom;
    sp.m_raw[static_cast<size_t>(j)] = m;
    const double rounded = round_to_int(m);
    sp.integer_theta[static_cast<size_t>(j)] =
        std::abs(theta - round_to_int(theta)) <= opt.integer_annotation_tol;
    if (std::abs(m - rounded) > opt.mult_int_tol) {
      return {std::move(sp),
              SpectrumIssue{SpectrumIssueKind::NonIntegralMultiplicity, j,
                            "multiplicity m_" + std::to_string(j) + " = " + std::to_string(m) +
                                " is not integral"}};
    }
    if (rounded < 1) {
      return {std::move(sp),
              SpectrumIssue{SpectrumIssueKind::NonPositiveMultiplicity, j,
                            "multiplicity m_" + std::to_string(j) + " = " + std::to_string(m) +
                                " is not positive"}};
    }
    sp.m[static_cast<size_t>(j)] = static_cast<int64_t>(rounded);
    msum += sp.m[static_cast<size_t>(j)];
  }
  if (msum != dp.v) {
    return {std::move(sp),
            SpectrumIssue{SpectrumIssueKind::MultiplicitySumMismatch, -1,
                          "sum of multiplicities " + std::to_string(msum) + " != v = " +
                              std::to_string(dp.v)}};
  }
  return {std::move(sp), std::nullopt};
}

Spectrum spectrum(const IntersectionArray& arr, const SpectralOptions& opt) {
  SpectrumOutcome out = spectrum_checked(arr, opt);
  if (!out.ok()) {
    throw Error("spectrum failed for " + format_array(arr) + ": " + out.issue->message);
  }
  return *std::move(out.spectrum);
}

SpectralGateResult spectral_feasibility_gate(const IntersectionArray& arr,
                                             const SpectralOptions& opt) {
  const DeriveOutcome der = derive_checked(arr);
  if (!der.ok()) throw PreconditionError("spectral gate needs a derivable array");
  const DerivedParameters& dp = *der.params;
  const int D = arr.diameter();
  const int n = D + 1;
  const SymmetrizedTridiag s = symmetrize(quotient_matrix(arr));

  SpectralGateResult res;
  int64_t msum = 1;  // theta_0 = k is the Perron value with m_0 = 1 exactly
  for (int j = 1; j <= D; ++j) {
    const double theta = bisect_eigenvalue(s, n - 1 - j, opt.eig_rel_tol, opt.max_bisect_iter);
    const StandardSequence seq = standard_sequence(arr, theta);
    double denom = 0;
    for (int i = 0; i <= D; ++i) {
      const double u = seq.u[static_cast<size_t>(i)];
      denom += static_cast<double>(dp.k_seq[static_cast<size_t>(i)]) * u * u;
    }
    const double m = static_cast<double>(dp.v) / denom;
    const double rounded = round_to_int(m);
    if (std::abs(m - rounded) > opt.mult_int_tol) {
      res.issue = SpectrumIssue{SpectrumIssueKind::NonIntegralMultiplicity, j,
                                "multiplicity m_" + std::to_string(j) + " = " +
                                    std::to_string(m) + " is not integral"};
      return res;
    }
    if (rounded < 1) {
      res.issue = SpectrumIssue{SpectrumIssueKind::NonPositiveMultiplicity, j,
                                "multiplicity m_" + std::to_string(j) + " = " +
                                    std::to_string(m) + " is not positive"};
      return res;
    }
    if (j == 1) res.m1 = static_cast<int64_t>(rounded);
    msum += static_cast<int64_t>(rounded);
  }
  if (msum != dp.v) {
    res.issue = SpectrumIssue{SpectrumIssueKind::MultiplicitySumMismatch, -1,
                              "sum of multiplicities " + std::to_string(msum) + " != v = " +
                                  std::to_string(dp.v)};
  }
  return res;
}

Theta1BoundResult theta1_lower_bound_check(const IntersectionArray& arr, int t,
                                           const SpectralOptions& opt) {
  const int D = arr.diameter();
  if (t < 0 || D < 2 * t + 2) {
    throw PreconditionError("theta1 lower bound requires D >= 2t+2, got D = " +
                            std::to_string(D) + ", t = " + std::to_string(t));
  }
  Theta1BoundResult res;
  const std::vector<double> theta = eigenvalues(quotient_matrix(arr), opt.eig_rel_tol);
  res.theta1 = theta[1];
  res.mu_t = largest_eigenvalue(quotient_truncation(arr, t), opt.eig_rel_tol);
  const double scale = static_cast<double>(arr.valency());
  res.equality = std::abs(res.theta1 - res.mu_t) <= opt.equality_tol * scale;
  res.antipodal_signature = (D == 2 * t + 2) && (arr.c_at(D) == arr.valency()) &&
                            (arr.b_at(D - 1) == 1) && (arr.a_at(1) == arr.a_at(D - 1));
  return res;
}

bool interlacing_check(const Tridiagonal& big, const Tridiagonal& small, double tol) {
  const int n = big.order();
  const int m = small.order();
  if (m > n || m == 0) throw PreconditionError("truncation order must be in [1, n]");
  for (int i = 0; i < m; ++i) {
    if (big.diag[static_cast<size_t>(i)] != small.diag[static_cast<size_t>(i)]) {
      throw PreconditionError("matrix is not an upper-left truncation");
    }
  }
  const std::vector<double> ta = eigenvalues(big);
  const std::vector<double> tb = eigenvalues(small);
  double scale = 1.0;
  for (double x : ta) scale = std::max(scale, std::abs(x));
  // Descending 1-based: theta_{n-m+i}(A) <= theta_i(B) <= theta_i(A).
  for (int i = 1; i <= m; ++i) {
    const double upper = ta[static_cast<size_t>(i - 1)];
    const double lower = ta[static_cast<size_t>(n - m + i - 1)];
    const double mid = tb[static_cast<size_t>(i - 1)];
    if (mid > upper + tol * scale || mid < lower - tol * scale) return false;
  }
  return true;
}

}  // namespace drg
