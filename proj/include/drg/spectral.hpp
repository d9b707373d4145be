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

#ifndef DRG_SPECTRAL_HPP
#define DRG_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "drg/intersection_array.hpp"

namespace drg {

/// Tridiagonal matrix with diag a_0..a_{n-1}, superdiagonal b_0..b_{n-2} and
/// subdiagonal c_1..c_{n-1}. Built from intersection arrays, so all
/// off-diagonal entries are strictly positive.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> sub;

  int order() const { return static_cast<int>(diag.size()); }
};

/// L_Gamma: the full (D+1)x(D+1) quotient matrix of the array.
Tridiagonal quotient_matrix(const IntersectionArray& arr);

/// L_Gamma(i): the upper-left (i+1)x(i+1) truncation, 0 <= i <= D.
Tridiagonal quotient_truncation(const IntersectionArray& arr, int i);

struct SpectralOptions {
  double eig_rel_tol = 1e-12;        // per-eigenvalue relative tolerance
  double mult_int_tol = 1e-6;        // absolute integrality tolerance on m_i
  double equality_tol = 1e-9;        // scaled by k for theta1 == mu_t verdicts
  double integer_annotation_tol = 1e-8;
  int max_bisect_iter = 200;
};

/// All eigenvalues of a tridiagonal matrix with positive off-diagonal
/// products, in strictly descending order. Deterministic (Sturm-sequence
/// bisection after diagonal symmetrization). Throws NonConvergenceError if
/// the iteration cap is hit before reaching rel_tol.
std::vector<double> eigenvalues(const Tridiagonal& tri, double rel_tol = 1e-12,
                                int max_iter = 200);

/// Largest eigenvalue only.
double largest_eigenvalue(const Tridiagonal& tri, double rel_tol = 1e-12);

struct StandardSequence {
  double theta = 0;
  std::vector<double> u;  // u_0..u_D
};

/// u_0 = 1, u_1 = theta/k, extended by c_i u_{i-1} + a_i u_i + b_i u_{i+1}
/// = theta u_i.
StandardSequence standard_sequence(const IntersectionArray& arr, double theta);

/// v / sum_i k_i u_i(theta)^2.
double biggs_multiplicity(const IntersectionArray& arr, double theta);

struct Spectrum {
  std::vector<double> theta;        // descending, size D+1
  std::vector<double> m_raw;        // Biggs multiplicities before rounding
  std::vector<int64_t> m;           // rounded multiplicities
  std::vector<double> mu;           // mu_0..mu_D, largest eigenvalue of L(i)
  std::vector<StandardSequence> sequences;
  std::vector<bool> integer_theta;  // annotation: theta_i within 1e-8 of an integer
};

enum class SpectrumIssueKind { NonIntegralMultiplicity, NonPositiveMultiplicity,
                               MultiplicitySumMismatch };

struct SpectrumIssue {
  SpectrumIssueKind kind;
  int index;  // offending eigenvalue index, or -1
  std::string message;
};

struct SpectrumOutcome {
  std::optional<Spectrum> spectrum;
  std::optional<SpectrumIssue> issue;
  bool ok() const { return spectrum.has_value() && !issue.has_value(); }
};

/// Computes eigenvalues, standard sequences, Biggs multiplicities and the mu
/// sequence; validates multiplicity integrality/positivity and sum = v.
SpectrumOutcome spectrum_checked(const IntersectionArray& arr, const SpectralOptions& opt = {});

/// Hot-path variant of the spectrum validation: identical accept/reject
/// decisions, but eigenvalues are bisected one at a time and the check bails
/// at the first failing multiplicity, skipping the mu sequence entirely.
struct SpectralGateResult {
  std::optional<SpectrumIssue> issue;
  int64_t m1 = -1;  // valid when issue is empty and D >= 1
  bool ok() const { return !issue.has_value(); }
};

SpectralGateResult spectral_feasibility_gate(const IntersectionArray& arr,
                                             const SpectralOptions& opt = {});

/// Throwing wrapper around spectrum_checked.
Spectrum spectrum(const IntersectionArray& arr, const SpectralOptions& opt = {});

struct Theta1BoundResult {
  double theta1 = 0;
  double mu_t = 0;
  bool equality = false;
  bool antipodal_signature = false;  // D = 2t+2, c_D = k, b_{D-1} = 1, a_1 = a_{D-1}
};

/// theta_1 >= mu_t for D >= 2t+2 (t >= 0). Equality verdict within
/// opt.equality_tol * k, in which case the antipodal signature is reported.
/// Throws PreconditionError when D < 2t+2.
Theta1BoundResult theta1_lower_bound_check(const IntersectionArray& arr, int t,
                                           const SpectralOptions& opt = {});

/// Eigenvalue interlacing between a matrix and its upper-left truncation:
/// theta_{n-m+i}(A) <= theta_i(B) <= theta_i(A).
bool interlacing_check(const Tridiagonal& big, const Tridiagonal& small, double tol = 1e-9);

}  // namespace drg

#endif  // DRG_SPECTRAL_HPP
