// Copyright 2026 The edgeqaoa Authors
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

#ifndef EDGEQAOA_OPTIMIZE_H_
#define EDGEQAOA_OPTIMIZE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace edgeqaoa {

/// Derivative-free methods. Only Nelder-Mead, DIRECT and random search are
/// built; the rest are accepted by name and rejected by minimize().
enum class Method {
  kNelderMead,
  kDirect,
  kRandom,
  kSubplex,
  kBobyqa,
  kCobyla,
  kPraxis,
  kMlsl,
  kIsres,
};

std::string_view to_string(Method method);
Method parse_method(std::string_view name);
bool is_implemented(Method method);

/// Axis-aligned box, lower < upper in every coordinate.
struct SearchBox {
  std::vector<double> lower;
  std::vector<double> upper;

  /// [0, 2pi] in each of `dims` coordinates.
  static SearchBox angles(std::size_t dims);

  std::size_t dims() const { return lower.size(); }
  void validate() const;
  bool contains(std::span<const double> x) const;
  void clamp(std::span<double> x) const;
};

/// Evaluation cap S * p * V unless overridden.
struct OptimizerBudget {
  uint64_t scaling = 200;
  int depth = 1;
  int graph_size = 1;
  std::optional<uint64_t> max_override;

  uint64_t max_evaluations() const;
};

struct Tolerances {
  double x_tol = 1e-4;
  double f_tol = 1e-6;
};

enum class Termination { kBudget, kXTol, kFTol };
std::string_view to_string(Termination reason);

struct MinimizeResult {
  std::vector<double> best_x;
  double best_f = 0.0;
  uint64_t evaluations = 0;
  Termination reason = Termination::kBudget;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimises `objective` over `box`, starting at x0 (always the first point
/// evaluated). `evaluations` counts objective calls exactly and never exceeds
/// the budget. `seed` only matters for the random method.
MinimizeResult minimize(const Objective& objective, std::span<const double> x0, const SearchBox& box,
                        const OptimizerBudget& budget, Method method, const Tolerances& tol = {},
                        uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Nelder-Mead internals, exposed for testing.

struct Simplex {
  std::vector<std::vector<double>> points;  // n + 1 points of dimension n
  std::vector<double> values;

  /// Sorts points by value, best first. Stable, so ties keep their order.
  void sort();
  /// Largest infinity-norm distance from the best point.
  double spread_x() const;
  /// Worst value minus best value.
  double spread_f() const;
  /// True when the edge vectors are (numerically) linearly dependent.
  bool degenerate() const;
};

enum class SimplexMove { kReflect, kExpand, kContractOutside, kContractInside, kShrink };

/// One iteration with coefficients reflect 1, expand 2, contract 1/2,
/// shrink 1/2. Proposals are clamped into the box. Leaves the simplex sorted.
SimplexMove nelder_mead_step(Simplex& simplex, const SearchBox& box, const Objective& f);

/// x0 plus a step of 0.1 * (upper - lower) along each axis, flipped inward
/// when it would leave the box.
Simplex initial_simplex(std::span<const double> x0, const SearchBox& box, const Objective& f);

// ---------------------------------------------------------------------------
// DIRECT internals, exposed for testing.

struct Rectangle {
  std::vector<double> center;  // original coordinates
  std::vector<int> levels;     // side along axis i is 3^-levels[i] of the box width
  double value = 0.0;

  /// Half-diagonal in unit-cube coordinates.
  double size() const;
  /// Volume as a fraction of the box volume.
  double volume_fraction() const;
};

struct DirectState {
  std::vector<Rectangle> rectangles;

  /// The whole box as a single rectangle, evaluated at its center.
  static DirectState start(const SearchBox& box, const Objective& f);

  double best_value() const;
  double value_spread() const;
};

/// Indices of potentially optimal rectangles: lower-right convex hull of
/// (size, value) with the usual epsilon = 1e-4 sufficient-decrease test.
std::vector<std::size_t> potentially_optimal(const DirectState& state);

/// Trisects every potentially optimal rectangle along its longest side
/// (lowest axis index on ties). Returns the selected indices.
std::vector<std::size_t> direct_step(DirectState& state, const SearchBox& box, const Objective& f);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_OPTIMIZE_H_
