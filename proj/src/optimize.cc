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

#include "edgeqaoa/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "edgeqaoa/rng.h"

namespace edgeqaoa {

namespace {

struct MethodName {
  Method method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {Method::kNelderMead, "nelder_mead"}, {Method::kDirect, "direct"}, {Method::kRandom, "random"},
    {Method::kSubplex, "subplex"},        {Method::kBobyqa, "bobyqa"}, {Method::kCobyla, "cobyla"},
    {Method::kPraxis, "praxis"},          {Method::kMlsl, "mlsl"},     {Method::kIsres, "isres"},
};

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& entry : kMethodNames) {
    if (entry.method == method) return entry.name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& entry : kMethodNames) {
    if (entry.name == name) return entry.method;
  }
  throw std::invalid_argument(fmt::format("unknown optimisation method '{}'", name));
}

bool is_implemented(Method method) {
  return method == Method::kNelderMead || method == Method::kDirect || method == Method::kRandom;
}

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::kBudget: return "budget";
    case Termination::kXTol: return "x_tol";
    case Termination::kFTol: return "f_tol";
  }
  return "unknown";
}

SearchBox SearchBox::angles(std::size_t dims) {
  return {std::vector<double>(dims, 0.0), std::vector<double>(dims, 2.0 * std::numbers::pi)};
}

void SearchBox::validate() const {
  if (lower.empty() || lower.size() != upper.size()) {
    throw std::invalid_argument("SearchBox: bounds must be non-empty and equally sized");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument(fmt::format("SearchBox: lower >= upper in coordinate {}", i));
    }
  }
}

bool SearchBox::contains(std::span<const double> x) const {
  if (x.size() != dims()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] && x[i] <= upper[i])) return false;
  }
  return true;
}

void SearchBox::clamp(std::span<double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
}

uint64_t OptimizerBudget::max_evaluations() const {
  if (max_override) return std::max<uint64_t>(*max_override, 1);
  uint64_t total = scaling * static_cast<uint64_t>(std::max(depth, 1)) *
                   static_cast<uint64_t>(std::max(graph_size, 1));
  return std::max<uint64_t>(total, 1);
}

// ---------------------------------------------------------------------------
// Nelder-Mead

void Simplex::sort() {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::vector<double>> p;
  std::vector<double> v;
  for (std::size_t i : order) {
    p.push_back(std::move(points[i]));
    v.push_back(values[i]);
  }
  points = std::move(p);
  values = std::move(v);
}

double Simplex::spread_x() const {
  double spread = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t d = 0; d < points[i].size(); ++d) {
      spread = std::max(spread, std::abs(points[i][d] - points[0][d]));
    }
  }
  return spread;
}

double Simplex::spread_f() const {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

bool Simplex::degenerate() const {
  // Modified Gram-Schmidt on the edge vectors from point 0.
  const std::size_t n = points.size() - 1;
  std::vector<std::vector<double>> basis;
  double longest = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<double> e(points[i].size());
    for (std::size_t d = 0; d < e.size(); ++d) e[d] = points[i][d] - points[0][d];
    longest = std::max(longest, std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0)));
    for (const auto& b : basis) {
      double dot = std::inner_product(e.begin(), e.end(), b.begin(), 0.0);
      for (std::size_t d = 0; d < e.size(); ++d) e[d] -= dot * b[d];
    }
    double len = std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0));
    if (len <= 1e-10 * longest || len == 0.0) return true;
    for (double& x : e) x /= len;
    basis.push_back(std::move(e));
  }
  return false;
}

namespace {

std::vector<double> along(const std::vector<double>& from, const std::vector<double>& to, double t,
                          const SearchBox& box) {
  // from + t * (to - from), clamped.
  std::vector<double> out(from.size());
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = from[d] + t * (to[d] - from[d]);
  box.clamp(out);
  return out;
}

Simplex simplex_around(std::span<const double> x0, double fraction, const SearchBox& box,
                       const Objective& f, std::optional<double> known_value) {
  const std::size_t n = x0.size();
  Simplex s;
  s.points.emplace_back(x0.begin(), x0.end());
  s.values.push_back(known_value ? *known_value : f(x0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> p(x0.begin(), x0.end());
    double step = fraction * (box.upper[i] - box.lower[i]);
    if (p[i] + step > box.upper[i]) step = -step;
    p[i] += step;
    box.clamp(p);
    s.values.push_back(f(p));
    s.points.push_back(std::move(p));
  }
  s.sort();
  return s;
}

}  // namespace

Simplex initial_simplex(std::span<const double> x0, const SearchBox& box, const Objective& f) {
  return simplex_around(x0, 0.1, box, f, std::nullopt);
}

SimplexMove nelder_mead_step(Simplex& s, const SearchBox& box, const Objective& f) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  s.sort();
  const std::size_t n = s.points.size() - 1;
  const std::size_t dims = s.points[0].size();

  std::vector<double> centroid(dims, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dims; ++d) centroid[d] += s.points[i][d] / static_cast<double>(n);
  }
  const std::vector<double>& worst = s.points[n];
  const double f_best = s.values[0], f_second_worst = s.values[n - 1], f_worst = s.values[n];

  auto replace_worst = [&](std::vector<double> x, double fx) {
    s.points[n] = std::move(x);
    s.values[n] = fx;
  };

  std::vector<double> reflected = along(centroid, worst, -kReflect, box);
  const double f_reflected = f(reflected);
  SimplexMove move;
  if (f_reflected < f_best) {
    std::vector<double> expanded = along(centroid, worst, -kReflect * kExpand, box);
    const double f_expanded = f(expanded);
    if (f_expanded < f_reflected) {
      replace_worst(std::move(expanded), f_expanded);
      move = SimplexMove::kExpand;
    } else {
      replace_worst(std::move(reflected), f_reflected);
      move = SimplexMove::kReflect;
    }
  } else if (f_reflected < f_second_worst) {
    replace_worst(std::move(reflected), f_reflected);
    move = SimplexMove::kReflect;
  } else {
    const bool outside = f_reflected < f_worst;
    std::vector<double> contracted =
        outside ? along(centroid, reflected, kContract, box) : along(centroid, worst, kContract, box);
    const double f_contracted = f(contracted);
    if (outside ? f_contracted <= f_reflected : f_contracted < f_worst) {
      replace_worst(std::move(contracted), f_contracted);
      move = outside ? SimplexMove::kContractOutside : SimplexMove::kContractInside;
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        s.points[i] = along(s.points[0], s.points[i], kShrink, box);
        s.values[i] = f(s.points[i]);
      }
      move = SimplexMove::kShrink;
    }
  }
  s.sort();
  return move;
}

// ---------------------------------------------------------------------------
// DIRECT

double Rectangle::size() const {
  double sum = 0.0;
  for (int level : levels) sum += std::pow(9.0, -level);
  return 0.5 * std::sqrt(sum);
}

double Rectangle::volume_fraction() const {
  int total = std::accumulate(levels.begin(), levels.end(), 0);
  return std::pow(3.0, -total);
}

DirectState DirectState::start(const SearchBox& box, const Objective& f) {
  box.validate();
  Rectangle r;
  r.center.resize(box.dims());
  for (std::size_t i = 0; i < box.dims(); ++i) r.center[i] = 0.5 * (box.lower[i] + box.upper[i]);
  r.levels.assign(box.dims(), 0);
  r.value = f(r.center);
  DirectState state;
  state.rectangles.push_back(std::move(r));
  return state;
}

double DirectState::best_value() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rectangles) best = std::min(best, r.value);
  return best;
}

double DirectState::value_spread() const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& r : rectangles) {
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }
  return hi - lo;
}

std::vector<std::size_t> potentially_optimal(const DirectState& state) {
  constexpr double kEpsilon = 1e-4;
  // One candidate per size class: the lowest value, earliest index on ties.
  // Size classes are keyed by the sorted level multiset so equal shapes match
  // exactly.
  std::map<std::vector<int>, std::size_t> best_of_class;
  for (std::size_t i = 0; i < state.rectangles.size(); ++i) {
    std::vector<int> key = state.rectangles[i].levels;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = best_of_class.emplace(std::move(key), i);
    if (!inserted && state.rectangles[i].value < state.rectangles[it->second].value) it->second = i;
  }
  struct Candidate {
    double size;
    double value;
    std::size_t index;
  };
  std::vector<Candidate> cands;
  for (const auto& [key, i] : best_of_class) {
    cands.push_back({state.rectangles[i].size(), state.rectangles[i].value, i});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.size < b.size; });
  const double f_min = state.best_value();

  std::vector<std::size_t> selected;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    double k_low = 0.0;
    double k_high = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands[i].size < cands[j].size) {
        k_low = std::max(k_low, (cands[j].value - cands[i].value) / (cands[j].size - cands[i].size));
      } else if (cands[i].size > cands[j].size) {
        k_high = std::min(k_high, (cands[i].value - cands[j].value) / (cands[i].size - cands[j].size));
      }
    }
    if (k_low > k_high || k_high <= 0.0) continue;
    if (std::isfinite(k_high) &&
        cands[j].value - k_high * cands[j].size > f_min - kEpsilon * std::abs(f_min)) {
      continue;
    }
    selected.push_back(cands[j].index);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<std::size_t> direct_step(DirectState& state, const SearchBox& box, const Objective& f) {
  std::vector<std::size_t> selected = potentially_optimal(state);
  for (std::size_t idx : selected) {
    const Rectangle& parent = state.rectangles[idx];
    const auto axis = static_cast<std::size_t>(
        std::min_element(parent.levels.begin(), parent.levels.end()) - parent.levels.begin());
    const int level = parent.levels[axis] + 1;
    const double delta = (box.upper[axis] - box.lower[axis]) * std::pow(3.0, -level);

    Rectangle left = parent, right = parent;
    left.center[axis] -= delta;
    right.center[axis] += delta;
    left.value = f(left.center);
    right.value = f(right.center);

    left.levels[axis] = level;
    right.levels[axis] = level;
    state.rectangles[idx].levels[axis] = level;
    state.rectangles.push_back(std::move(left));
    state.rectangles.push_back(std::move(right));
  }
  return selected;
}

// ---------------------------------------------------------------------------
// Driver

namespace {

struct BudgetExhausted {};

// Counts calls, enforces the cap and remembers the best point seen.
class CountedObjective {
 public:
  CountedObjective(const Objective& f, uint64_t limit) : f_(f), limit_(limit) {}

  double operator()(std::span<const double> x) {
    if (count_ >= limit_) throw BudgetExhausted{};
    double v = f_(x);
    ++count_;
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    if (count_ == 1 || v < best_f_) {
      best_f_ = v;
      best_x_.assign(x.begin(), x.end());
    }
    return v;
  }

  uint64_t count() const { return count_; }
  bool exhausted() const { return count_ >= limit_; }
  const std::vector<double>& best_x() const { return best_x_; }
  double best_f() const { return best_f_; }

 private:
  const Objective& f_;
  uint64_t limit_;
  uint64_t count_ = 0;
  std::vector<double> best_x_;
  double best_f_ = std::numeric_limits<double>::infinity();
};

Termination run_nelder_mead(CountedObjective& counted, std::span<const double> x0, const SearchBox& box,
                            const Tolerances& tol) {
  Objective f = [&](std::span<const double> x) { return counted(x); };
  Simplex s = initial_simplex(x0, box, f);
  while (true) {
    if (s.spread_x() <= tol.x_tol) return Termination::kXTol;
    if (s.spread_f() <= tol.f_tol) return Termination::kFTol;
    if (counted.exhausted()) return Termination::kBudget;
    nelder_mead_step(s, box, f);
    if (s.degenerate()) {
      // Clamping can flatten the simplex onto a face; rebuild around the best.
      const double fraction = std::max(s.spread_x(), 10.0 * tol.x_tol) /
                              (box.upper[0] - box.lower[0]);
      std::vector<double> best = s.points[0];
      s = simplex_around(best, fraction, box, f, s.values[0]);
    }
  }
}

bool every_axis_split(const DirectState& state) {
  for (const auto& r : state.rectangles) {
    if (*std::min_element(r.levels.begin(), r.levels.end()) == 0) return false;
  }
  return true;
}

Termination run_direct(CountedObjective& counted, const SearchBox& box, const Tolerances& tol) {
  Objective f = [&](std::span<const double> x) { return counted(x); };
  DirectState state = DirectState::start(box, f);
  while (true) {
    if (counted.exhausted()) return Termination::kBudget;
    std::vector<std::size_t> selected = direct_step(state, box, f);
    double largest_side = 0.0;
    for (std::size_t idx : selected) {
      const Rectangle& r = state.rectangles[idx];
      for (std::size_t d = 0; d < r.levels.size(); ++d) {
        largest_side = std::max(largest_side, (box.upper[d] - box.lower[d]) * std::pow(3.0, -r.levels[d]));
      }
    }
    if (largest_side <= tol.x_tol) return Termination::kXTol;
    // Symmetric objectives can agree on a coarse lattice; only trust the spread
    // once the whole box has been divided along every axis.
    if (every_axis_split(state) && state.value_spread() <= tol.f_tol) return Termination::kFTol;
  }
}

Termination run_random(CountedObjective& counted, const SearchBox& box, uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> x(box.dims());
  while (true) {
    for (std::size_t d = 0; d < x.size(); ++d) {
      x[d] = box.lower[d] + rng.uniform() * (box.upper[d] - box.lower[d]);
    }
    counted(x);
  }
}

}  // namespace

MinimizeResult minimize(const Objective& objective, std::span<const double> x0, const SearchBox& box,
                        const OptimizerBudget& budget, Method method, const Tolerances& tol,
                        uint64_t seed) {
  box.validate();
  if (!box.contains(x0)) throw std::invalid_argument("minimize: x0 is outside the search box");
  if (!is_implemented(method)) {
    throw std::invalid_argument(fmt::format("optimisation method '{}' is not available", to_string(method)));
  }
  CountedObjective counted(objective, budget.max_evaluations());
  Termination reason = Termination::kBudget;
  try {
    switch (method) {
      case Method::kNelderMead:
        reason = run_nelder_mead(counted, x0, box, tol);
        break;
      case Method::kDirect:
        counted(x0);
        reason = run_direct(counted, box, tol);
        break;
      case Method::kRandom:
        counted(x0);
        reason = run_random(counted, box, seed);
        break;
      default:
        break;
    }
  } catch (const BudgetExhausted&) {
    reason = Termination::kBudget;
  }
  return {counted.best_x(), counted.best_f(), counted.count(), reason};
}

}  // namespace edgeqaoa
