#include "spherepack/local_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace spherepack {

namespace {

// Detects an energy plateau over a fixed window of accepted steps.
class PlateauDetector {
 public:
  PlateauDetector(const SolverSettings& settings, double f)
      : window_(settings.stall_window), fraction_(settings.stall_relative_decrease), anchor_(f) {}

  bool stalled(double f) {
    if (window_ == 0 || ++steps_ < window_) return false;
    const bool flat = anchor_ - f <= fraction_ * anchor_;
    steps_ = 0;
    anchor_ = f;
    return flat;
  }

 private:
  std::size_t window_;
  double fraction_;
  double anchor_;
  std::size_t steps_ = 0;
};

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 64;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Limited-memory BFGS history as a ring of (s, y) pairs.
class LbfgsHistory {
 public:
  LbfgsHistory(std::size_t memory, std::size_t dim)
      : s_(memory, std::vector<double>(dim)), y_(memory, std::vector<double>(dim)),
        rho_(memory), alpha_(memory) {}

  bool empty() const { return count_ == 0; }
  void clear() { count_ = 0; }

  void push(std::span<const double> s, std::span<const double> y, double sy) {
    if (s_.empty()) return;
    const std::size_t slot = (head_ + count_) % s_.size();
    std::copy(s.begin(), s.end(), s_[slot].begin());
    std::copy(y.begin(), y.end(), y_[slot].begin());
    rho_[slot] = 1.0 / sy;
    if (count_ < s_.size()) {
      ++count_;
    } else {
      head_ = (head_ + 1) % s_.size();
    }
  }

  // direction = -H * grad via the two-loop recursion.
  void direction(std::span<const double> grad, std::span<double> out) {
    std::transform(grad.begin(), grad.end(), out.begin(), [](double g) { return -g; });
    for (std::size_t k = count_; k-- > 0;) {
      const std::size_t slot = (head_ + k) % s_.size();
      alpha_[slot] = rho_[slot] * dot(s_[slot], out);
      axpy(-alpha_[slot], y_[slot], out);
    }
    const std::size_t newest = (head_ + count_ - 1) % s_.size();
    const double gamma = 1.0 / (rho_[newest] * dot(y_[newest], y_[newest]));
    for (double& v : out) v *= gamma;
    for (std::size_t k = 0; k < count_; ++k) {
      const std::size_t slot = (head_ + k) % s_.size();
      const double beta = rho_[slot] * dot(y_[slot], out);
      axpy(alpha_[slot] - beta, s_[slot], out);
    }
  }

 private:
  static void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  }

  std::vector<std::vector<double>> s_, y_;
  std::vector<double> rho_, alpha_;
  std::size_t head_ = 0;
  std::size_t count_ = 0;
};

struct Workspace {
  explicit Workspace(std::vector<double> start)
      : x(std::move(start)), g(x.size()), trial_x(x.size()), trial_g(x.size()), dir(x.size()),
        s(x.size()), y(x.size()) {}

  std::vector<double> x, g, trial_x, trial_g, dir, s, y;
};

LocalResult finish(const Workspace& ws, double radius, double energy, std::size_t iterations,
                   SolveStatus status) {
  return {Configuration::from_flat(ws.x, radius), energy, iterations, status};
}

LocalResult solve_lbfgs(EnergyModel& model, Workspace& ws, double radius,
                        const SolverSettings& settings) {
  const std::size_t budget = settings.iteration_budget(ws.x.size() / 3);
  const double first_step = settings.initial_step * model.container().r0();
  LbfgsHistory history(settings.lbfgs_memory, ws.x.size());

  double f = model.value_and_gradient(ws.x, ws.g);
  if (f < settings.success_threshold) return finish(ws, radius, f, 0, SolveStatus::Packed);

  PlateauDetector plateau(settings, f);
  std::size_t iter = 0;
  while (iter < budget) {
    const double gnorm = norm(ws.g);
    if (gnorm < settings.stall_gradient_norm) return finish(ws, radius, f, iter, SolveStatus::Stalled);

    bool fresh = history.empty();
    if (!fresh) history.direction(ws.g, ws.dir);
    double slope = fresh ? 0.0 : dot(ws.g, ws.dir);
    if (fresh || !(slope < 0.0)) {
      history.clear();
      fresh = true;
      std::transform(ws.g.begin(), ws.g.end(), ws.dir.begin(), [](double v) { return -v; });
      slope = -gnorm * gnorm;
    }

    const double dnorm = norm(ws.dir);
    double step = fresh ? std::min(1.0, first_step / dnorm) : 1.0;
    double trial_f = f;
    bool accepted = false;
    for (int k = 0; k < kMaxBacktracks; ++k) {
      for (std::size_t i = 0; i < ws.x.size(); ++i) ws.trial_x[i] = ws.x[i] + step * ws.dir[i];
      trial_f = model.value_and_gradient(ws.trial_x, ws.trial_g);
      if (trial_f <= f + kArmijo * step * slope && trial_f <= f) {
        accepted = true;
        break;
      }
      step *= settings.step_shrink;
    }
    if (!accepted) {
      // A quasi-Newton direction may fail where the plain gradient would not.
      if (!fresh) {
        history.clear();
        continue;
      }
      return finish(ws, radius, f, iter, SolveStatus::Stalled);
    }

    for (std::size_t i = 0; i < ws.x.size(); ++i) {
      ws.s[i] = ws.trial_x[i] - ws.x[i];
      ws.y[i] = ws.trial_g[i] - ws.g[i];
    }
    const double sy = dot(ws.s, ws.y);
    if (sy > 1e-10 * norm(ws.s) * norm(ws.y)) history.push(ws.s, ws.y, sy);

    ws.x.swap(ws.trial_x);
    ws.g.swap(ws.trial_g);
    f = trial_f;
    ++iter;
    if (f < settings.success_threshold) return finish(ws, radius, f, iter, SolveStatus::Packed);
    if (plateau.stalled(f)) return finish(ws, radius, f, iter, SolveStatus::Stalled);
  }
  return finish(ws, radius, f, iter, SolveStatus::IterationLimit);
}

LocalResult solve_steepest(EnergyModel& model, Workspace& ws, double radius,
                           const SolverSettings& settings) {
  const std::size_t budget = settings.iteration_budget(ws.x.size() / 3);
  double f = model.value_and_gradient(ws.x, ws.g);
  if (f < settings.success_threshold) return finish(ws, radius, f, 0, SolveStatus::Packed);

  double gnorm = norm(ws.g);
  double step = settings.initial_step * model.container().r0() / std::max(gnorm, 1e-300);
  PlateauDetector plateau(settings, f);
  std::size_t iter = 0;
  while (iter < budget) {
    if (gnorm < settings.stall_gradient_norm) return finish(ws, radius, f, iter, SolveStatus::Stalled);
    bool moved = false;
    for (std::size_t i = 0; i < ws.x.size(); ++i) {
      ws.trial_x[i] = ws.x[i] - step * ws.g[i];
      moved = moved || ws.trial_x[i] != ws.x[i];
    }
    if (!moved) return finish(ws, radius, f, iter, SolveStatus::Stalled);
    ++iter;
    const double trial_f = model.value_and_gradient(ws.trial_x, ws.trial_g);
    if (trial_f < f) {
      ws.x.swap(ws.trial_x);
      ws.g.swap(ws.trial_g);
      f = trial_f;
      gnorm = norm(ws.g);
      step *= settings.step_grow;
      if (f < settings.success_threshold) return finish(ws, radius, f, iter, SolveStatus::Packed);
      if (plateau.stalled(f)) return finish(ws, radius, f, iter, SolveStatus::Stalled);
    } else {
      step *= settings.step_shrink;
    }
  }
  return finish(ws, radius, f, iter, SolveStatus::IterationLimit);
}

}  // namespace

void SolverSettings::validate() const {
  if (!(success_threshold > 0.0)) throw ParameterError("success_threshold must be positive");
  if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw ParameterError("step_shrink must lie in (0, 1)");
  if (!(step_grow > 1.0)) throw ParameterError("step_grow must exceed 1");
  if (!(initial_step > 0.0)) throw ParameterError("initial_step must be positive");
  if (!(stall_gradient_norm >= 0.0)) throw ParameterError("stall_gradient_norm must be nonnegative");
  if (!(stall_relative_decrease >= 0.0 && stall_relative_decrease < 1.0)) {
    throw ParameterError("stall_relative_decrease must lie in [0, 1)");
  }
  if (max_iterations == 0) throw ParameterError("max_iterations must be positive");
  if (stall_window == 0) throw ParameterError("stall_window must be positive");
  if (method == DescentMethod::Lbfgs && lbfgs_memory == 0) throw ParameterError("lbfgs_memory must be positive");
}

std::size_t SolverSettings::iteration_budget(std::size_t n) const {
  return std::max(max_iterations, max_iterations / 10 * n);
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Packed: return "packed";
    case SolveStatus::Stalled: return "stalled";
    case SolveStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

std::string_view to_string(DescentMethod method) {
  return method == DescentMethod::Lbfgs ? "lbfgs" : "steepest-descent";
}

LocalResult a0_solve(const Configuration& config, const Container& container,
                     const SolverSettings& settings) {
  settings.validate();
  EnergyModel model(container, config.radius());
  Workspace ws(config.flat());
  if (settings.method == DescentMethod::SteepestDescent) {
    return solve_steepest(model, ws, config.radius(), settings);
  }
  return solve_lbfgs(model, ws, config.radius(), settings);
}

}  // namespace spherepack
