#ifndef RR_RIEMANN_HPP
#define RR_RIEMANN_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rr/core.hpp"

namespace rr {

// A function Z^n -> Z that vanishes for deg(d) <= zero_threshold and equals
// deg(d) + offset for deg(d) >= linear_threshold. The evaluator is trusted
// only on sampled windows; see verify_axioms.
class RiemannFunction {
 public:
  using Evaluator = std::function<Int(const Point&)>;

  RiemannFunction(Eigen::Index arity, Int offset, Int zero_threshold, Int linear_threshold,
                  Evaluator eval, std::optional<Int> period = std::nullopt);

  Int operator()(const Point& d) const;
  Int operator()(Int a1, Int a2) const;

  Eigen::Index arity() const { return arity_; }
  Int offset() const { return offset_; }
  Int zero_threshold() const { return zero_threshold_; }
  Int linear_threshold() const { return linear_threshold_; }
  const std::optional<Int>& period() const { return period_; }

  RiemannFunction with_period(std::optional<Int> p) const;
  RiemannFunction with_evaluator(Evaluator eval) const;

 private:
  Eigen::Index arity_;
  Int offset_;
  Int zero_threshold_;
  Int linear_threshold_;
  Evaluator eval_;
  std::optional<Int> period_;
};

// Values between the thresholds. With a period, keys are reduced so that the
// first n-1 coordinates lie in [0, p).
RiemannFunction table_function(Eigen::Index n, Int offset, Int zero_threshold, Int linear_threshold,
                               const std::map<std::vector<Int>, Int>& entries,
                               std::optional<Int> period = std::nullopt);

// f_1 + ... + f_s - (g_1 + ... + g_{s-1}).
RiemannFunction alternating_sum(const std::vector<RiemannFunction>& plus,
                                const std::vector<RiemannFunction>& minus);

// max(0, deg(d) - b + 1) on Z^n.
RiemannFunction shifted_degree_function(Eigen::Index n, Int b = 1);

Point reduce_mod_period(const Point& d, Int p);

Int mobius_weight(const RiemannFunction& f, const Point& d);

RiemannFunction dual_function(const RiemannFunction& f, const Point& K);

RiemannFunction restrict_two(const RiemannFunction& f, Eigen::Index i, Eigen::Index j,
                             const Point& base);

// Sum of the weight of an arity-2 f over the finite triangle below d.
Int triangle_sum(const RiemannFunction& f2, const Point2& d);

struct Violation {
  enum class Kind { InitialZero, EventualLinear, Periodicity, Weight };
  Kind kind;
  Point at;
  Int expected;
  Int actual;
};

const char* violation_name(Violation::Kind k);

struct AxiomReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

AxiomReport verify_axioms(const RiemannFunction& f, const Window& w);

// Degree band [a-2, b+2] widened by 2 per coordinate, as a box.
Window default_window(const RiemannFunction& f);

bool is_slowly_growing(const RiemannFunction& f, const Window& w);

bool is_invariant_under(const RiemannFunction& f, const Point& t, const Window& w);

// Smallest p in [1, p_max] with f invariant under p(e_i - e_j) on w.
std::optional<Int> detect_period(const RiemannFunction& f, const Window& w, Int p_max = 24);

// For an arity-2 slowly growing f, checks on the interior of w that the
// weight lies in {-1,0,1} and matches the neighbour characterization.
AxiomReport slowly_growing_weight_check(const RiemannFunction& f2, const Window& w);

}  // namespace rr

#endif
