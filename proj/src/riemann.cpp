#include "rr/riemann.hpp"

#include <utility>

namespace rr {

RiemannFunction::RiemannFunction(Eigen::Index arity, Int offset, Int zero_threshold,
                                 Int linear_threshold, Evaluator eval, std::optional<Int> period)
    : arity_(arity),
      offset_(offset),
      zero_threshold_(zero_threshold),
      linear_threshold_(linear_threshold),
      eval_(std::move(eval)),
      period_(period) {
  if (arity_ < 1) throw Error(Errc::InvalidInput, "arity must be positive");
  if (zero_threshold_ >= linear_threshold_)
    throw Error(Errc::InvalidInput, "zero_threshold must be below linear_threshold");
  if (period_ && *period_ < 1) throw Error(Errc::InvalidInput, "period must be positive");
  if (!eval_) throw Error(Errc::InvalidInput, "missing evaluator");
}

Int RiemannFunction::operator()(const Point& d) const {
  if (d.size() != arity_) throw Error(Errc::ArityMismatch, "point " + to_string(d));
  return eval_(d);
}

Int RiemannFunction::operator()(Int a1, Int a2) const {
  Point d(2);
  d << a1, a2;
  return (*this)(d);
}

RiemannFunction RiemannFunction::with_period(std::optional<Int> p) const {
  return RiemannFunction(arity_, offset_, zero_threshold_, linear_threshold_, eval_, p);
}

RiemannFunction RiemannFunction::with_evaluator(Evaluator eval) const {
  return RiemannFunction(arity_, offset_, zero_threshold_, linear_threshold_, std::move(eval),
                         period_);
}

Point reduce_mod_period(const Point& d, Int p) {
  Point r = d;
  const Eigen::Index n = d.size();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    Int m = mod(r(i), p);
    r(n - 1) += r(i) - m;
    r(i) = m;
  }
  return r;
}

RiemannFunction table_function(Eigen::Index n, Int offset, Int zero_threshold, Int linear_threshold,
                               const std::map<std::vector<Int>, Int>& entries,
                               std::optional<Int> period) {
  std::map<std::vector<Int>, Int> table;
  for (const auto& [key, value] : entries) {
    if (static_cast<Eigen::Index>(key.size()) != n)
      throw Error(Errc::ArityMismatch, "table entry of wrong length");
    Point d = Eigen::Map<const Point>(key.data(), n);
    if (period) d = reduce_mod_period(d, *period);
    std::vector<Int> k(d.data(), d.data() + n);
    auto [it, inserted] = table.emplace(k, value);
    if (!inserted && it->second != value)
      throw Error(Errc::InvalidInput, "conflicting table entries at " + to_string(d));
  }
  auto eval = [table = std::move(table), offset, zero_threshold, linear_threshold,
               period](const Point& d) -> Int {
    const Int dd = deg(d);
    if (dd <= zero_threshold) return 0;
    if (dd >= linear_threshold) return dd + offset;
    Point r = period ? reduce_mod_period(d, *period) : d;
    auto it = table.find(std::vector<Int>(r.data(), r.data() + r.size()));
    if (it == table.end()) throw Error(Errc::InvalidInput, "no table entry at " + to_string(d));
    return it->second;
  };
  return RiemannFunction(n, offset, zero_threshold, linear_threshold, std::move(eval), period);
}

RiemannFunction alternating_sum(const std::vector<RiemannFunction>& plus,
                                const std::vector<RiemannFunction>& minus) {
  if (plus.size() != minus.size() + 1)
    throw Error(Errc::InvalidInput, "alternating sum needs one more plus term than minus terms");
  const Eigen::Index n = plus.front().arity();
  Int offset = 0, a = plus.front().zero_threshold(), b = plus.front().linear_threshold();
  std::optional<Int> period = Int{1};
  auto absorb = [&](const RiemannFunction& f, int sign) {
    if (f.arity() != n) throw Error(Errc::ArityMismatch, "alternating sum terms");
    offset += sign * f.offset();
    a = std::min(a, f.zero_threshold());
    b = std::max(b, f.linear_threshold());
    if (period && f.period())
      period = lcm(*period, *f.period());
    else
      period.reset();
  };
  for (const auto& f : plus) absorb(f, 1);
  for (const auto& f : minus) absorb(f, -1);
  auto eval = [plus, minus](const Point& d) {
    Int v = 0;
    for (const auto& f : plus) v += f(d);
    for (const auto& f : minus) v -= f(d);
    return v;
  };
  return RiemannFunction(n, offset, a, b, std::move(eval), period);
}

RiemannFunction shifted_degree_function(Eigen::Index n, Int b) {
  return RiemannFunction(
      n, 1 - b, b - 1, b, [b](const Point& d) { return std::max<Int>(0, deg(d) - b + 1); }, 1);
}

Int mobius_weight(const RiemannFunction& f, const Point& d) {
  const Eigen::Index n = f.arity();
  if (d.size() != n) throw Error(Errc::ArityMismatch, "mobius_weight");
  Int total = 0;
  Point x(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int bits = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool in = (mask >> i) & 1u;
      x(i) = d(i) - (in ? 1 : 0);
      bits += in;
    }
    total += (bits % 2 ? -1 : 1) * f(x);
  }
  return total;
}

RiemannFunction dual_function(const RiemannFunction& f, const Point& K) {
  if (K.size() != f.arity()) throw Error(Errc::ArityMismatch, "dual_function");
  const Int dK = deg(K), C = f.offset();
  auto eval = [f, K, C](const Point& d) {
    Point x = K - d;
    return f(x) - deg(x) - C;
  };
  return RiemannFunction(f.arity(), -dK - C, dK - f.linear_threshold(), dK - f.zero_threshold(),
                         std::move(eval), f.period());
}

RiemannFunction restrict_two(const RiemannFunction& f, Eigen::Index i, Eigen::Index j,
                             const Point& base) {
  const Eigen::Index n = f.arity();
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error(Errc::IndexOutOfRange, "restrict_two");
  if (i == j) throw Error(Errc::InvalidInput, "restrict_two needs distinct indices");
  if (base.size() != n) throw Error(Errc::ArityMismatch, "restrict_two base");
  const Int db = deg(base);
  auto eval = [f, i, j, base](const Point& a) {
    Point x = base;
    x(i) += a(0);
    x(j) += a(1);
    return f(x);
  };
  return RiemannFunction(2, db + f.offset(), f.zero_threshold() - db, f.linear_threshold() - db,
                         std::move(eval), f.period());
}

Int triangle_sum(const RiemannFunction& f2, const Point2& d) {
  if (f2.arity() != 2) throw Error(Errc::ArityMismatch, "triangle_sum");
  const Int lo = f2.zero_threshold() + 1;
  Int total = 0;
  Point x(2);
  for (Int a1 = lo - d(1); a1 <= d(0); ++a1)
    for (Int a2 = lo - a1; a2 <= d(1); ++a2) {
      x << a1, a2;
      total += mobius_weight(f2, x);
    }
  return total;
}

const char* violation_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::InitialZero: return "initial_zero";
    case Violation::Kind::EventualLinear: return "eventual_linear";
    case Violation::Kind::Periodicity: return "periodicity";
    case Violation::Kind::Weight: return "weight";
  }
  return "unknown";
}

AxiomReport verify_axioms(const RiemannFunction& f, const Window& w) {
  if (w.arity() != f.arity()) throw Error(Errc::ArityMismatch, "verify_axioms window");
  AxiomReport report;
  const Eigen::Index n = f.arity();
  w.for_each([&](const Point& d) {
    const Int v = f(d), dd = deg(d);
    if (dd <= f.zero_threshold() && v != 0)
      report.violations.push_back({Violation::Kind::InitialZero, d, 0, v});
    if (dd >= f.linear_threshold() && v != dd + f.offset())
      report.violations.push_back({Violation::Kind::EventualLinear, d, dd + f.offset(), v});
    if (f.period()) {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          if (i == j) continue;
          Point t = d;
          t(i) += *f.period();
          t(j) -= *f.period();
          const Int u = f(t);
          if (u != v) report.violations.push_back({Violation::Kind::Periodicity, t, v, u});
        }
    }
  });
  return report;
}

Window default_window(const RiemannFunction& f) {
  return Window::cube(f.arity(), f.zero_threshold() - 4, f.linear_threshold() + 4);
}

bool is_slowly_growing(const RiemannFunction& f, const Window& w) {
  bool ok = true;
  w.for_each([&](const Point& d) {
    if (!ok) return;
    const Int v = f(d);
    for (Eigen::Index i = 0; i < d.size() && ok; ++i) {
      Point x = d;
      ++x(i);
      const Int u = f(x);
      ok = v <= u && u <= v + 1;
    }
  });
  return ok;
}

bool is_invariant_under(const RiemannFunction& f, const Point& t, const Window& w) {
  if (t.size() != f.arity()) throw Error(Errc::ArityMismatch, "translation");
  if (t.isZero()) return true;
  bool ok = true;
  w.for_each([&](const Point& d) {
    if (ok) ok = f(d + t) == f(d);
  });
  return ok;
}

std::optional<Int> detect_period(const RiemannFunction& f, const Window& w, Int p_max) {
  const Eigen::Index n = f.arity();
  for (Int p = 1; p <= p_max; ++p) {
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i)
      for (Eigen::Index j = 0; j < n && ok; ++j)
        if (i != j) ok = is_invariant_under(f, p * (unit(n, i) - unit(n, j)), w);
    if (ok) return p;
  }
  return std::nullopt;
}

AxiomReport slowly_growing_weight_check(const RiemannFunction& f2, const Window& w) {
  if (f2.arity() != 2) throw Error(Errc::ArityMismatch, "slowly_growing_weight_check");
  AxiomReport report;
  w.for_each([&](const Point& d) {
    if (d(0) == w.lower(0) || d(1) == w.lower(1)) return;
    const Int v = f2(d), x = f2(d(0) - 1, d(1)), y = f2(d(0), d(1) - 1),
              z = f2(d(0) - 1, d(1) - 1);
    const Int W = v - x - y + z;
    const bool plus = x == v - 1 && y == v - 1 && z == v - 1;
    const bool minus = x == v && y == v && z == v - 1;
    const Int expected = plus ? 1 : minus ? -1 : 0;
    if (W < -1 || W > 1 || W != expected)
      report.violations.push_back({Violation::Kind::Weight, d, expected, W});
  });
  return report;
}

}  // namespace rr
