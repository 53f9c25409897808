#include "rr/core.hpp"

#include <numeric>
#include <sstream>

namespace rr {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingPeriod: return "MissingPeriod";
    case Errc::PeriodMismatch: return "PeriodMismatch";
    case Errc::NotNonNegative: return "NotNonNegative";
    case Errc::NotUnitSums: return "NotUnitSums";
    case Errc::FoldMismatch: return "FoldMismatch";
    case Errc::NonNegativityViolated: return "NonNegativityViolated";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotConnected: return "NotConnected";
  }
  return "Unknown";
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i);
  os << ')';
  return os.str();
}

Window::Window(Point lo, Point hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw Error(Errc::ArityMismatch, "window corners");
  if (!leq(lower, upper)) throw Error(Errc::InvalidInput, "window lower corner exceeds upper");
}

Window Window::cube(Eigen::Index n, Int lo, Int hi) {
  return Window(Point::Constant(n, lo), Point::Constant(n, hi));
}

std::size_t Window::count() const {
  std::size_t c = 1;
  for (Eigen::Index i = 0; i < lower.size(); ++i) c *= static_cast<std::size_t>(upper(i) - lower(i) + 1);
  return c;
}

}  // namespace rr
