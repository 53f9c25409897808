#ifndef RR_BAKERNORINE_HPP
#define RR_BAKERNORINE_HPP

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rr/riemann.hpp"

namespace rr {

// Connected loopless multigraph on vertices 0..n-1.
class Multigraph {
 public:
  explicit Multigraph(IntMatrix mult);
  // edges are (u, v, multiplicity)
  static Multigraph from_edges(Int n, const std::vector<std::array<Int, 3>>& edges);

  Int n() const { return mult_.rows(); }
  const IntMatrix& mult() const { return mult_; }
  Int degree(Int v) const { return mult_.row(v).sum(); }
  Int edge_count() const { return mult_.sum() / 2; }
  Int genus() const { return edge_count() - n() + 1; }

 private:
  IntMatrix mult_;
};

Multigraph cycle_graph(Int n);
Multigraph complete_graph(Int n);
// Two vertices joined by m parallel edges.
Multigraph banana_graph(Int m);

IntMatrix laplacian(const Multigraph& G);

Point canonical_divisor(const Multigraph& G);

// The q-reduced divisor linearly equivalent to d.
Point dhar_reduce(const Multigraph& G, const Point& d, Int q = 0);

bool is_effective(const Multigraph& G, const Point& d);

// Exhaustive search over d' >= 0 of the same degree with d - d' in the
// image of the Laplacian; independent of dhar_reduce.
bool is_effective_bruteforce(const Multigraph& G, const Point& d);

Int bn_rank(const Multigraph& G, const Point& d);

// Invariant factors of an integer matrix, nonunit ones included.
std::vector<boost::multiprecision::cpp_int> invariant_factors(const IntMatrix& M);

// Exponent of the degree-zero part of Z^n / L.
Int sandpile_exponent(const Multigraph& G);

RiemannFunction bn_function(const Multigraph& G);

RiemannFunction cycle_genus1_function(Int n);

}  // namespace rr

#endif
