#ifndef RR_JSON_IO_HPP
#define RR_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "rr/bakernorine.hpp"
#include "rr/kdiagram.hpp"
#include "rr/nvar.hpp"

namespace rr {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

// Function spec: kind is table, genus1_cycle, baker_norine, sum or
// difference. Paths inside a spec resolve against base_dir.
RiemannFunction function_from_json(const Json& j, const std::string& base_dir = ".");

BandWeight2 weight_from_json(const Json& j);
Json to_json(const BandWeight2& W);

PerfectMatching matching_from_json(const Json& j);
Json to_json(const PerfectMatching& m);
// A single matching object or an array of them.
Matchings matchings_from_json(const Json& j);

Multigraph graph_from_json(const Json& j);

Json to_json(const Betti& b);
Json to_json(const VirtualBetti& b);
Json to_json(const ExtNat& x);
Json to_json(const AlternatingDecomposition& D);

Rational parse_rational(const std::string& s);

// "(1,-2)" or "1,-2".
Point parse_point(const std::string& s);

// "lo..hi" for every coordinate, or one such range per coordinate separated
// by commas.
Window parse_window(const std::string& s, Eigen::Index arity);

template <class K>
typename K::Scalar scalar_from_json(const K& k, const Json& v, const std::string& field) {
  if (v.is_number_integer()) return k.from_int(v.get<Int>());
  if (!v.is_string()) throw Error(Errc::InvalidInput, field + ": expected an integer or \"p/q\"");
  const Rational r = parse_rational(v.get<std::string>());
  const Int num = static_cast<Int>(boost::multiprecision::numerator(r));
  const Int den = static_cast<Int>(boost::multiprecision::denominator(r));
  return k.from_int(num) / k.from_int(den);
}

template <class K>
Diagram<typename K::Scalar> diagram_from_json(const K& k, const Json& j) {
  using Scalar = typename K::Scalar;
  if (!j.is_object() || !j.contains("dims")) throw Error(Errc::InvalidInput, "dims: missing");
  std::array<Eigen::Index, 5> dims{};
  for (Place P : kPlaces) {
    const std::string name = place_name(P);
    const Json& d = j.at("dims");
    if (!d.contains(name) || !d.at(name).is_number_integer() || d.at(name).get<Int>() < 0)
      throw Error(Errc::InvalidInput, "dims." + name + ": expected a nonnegative integer");
    dims[static_cast<int>(P)] = d.at(name).get<Int>();
  }
  Diagram<Scalar> F = shaped(k.from_int(1), dims);
  auto fill = [&](const char* field, Mat<Scalar>& m) {
    if (!j.contains(field)) return;
    const Json& rows = j.at(field);
    const std::string f(field);
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != m.rows())
      throw Error(Errc::InvalidInput, f + ": expected " + std::to_string(m.rows()) + " rows");
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Json& row = rows.at(r);
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols())
        throw Error(Errc::InvalidInput, f + ": expected " + std::to_string(m.cols()) + " columns");
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(k, row.at(c), f);
    }
  };
  fill("rho11", F.rho11);
  fill("rho22", F.rho22);
  fill("rho31", F.rho31);
  fill("rho32", F.rho32);
  return F;
}

}  // namespace rr

#endif
