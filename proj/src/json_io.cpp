#include "rr/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace rr {

namespace {

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains(name)) throw Error(Errc::InvalidInput, name + ": missing");
  return j.at(name);
}

Int int_field(const Json& j, const std::string& name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw Error(Errc::InvalidInput, name + ": expected an integer");
  return v.get<Int>();
}

std::optional<Int> optional_int(const Json& j, const std::string& name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return int_field(j, name);
}

std::vector<Int> int_list(const Json& v, const std::string& name) {
  if (!v.is_array()) throw Error(Errc::InvalidInput, name + ": expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw Error(Errc::InvalidInput, name + ": expected integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

// An inline object or a path to a JSON file.
Json resolve(const Json& v, const std::string& base_dir) {
  if (!v.is_string()) return v;
  const std::filesystem::path p(v.get<std::string>());
  return read_json_file(p.is_absolute() ? p.string() : (std::filesystem::path(base_dir) / p).string());
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

RiemannFunction function_from_json(const Json& j, const std::string& base_dir) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw Error(Errc::InvalidInput, "kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "table") {
    const Int n = int_field(j, "n");
    std::map<std::vector<Int>, Int> entries;
    const Json& es = field(j, "entries");
    if (!es.is_array()) throw Error(Errc::InvalidInput, "entries: expected an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2 || !e.at(1).is_number_integer())
        throw Error(Errc::InvalidInput, "entries: expected [[d...], value] pairs");
      std::vector<Int> d = int_list(e.at(0), "entries");
      if (static_cast<Int>(d.size()) != n) throw Error(Errc::ArityMismatch, "entries: point length");
      entries[d] = e.at(1).get<Int>();
    }
    return table_function(n, int_field(j, "offset"), int_field(j, "zero_threshold"),
                          int_field(j, "linear_threshold"), entries, optional_int(j, "period"));
  }
  if (k == "genus1_cycle") return cycle_genus1_function(int_field(j, "n"));
  if (k == "baker_norine") return bn_function(graph_from_json(resolve(field(j, "graph"), base_dir)));
  if (k == "sum" || k == "difference") {
    auto list = [&](const std::string& name, bool required) {
      std::vector<RiemannFunction> out;
      if (!j.contains(name)) {
        if (required) throw Error(Errc::InvalidInput, name + ": missing");
        return out;
      }
      if (!j.at(name).is_array()) throw Error(Errc::InvalidInput, name + ": expected an array");
      for (const auto& x : j.at(name)) out.push_back(function_from_json(resolve(x, base_dir), base_dir));
      return out;
    };
    const bool diff = k == "difference";
    const auto plus = list("plus", true), minus = list("minus", diff);
    if (diff && (plus.empty() || minus.empty()))
      throw Error(Errc::InvalidInput, "difference: plus and minus must be nonempty");
    return alternating_sum(plus, minus);
  }
  throw Error(Errc::InvalidInput, "kind: unknown function kind '" + k + "'");
}

BandWeight2 weight_from_json(const Json& j) {
  const Int p = int_field(j, "period");
  if (p < 1) throw Error(Errc::InvalidInput, "period: must be positive");
  std::vector<std::array<Int, 3>> entries;
  const Json& es = field(j, "entries");
  if (!es.is_array()) throw Error(Errc::InvalidInput, "entries: expected an array");
  for (const auto& e : es) {
    const std::vector<Int> v = int_list(e, "entries");
    if (v.size() != 3) throw Error(Errc::InvalidInput, "entries: expected [a1,a2,value]");
    if (v[0] < 0 || v[0] >= p) throw Error(Errc::InvalidInput, "entries: a1 must lie in [0, period)");
    entries.push_back({v[0], v[1], v[2]});
  }
  BandWeight2 W = BandWeight2::from_entries(p, entries);
  if (j.contains("band")) {
    const std::vector<Int> b = int_list(j.at("band"), "band");
    if (b.size() != 2) throw Error(Errc::InvalidInput, "band: expected [lo,hi]");
    W = W.with_band(b[0], b[1]);
  }
  return W;
}

Json to_json(const BandWeight2& W) {
  Json entries = Json::array();
  for (const auto& [a1, a2, v] : W.entries()) entries.push_back({a1, a2, v});
  return {{"period", W.period()}, {"band", {W.band_lo(), W.band_hi()}}, {"entries", entries}};
}

PerfectMatching matching_from_json(const Json& j) {
  const Int p = int_field(j, "period");
  std::vector<Int> pi = int_list(field(j, "pi"), "pi");
  if (static_cast<Int>(pi.size()) != p) throw Error(Errc::LengthMismatch, "pi: length must equal period");
  return PerfectMatching(p, std::move(pi));
}

Json to_json(const PerfectMatching& m) { return {{"period", m.period()}, {"pi", m.values()}}; }

Matchings matchings_from_json(const Json& j) {
  Matchings out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(matching_from_json(x));
  } else {
    out.push_back(matching_from_json(j));
  }
  return out;
}

Multigraph graph_from_json(const Json& j) {
  const Int n = int_field(j, "n");
  std::vector<std::array<Int, 3>> edges;
  const Json& es = field(j, "edges");
  if (!es.is_array()) throw Error(Errc::InvalidInput, "edges: expected an array");
  for (const auto& e : es) {
    const std::vector<Int> v = int_list(e, "edges");
    if (v.size() != 3 && v.size() != 2) throw Error(Errc::InvalidInput, "edges: expected [u,v,mult]");
    edges.push_back({v[0], v[1], v.size() == 3 ? v[2] : 1});
  }
  return Multigraph::from_edges(n, edges);
}

Json to_json(const Betti& b) { return {{"b0", b.b0}, {"b1", b.b1}, {"chi", b.chi()}}; }

Json to_json(const VirtualBetti& b) { return {{"b0", b.b0}, {"b1", b.b1}, {"chi", b.chi}}; }

Json to_json(const ExtNat& x) {
  if (x.infinite) return "inf";
  return x.value;
}

Json to_json(const AlternatingDecomposition& D) {
  Json plus = Json::array(), minus = Json::array();
  for (const auto& m : D.plus) plus.push_back(to_json(m));
  for (const auto& m : D.minus) minus.push_back(to_json(m));
  return {{"plus", plus}, {"minus", minus}, {"period", D.period}};
}

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(Errc::InvalidInput, "not a rational: '" + s + "'");
  Rational num(m[1].str());
  if (!m[2].matched) return num;
  Rational den(m[2].str());
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + s + "'");
  return num / den;
}

Point parse_point(const std::string& s) {
  std::string body = s;
  const auto a = body.find_first_not_of(" \t"), b = body.find_last_not_of(" \t");
  if (a == std::string::npos) throw Error(Errc::InvalidInput, "empty point");
  body = body.substr(a, b - a + 1);
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<Int> xs;
  std::stringstream ss(body);
  std::string item;
  static const std::regex num(R"(\s*(-?\d+)\s*)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, num)) throw Error(Errc::InvalidInput, "bad point '" + s + "'");
    xs.push_back(std::stoll(m[1].str()));
  }
  if (xs.empty()) throw Error(Errc::InvalidInput, "bad point '" + s + "'");
  Point p(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) p(i) = xs[i];
  return p;
}

Window parse_window(const std::string& s, Eigen::Index arity) {
  static const std::regex range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::vector<std::pair<Int, Int>> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, range)) throw Error(Errc::InvalidInput, "window: bad range '" + item + "'");
    parts.emplace_back(std::stoll(m[1].str()), std::stoll(m[2].str()));
  }
  if (parts.size() == 1) parts.assign(arity, parts.front());
  if (static_cast<Eigen::Index>(parts.size()) != arity)
    throw Error(Errc::ArityMismatch, "window: expected " + std::to_string(arity) + " ranges");
  Point lo(arity), hi(arity);
  for (Eigen::Index i = 0; i < arity; ++i) lo(i) = parts[i].first, hi(i) = parts[i].second;
  return Window(lo, hi);
}

}  // namespace rr
