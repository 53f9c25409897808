#include "rr/cli.hpp"

#include <filesystem>
#include <functional>

#include <CLI11.hpp>

#include "rr/json_io.hpp"

namespace rr {

namespace {

struct Options {
  std::string fn, weight, matching, graph, d, K, divisor, window;
  std::string method = "closed", field = "rational", pair = "0,1";
  Int slack = 1;
};

struct Result {
  Status status = Status::Ok;
  Json payload;
};

std::string require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw Error(Errc::InvalidInput, flag + ": required");
  return value;
}

RiemannFunction load_function(const Options& o) {
  const std::string path = require(o.fn, "--fn");
  return function_from_json(read_json_file(path), std::filesystem::path(path).parent_path().string());
}

Point2 point2(const std::string& s, const std::string& flag) {
  const Point p = parse_point(require(s, flag));
  if (p.size() != 2) throw Error(Errc::ArityMismatch, flag + ": expected two coordinates");
  return Point2(p(0), p(1));
}

Point point_n(const std::string& s, const std::string& flag, Eigen::Index n) {
  const Point p = parse_point(require(s, flag));
  if (p.size() != n)
    throw Error(Errc::ArityMismatch, flag + ": expected " + std::to_string(n) + " coordinates");
  return p;
}

// Runs body with the field descriptor chosen by --field.
template <class Body>
auto with_field(const std::string& name, Body&& body) {
  if (name == "rational") return body(Rationals{});
  if (name.rfind("gf:", 0) == 0) {
    Int q = 0;
    try {
      q = std::stoll(name.substr(3));
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "--field: bad modulus in '" + name + "'");
    }
    return body(PrimeField(q));
  }
  throw Error(Errc::InvalidInput, "--field: expected rational or gf:<q>");
}

Matchings load_matchings(const Options& o) {
  if (!o.matching.empty()) return matchings_from_json(read_json_file(o.matching));
  if (!o.weight.empty()) return split_rfold(weight_from_json(read_json_file(o.weight)));
  throw Error(Errc::InvalidInput, "--matching: required");
}

Result cmd_weight(const Options& o) {
  const RiemannFunction f = load_function(o);
  const Point d = point_n(o.d, "--d", f.arity());
  return {Status::Ok, {{"d", to_string(d)}, {"weight", mobius_weight(f, d)}}};
}

Result cmd_weights_band(const Options& o) {
  RiemannFunction f = load_function(o);
  if (f.arity() != 2) {
    const Point p = parse_point(o.pair);
    if (p.size() != 2) throw Error(Errc::InvalidInput, "--pair: expected i,j");
    const Point base = o.d.empty() ? Point(Point::Zero(f.arity())) : point_n(o.d, "--d", f.arity());
    f = restrict_two(f, p(0), p(1), base);
  }
  return {Status::Ok, to_json(weight_of(f))};
}

Result cmd_check_riemann(const Options& o) {
  const RiemannFunction f = load_function(o);
  const Window w = o.window.empty() ? default_window(f) : parse_window(o.window, f.arity());
  const AxiomReport r = verify_axioms(f, w);
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"kind", violation_name(v.kind)},
                          {"at", to_string(v.at)},
                          {"expected", v.expected},
                          {"actual", v.actual}});
  Json out{{"ok", r.ok()}, {"points", w.count()}, {"violations", violations}};
  if (f.arity() == 2) out["slowly_growing"] = is_slowly_growing(f, w);
  return {r.ok() ? Status::Ok : Status::CheckFailed, out};
}

Result cmd_decompose(const Options& o) {
  const BandWeight2 W = weight_from_json(read_json_file(require(o.weight, "--weight")));
  AlternatingDecomposition D;
  if (o.method == "hall")
    D = hall_decomposition(W);
  else if (o.method == "gadget" || o.method == "closed")
    D = alternating_decomposition(W);
  else
    throw Error(Errc::InvalidInput, "--method: expected gadget or hall");
  const bool verified = D.signed_sum() == W;
  Json out = to_json(D);
  out["verified"] = verified;
  return {verified ? Status::Ok : Status::CheckFailed, out};
}

Json graph_json(const GraphBetti& g) {
  Json out{{"b0", to_json(g.b0)}, {"b1", to_json(g.b1)}};
  out["chi"] = (g.b0.infinite || g.b1.infinite) ? Json(nullptr) : Json(g.b0.value - g.b1.value);
  return out;
}

Result cmd_betti(const Options& o) {
  const Point2 d = point2(o.d, "--d");
  if (o.method == "graph") {
    const BandWeight2 W = o.weight.empty() ? sum_weights(load_matchings(o))
                                           : weight_from_json(read_json_file(o.weight));
    return {Status::Ok, graph_json(graph_betti(W, d))};
  }
  const Matchings ms = load_matchings(o);
  if (o.method == "closed") return {Status::Ok, to_json(betti_closed(ms, d))};
  if (o.method == "trunc")
    return {Status::Ok, with_field(o.field, [&](const auto& k) {
              return to_json(betti_truncated(k, ms, d, o.slack));
            })};
  throw Error(Errc::InvalidInput, "--method: expected closed, trunc or graph");
}

Result cmd_betti_oracle(const Options& o) {
  const Point2 d = point2(o.d, "--d");
  const Matchings ms = load_matchings(o);
  const Betti closed = betti_closed(ms, d);
  Json trunc = Json::object();
  bool agree = true;
  with_field(o.field, [&](const auto& k) {
    for (Int s : {Int{1}, Int{3}, Int{6}}) {
      const Betti b = betti_truncated(k, ms, d, s);
      agree = agree && b == closed;
      trunc[std::to_string(s)] = to_json(b);
    }
    return 0;
  });
  const GraphBetti g = graph_betti(sum_weights(ms), d);
  agree = agree && g.b0 == ExtNat::of(closed.b0) && g.b1 == ExtNat::of(closed.b1);
  Json out{{"closed", to_json(closed)}, {"trunc", trunc}, {"graph", graph_json(g)}, {"agree", agree}};
  return {agree ? Status::Ok : Status::CheckFailed, out};
}

Result cmd_duality(const Options& o) {
  const Matchings ms = load_matchings(o);
  if (ms.size() != 1) throw Error(Errc::InvalidInput, "--matching: expected a single matching");
  const Point2 K = point2(o.K, "--K"), d = point2(o.d, "--d");
  const DualityResult r = with_field(o.field, [&](const auto& k) {
    return duality_check(k, ms.front(), K, d, o.slack);
  });
  Json out{{"original", to_json(r.original)},
           {"dual", to_json(r.dual)},
           {"dual_matching", to_json(dual_matching(ms.front(), K + Point2(1, 1)))},
           {"hom_to_dualizing", r.hom_to_dualizing},
           {"holds", r.holds}};
  return {r.holds ? Status::Ok : Status::CheckFailed, out};
}

Result cmd_glue_check(const Options& o) {
  const RiemannFunction f = load_function(o);
  const Point d = point_n(o.d, "--d", f.arity());
  const GlueReport r = glue_report(f, d);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e = to_json(p.betti);
    e["pair"] = {p.i, p.j};
    e["period"] = p.period;
    pairs.push_back(e);
  }
  Json out{{"pairs", pairs},
           {"triples_agree", r.triples_agree},
           {"axis_agree", r.axis_agree},
           {"zipper_agree", r.zipper_agree},
           {"failures", r.failures},
           {"ok", r.ok()}};
  return {r.ok() ? Status::Ok : Status::CheckFailed, out};
}

Result cmd_nvar_duality(const Options& o) {
  const RiemannFunction f = load_function(o);
  const Point K = point_n(o.K, "--K", f.arity()), d = point_n(o.d, "--d", f.arity());
  const NvarDuality r = nvar_duality_report(f, K, d);
  Json out{{"original", to_json(r.original)}, {"dual", to_json(r.dual)}, {"holds", r.holds}};
  return {r.holds ? Status::Ok : Status::CheckFailed, out};
}

Result cmd_bn(const Options& o) {
  const Multigraph G = graph_from_json(read_json_file(require(o.graph, "--graph")));
  const Point d = point_n(o.divisor.empty() ? o.d : o.divisor, "--divisor", G.n());
  const Int r = bn_rank(G, d);
  return {Status::Ok, {{"rank", r}, {"f", r + 1}}};
}

Result cmd_rr_check(const Options& o) {
  const Multigraph G = graph_from_json(read_json_file(require(o.graph, "--graph")));
  const RiemannFunction f = bn_function(G);
  const Window w = o.window.empty() ? Window::cube(G.n(), -2, 2) : parse_window(o.window, G.n());
  const Point K = canonical_divisor(G);
  const Int g = G.genus();
  Json failures = Json::array();
  w.for_each([&](const Point& d) {
    const Int lhs = f(d) - f(K - d), rhs = deg(d) + 1 - g;
    if (lhs != rhs) failures.push_back({{"d", to_string(d)}, {"lhs", lhs}, {"rhs", rhs}});
  });
  const bool ok = failures.empty();
  Json out{{"genus", g},
           {"canonical", to_string(K)},
           {"period", *f.period()},
           {"points", w.count()},
           {"failures", failures},
           {"ok", ok}};
  return {ok ? Status::Ok : Status::CheckFailed, out};
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann functions, matching diagrams and chip-firing checks", "rrtool"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Result(const Options&)>> handlers;

  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<Result(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = std::move(fn);
    return s;
  };
  auto fn_opts = [&](CLI::App* s) { s->add_option("--fn", o.fn, "function spec JSON file"); };

  CLI::App* s = sub("weight", "Moebius weight of a function at a point", cmd_weight);
  fn_opts(s);
  s->add_option("--d", o.d, "point, e.g. \"(0,1)\"");

  s = sub("weights-band", "weight table of an arity-2 function or a restriction", cmd_weights_band);
  fn_opts(s);
  s->add_option("--d", o.d, "restriction base");
  s->add_option("--pair", o.pair, "restriction coordinates i,j");

  s = sub("check-riemann", "verify the Riemann function axioms on a window", cmd_check_riemann);
  fn_opts(s);
  s->add_option("--window", o.window, "lo..hi, or one range per coordinate");

  s = sub("decompose", "alternating decomposition of a unit-sum weight", cmd_decompose);
  s->add_option("--weight", o.weight, "weight spec JSON file");
  s->add_option("--method", o.method, "gadget or hall");

  for (const auto& [name, fn] :
       std::vector<std::pair<std::string, Result (*)(const Options&)>>{{"betti", cmd_betti},
                                                                       {"betti-oracle", cmd_betti_oracle},
                                                                       {"duality", cmd_duality}}) {
    s = sub(name, name == "betti" ? "Betti numbers of a matching diagram"
                  : name == "duality" ? "perfect-matching duality check"
                                      : "compare closed form, truncation and graph Betti numbers",
            fn);
    s->add_option("--matching", o.matching, "matching spec JSON (object or array)");
    s->add_option("--weight", o.weight, "nonnegative weight spec JSON");
    s->add_option("--d", o.d, "point (d1,d2)");
    s->add_option("--field", o.field, "rational or gf:<q>");
    s->add_option("--slack", o.slack, "truncation slack");
    if (name == "betti") s->add_option("--method", o.method, "closed, trunc or graph");
    if (name == "duality") s->add_option("--K", o.K, "point (K1,K2)");
  }

  s = sub("glue-check", "gluing independence across coordinate pairs", cmd_glue_check);
  fn_opts(s);
  s->add_option("--d", o.d, "point");

  s = sub("nvar-duality", "n-variable duality of virtual Betti numbers", cmd_nvar_duality);
  fn_opts(s);
  s->add_option("--K", o.K, "point");
  s->add_option("--d", o.d, "point");

  s = sub("bn", "Baker-Norine rank of a divisor", cmd_bn);
  s->add_option("--graph", o.graph, "graph spec JSON file");
  s->add_option("--divisor,--d", o.divisor, "divisor");

  s = sub("rr-check", "Riemann-Roch identity of a graph on a window", cmd_rr_check);
  s->add_option("--graph", o.graph, "graph spec JSON file");
  s->add_option("--window", o.window, "lo..hi, or one range per coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(Status::Ok);
  } catch (const CLI::ParseError& e) {
    err << "rrtool: " << e.what() << "\n";
    return static_cast<int>(Status::InputError);
  }

  for (auto& [cmd, handler] : handlers) {
    if (!cmd->parsed()) continue;
    try {
      const Result r = handler(o);
      out << r.payload.dump() << "\n";
      return static_cast<int>(r.status);
    } catch (const Error& e) {
      err << "rrtool " << cmd->get_name() << ": " << e.what() << "\n";
    } catch (const Json::exception& e) {
      err << "rrtool " << cmd->get_name() << ": " << e.what() << "\n";
    }
    return static_cast<int>(Status::InputError);
  }
  return static_cast<int>(Status::InputError);
}

}  // namespace rr
