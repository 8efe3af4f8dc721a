#include "io.hpp"

#include "hyptmp/solve.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hyptmp;

namespace {

enum Exit { kYes = 0, kNo = 1, kInvalid = 2, kResidual = 3 };

struct Options {
  std::string instance, measure, out, curve = "hyp1", a = "-1", map = "0,1,0,0,0,1";
  unsigned precision = 256;
  std::string tol = "1e-25";
  std::uint64_t seed = 1;
  int k = 3, n_line = 1, n_conic = 2;
};

void emit(const io::Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << '\n';
  else
    io::write_file(out, j);
}

Real parse_tol(const std::string& s, unsigned bits) {
  PrecisionScope scope(bits + 64);
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw io::ParseError("--tol", "not a number: " + s);
  }
}

int cmd_decide(const Options& o) {
  io::Instance inst = io::parse_instance(io::read_file(o.instance));
  SolveReport r = decide(inst.moments, inst.curve);
  emit(io::to_json(r), o.out);
  return r.exists ? kYes : kNo;
}

io::Json residual_json(const Real& res, const Real& tol) {
  return {{"max_relative", to_decimal(res, 10)}, {"tol", to_decimal(tol, 10)}, {"pass", res <= tol}};
}

int cmd_solve(const Options& o) {
  io::Instance inst = io::parse_instance(io::read_file(o.instance));
  SolveReport r = decide(inst.moments, inst.curve);
  if (!r.exists) {
    emit(io::to_json(r), o.out);
    return kNo;
  }
  Real tol = parse_tol(o.tol, o.precision);
  PrecisionScope scope(o.precision + 64);
  io::Json j;
  j["report"] = io::to_json(r);
  try {
    PlaneMeasure mu = construct_measure(inst.moments, inst.curve, o.precision);
    Real res = relative_residual(mu, inst.moments);
    j["measure"] = io::to_json(mu, digits10_for_bits(o.precision));
    j["residual"] = residual_json(res, tol);
    emit(j, o.out);
    return res <= tol ? kYes : kResidual;
  } catch (const ExtractionError& e) {
    j["measure"] = nullptr;
    j["error"] = e.what();
    emit(j, o.out);
    return kResidual;
  }
}

int cmd_verify(const Options& o) {
  io::Instance inst = io::parse_instance(io::read_file(o.instance));
  io::Json mj = io::read_file(o.measure);
  if (mj.contains("measure")) mj = mj["measure"];
  PlaneMeasure mu = io::parse_measure(mj, o.precision);
  Real tol = parse_tol(o.tol, o.precision);
  PrecisionScope scope(o.precision + 64);
  Real res = relative_residual(mu, inst.moments);
  emit(residual_json(res, tol), o.out);
  return res <= tol ? kYes : kResidual;
}

int cmd_generate(const Options& o) {
  CurveType c{parse_curve(o.curve), Rat(0)};
  if (c.tag != Curve::Hyp1) c.a = parse_rat(o.a);
  GroundTruth g = random_curve_measure(c, o.k, o.n_line, o.n_conic, o.seed);
  io::Json inst = io::to_json(io::Instance{c, g.moments});
  io::Json truth = io::to_json(g);
  if (o.out.empty()) {
    std::cout << io::Json{{"instance", inst}, {"measure", truth}}.dump(2) << '\n';
  } else {
    io::write_file(o.out + ".json", inst);
    io::write_file(o.out + ".measure.json", truth);
  }
  return kYes;
}

int cmd_transform(const Options& o) {
  io::Instance inst = io::parse_instance(io::read_file(o.instance));
  std::vector<Rat> m;
  std::stringstream ss(o.map);
  for (std::string part; std::getline(ss, part, ',');) m.push_back(parse_rat(part));
  if (m.size() != 6) throw io::ParseError("--map", "expected six rationals a,b,c,d,e,f");
  Affine phi{m[0], m[1], m[2], m[3], m[4], m[5]};
  inst.moments = affine_apply(inst.moments, phi);
  emit(io::to_json(inst), o.out);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncated moment problems on hyperbolic reducible cubics"};
  app.require_subcommand(1);
  Options o;

  auto* decide_cmd = app.add_subcommand("decide", "Decide existence and report the minimal atom count");
  decide_cmd->add_option("instance", o.instance, "Instance JSON")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Construct a representing measure");
  solve_cmd->add_option("instance", o.instance, "Instance JSON")->required();
  solve_cmd->add_option("--precision", o.precision, "Working precision in bits")->capture_default_str();
  solve_cmd->add_option("--tol", o.tol, "Relative residual tolerance")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check a measure against an instance");
  verify_cmd->add_option("instance", o.instance, "Instance JSON")->required();
  verify_cmd->add_option("measure", o.measure, "Measure JSON")->required();
  verify_cmd->add_option("--precision", o.precision, "Working precision in bits")->capture_default_str();
  verify_cmd->add_option("--tol", o.tol, "Relative residual tolerance")->capture_default_str();

  auto* gen_cmd = app.add_subcommand("generate", "Random instance with a known measure");
  gen_cmd->add_option("--curve", o.curve, "hyp1, hyp2 or hyp3")->capture_default_str();
  gen_cmd->add_option("--a", o.a, "Curve coefficient for hyp2/hyp3")->capture_default_str();
  gen_cmd->add_option("--k", o.k, "Half degree")->capture_default_str()->check(CLI::Range(1, 20));
  gen_cmd->add_option("--line", o.n_line, "Atoms on y = 0")->capture_default_str()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--conic", o.n_conic, "Atoms on the conic")->capture_default_str()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();

  auto* tr_cmd = app.add_subcommand("transform", "Apply (x,y) -> (a+bx+cy, d+ex+fy)");
  tr_cmd->add_option("instance", o.instance, "Instance JSON")->required();
  tr_cmd->add_option("--map", o.map, "a,b,c,d,e,f")->capture_default_str();

  for (auto* sub : {decide_cmd, solve_cmd, verify_cmd, gen_cmd, tr_cmd})
    sub->add_option("--out", o.out, "Output path (stdout when empty)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalid;
  }
  try {
    if (*decide_cmd) return cmd_decide(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*gen_cmd) return cmd_generate(o);
    return cmd_transform(o);
  } catch (const io::ParseError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  }
  return kInvalid;
}
