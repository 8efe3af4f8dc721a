#include "io.hpp"

#include <fstream>
#include <sstream>

namespace hyptmp::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

Rat as_rat(const Json& j, const std::string& path) {
  try {
    return parse_rat(as_string(j, path));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

bool is_exact(const std::string& s) { return s.find_first_of(".eE") == std::string::npos; }

}  // namespace

Instance parse_instance(const Json& j) {
  int degree = as_int(field(j, "degree", "$"), "$.degree");
  if (degree < 0 || degree % 2) throw ParseError("$.degree", "must be a nonnegative even integer");
  const Json& c = field(j, "curve", "$");
  Instance inst;
  try {
    inst.curve.tag = parse_curve(as_string(field(c, "type", "$.curve"), "$.curve.type"));
  } catch (const std::invalid_argument& e) {
    throw ParseError("$.curve.type", e.what());
  }
  if (c.contains("a"))
    inst.curve.a = as_rat(c["a"], "$.curve.a");
  else if (inst.curve.tag == Curve::Hyp2)
    inst.curve.a = -1;
  else if (inst.curve.tag == Curve::Hyp3)
    throw ParseError("$.curve.a", "missing");
  try {
    inst.curve.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("$.curve.a", e.what());
  }

  int k = degree / 2;
  inst.moments = BivSeq(k);
  std::vector<bool> seen(deglex_count(degree), false);
  const Json& ms = field(j, "moments", "$");
  if (!ms.is_array()) throw ParseError("$.moments", "expected an array");
  for (std::size_t n = 0; n < ms.size(); ++n) {
    std::string p = "$.moments[" + std::to_string(n) + "]";
    int i = as_int(field(ms[n], "i", p), p + ".i");
    int jj = as_int(field(ms[n], "j", p), p + ".j");
    if (!inst.moments.has(i, jj)) throw ParseError(p, "index outside i + j <= " + std::to_string(degree));
    Index pos = deglex_index(i, jj);
    if (seen[pos]) throw ParseError(p, "duplicate moment (" + std::to_string(i) + "," + std::to_string(jj) + ")");
    seen[pos] = true;
    inst.moments.at(i, jj) = as_rat(field(ms[n], "value", p), p + ".value");
  }
  for (int d = 0; d <= degree; ++d)
    for (int jj = 0; jj <= d; ++jj)
      if (!seen[deglex_index(d - jj, jj)])
        throw ParseError("$.moments", "missing moment (" + std::to_string(d - jj) + "," + std::to_string(jj) + ")");
  return inst;
}

Json to_json(const Instance& inst) {
  Json j;
  j["degree"] = inst.moments.degree();
  Json c;
  c["type"] = to_string(inst.curve.tag);
  if (inst.curve.tag != Curve::Hyp1) c["a"] = to_string(inst.curve.a);
  j["curve"] = c;
  Json ms = Json::array();
  for (int d = 0; d <= inst.moments.degree(); ++d)
    for (int jj = 0; jj <= d; ++jj)
      ms.push_back({{"i", d - jj}, {"j", jj}, {"value", to_string(inst.moments(d - jj, jj))}});
  j["moments"] = ms;
  return j;
}

Json to_json(const SolveReport& r) {
  Json j;
  j["exists"] = r.exists;
  j["minimal_atoms"] = r.minimal_atoms ? Json(*r.minimal_atoms) : Json(nullptr);
  if (r.witness) {
    PrecisionScope scope(128);
    j["witness"] = {{"t", r.witness->t.str()},
                    {"u", r.witness->u.str()},
                    {"t_decimal", to_decimal(to_real(r.witness->t), 30)},
                    {"u_decimal", to_decimal(to_real(r.witness->u), 30)}};
  } else {
    j["witness"] = nullptr;
  }
  j["rank_M"] = r.rank_m;
  j["branch"] = r.branch;
  j["certificate"] = r.certificate.empty() ? Json(nullptr) : Json(r.certificate);
  return j;
}

Json to_json(const PlaneMeasure& mu, unsigned digits) {
  Json j;
  j["precision_bits"] = mu.bits;
  Json atoms = Json::array();
  for (const auto& a : mu.atoms) {
    Json at;
    at["x"] = a.x_exact ? to_string(*a.x_exact) : to_decimal(a.x, digits);
    at["y"] = a.y_exact ? to_string(*a.y_exact) : to_decimal(a.y, digits);
    at["weight"] = a.w_exact ? to_string(*a.w_exact) : to_decimal(a.w, digits);
    at["component"] = a.on_line ? "line" : "conic";
    atoms.push_back(at);
  }
  j["atoms"] = atoms;
  return j;
}

Json to_json(const GroundTruth& g) {
  Json j;
  j["seed"] = g.seed;
  Json atoms = Json::array();
  for (const auto& a : g.atoms)
    atoms.push_back({{"x", to_string(a.x)},
                     {"y", to_string(a.y)},
                     {"weight", to_string(a.w)},
                     {"component", a.on_line ? "line" : "conic"}});
  j["atoms"] = atoms;
  return j;
}

PlaneMeasure parse_measure(const Json& j, unsigned bits) {
  PrecisionScope scope(bits + 64);
  PlaneMeasure mu;
  mu.bits = bits;
  const Json& atoms = field(j, "atoms", "$");
  if (!atoms.is_array()) throw ParseError("$.atoms", "expected an array");
  for (std::size_t n = 0; n < atoms.size(); ++n) {
    std::string p = "$.atoms[" + std::to_string(n) + "]";
    PlaneAtom a;
    auto coord = [&](const char* key, Real& v, std::optional<Rat>& exact) {
      std::string path = p + "." + key;
      std::string s = as_string(field(atoms[n], key, p), path);
      if (is_exact(s)) {
        exact = as_rat(atoms[n][key], path);
        v = to_real(*exact);
      } else {
        try {
          v = Real(s);
        } catch (const std::exception&) {
          throw ParseError(path, "not a decimal number");
        }
      }
    };
    coord("x", a.x, a.x_exact);
    coord("y", a.y, a.y_exact);
    coord("weight", a.w, a.w_exact);
    if (atoms[n].contains("component")) a.on_line = atoms[n]["component"] == "line";
    mu.atoms.push_back(a);
  }
  return mu;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace hyptmp::io
