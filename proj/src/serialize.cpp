#include "enriques/serialize.hpp"

#include "enriques/error.hpp"

namespace enriques::io {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw Error(ErrorKind::invalid_input, "expected a rational string, got " + j.dump());
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorKind::invalid_input, std::string("missing field '") + name + "' in " + j.dump());
  return j.at(name);
}

template <std::size_t N>
void fill(std::array<Rational, N>& out, const json& j, const char* name) {
  auto values = rationals_from_json(field(j, name));
  if (values.size() != N)
    throw Error(ErrorKind::invalid_input,
                std::string("field '") + name + "' needs " + std::to_string(N) + " entries");
  std::copy(values.begin(), values.end(), out.begin());
}

}  // namespace

json rational_array(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::invalid_input, "expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const LatticeVector& v) {
  return json{{"basis", to_string(v.basis())}, {"coeffs", rational_array(v.coeffs())}, {"torsion", v.torsion() ? 1 : 0}};
}

LatticeVector vector_from_json(const json& j) {
  const json& name = field(j, "basis");
  if (!name.is_string()) throw Error(ErrorKind::invalid_input, "basis must be a string, got " + name.dump());
  const Basis basis = parse_basis(name.get<std::string>());
  bool torsion = false;
  if (j.contains("torsion")) {
    const auto& t = j.at("torsion");
    if (t.is_boolean()) torsion = t.get<bool>();
    else if (t.is_number_integer() && (t.get<int>() == 0 || t.get<int>() == 1)) torsion = t.get<int>() == 1;
    else throw Error(ErrorKind::invalid_input, "torsion must be 0 or 1");
  }
  return LatticeVector(basis, rationals_from_json(field(j, "coeffs")), torsion);
}

json to_json(const ChamberPoint& p) { return json{{"b", rational_array(p.b)}}; }

ChamberPoint point_from_json(const json& j) { return ChamberPoint::from(rationals_from_json(field(j, "b"))); }

json to_json(const ReductionTrace& t) {
  json word = json::array();
  for (const auto& d : t.word) word.push_back(json{{"root", to_json(d.root())}});
  return json{{"word", word}, {"sign_flip", t.sign_flip}, {"scale", to_string(t.scale)}};
}

ReductionTrace trace_from_json(const json& j) {
  ReductionTrace t;
  for (const auto& step : field(j, "word")) t.word.emplace_back(vector_from_json(field(step, "root")));
  t.sign_flip = field(j, "sign_flip").get<bool>();
  t.scale = rational_from_json(field(j, "scale"));
  if (t.scale <= 0) throw Error(ErrorKind::invalid_input, "trace scale must be positive");
  return t;
}

json k3_to_json(const LatticeVector& v) {
  const K3Blocks b = K3Blocks::of(v);
  return json{{"x", rational_array(b.x)},
              {"y", rational_array(b.y)},
              {"z1", rational_array(b.z1)},
              {"z2", rational_array(b.z2)},
              {"z3", rational_array(b.z3)}};
}

LatticeVector k3_from_json(const json& j) {
  K3Blocks b;
  fill(b.x, j, "x");
  fill(b.y, j, "y");
  fill(b.z1, j, "z1");
  fill(b.z2, j, "z2");
  fill(b.z3, j, "z3");
  return b.vector();
}

PeriodCandidate period_candidate_from_json(const json& j) {
  return PeriodCandidate(k3_from_json(field(j, "p")), k3_from_json(field(j, "q")));
}

json to_json(const BlowupClass& c) {
  json j{{"B", to_json(c.B)}};
  if (c.l) j["l"] = *c.l;
  return j;
}

BlowupClass blowup_class_from_json(const json& j) {
  LatticeVector b = vector_from_json(field(j, "B"));
  if (b.basis() != Basis::E) throw Error(ErrorKind::invalid_input, "class B must be in basis E");
  if (!j.contains("l") || j.at("l").is_null()) return BlowupClass::on_s(std::move(b));
  if (!j.at("l").is_number_integer()) throw Error(ErrorKind::invalid_input, "l must be an integer");
  return BlowupClass::on_blowup(std::move(b), j.at("l").get<long>());
}

json to_json(const WitnessReport& r) {
  return json{{"s_squared", to_string(r.s_squared)},
              {"upper_squared", to_string(r.upper_squared)},
              {"margin", to_string(r.margin)},
              {"verdict", r.verdict}};
}

json to_json(const InvariantReport& r) {
  json j{{"b", rational_array(r.point.b)}, {"phi", to_string(r.phi)}};
  for (const auto& entry : r.c_alg) {
    const std::string key = "c" + std::to_string(entry.k);
    j[key + "_alg"] = to_string(entry.result.value);
    j[key + "_argmin"] = rational_array(entry.result.argmin.coeffs());
    j[key + "_certified"] = entry.result.certified;
  }
  j["s_squared"] = to_string(r.s_squared);
  j["kahler_lower"] = to_string(r.kahler_lower);
  j["kahler_upper"] = to_string(r.kahler_upper);
  j["non_kahler"] = r.non_kahler;
  return j;
}

}  // namespace enriques::io
