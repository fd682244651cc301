#include "poincare/json_io.hpp"

#include <string>

namespace poincare::json {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

json encode_rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(encode(v));
  return out;
}

json encode_integer(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str(10));
}

json encode_family(const GeometricFamily& fam) {
  return {{"scale", encode(fam.scale)}, {"ratio", encode(fam.ratio)}};
}

GeometricFamily decode_family(const json& j) {
  return {decode_rational(require(j, "scale")), decode_rational(require(j, "ratio"))};
}

json encode_witness(const MinorWitness& w) {
  return {{"rows", std::vector<int>(w.minor.rows().begin(), w.minor.rows().end())},
          {"cols", std::vector<int>(w.minor.cols().begin(), w.minor.cols().end())},
          {"value", encode(w.value)}};
}

}  // namespace

json encode(const Rational& value) { return to_string(value); }

json encode(const Partition& p) {
  return std::vector<int>(p.parts().begin(), p.parts().end());
}

json encode(const TruncatedSeries& s) {
  return {{"order", s.order()}, {"coeffs", encode_rationals(s.coeffs())}};
}

json encode(const FactoredSeries& f) {
  json out{{"roots", encode_rationals(f.roots)},
           {"poles", encode_rationals(f.poles)},
           {"gamma", encode(f.gamma)}};
  if (f.root_family) out["root_family"] = encode_family(*f.root_family);
  if (f.pole_family) out["pole_family"] = encode_family(*f.pole_family);
  return out;
}

json encode(const QuantumSpaceSpec& spec) {
  return {{"roots", encode_rationals(spec.roots())},
          {"poles", encode_rationals(spec.poles())},
          {"q", encode(spec.q())}};
}

json encode(const DimensionTable& table) {
  json entries = json::array();
  for (const auto& [lambda, dim] : table.entries()) {
    entries.push_back({{"partition", encode(lambda)}, {"dim", encode_integer(dim)}});
  }
  return {{"max_weight", table.max_weight()}, {"entries", std::move(entries)}};
}

json encode(const PositivityReport& report) {
  json out{{"verdict", report.passed ? "pass" : "fail"},
           {"bounds",
            {{"order", report.bounds.max_order}, {"index", report.bounds.max_index}}}};
  if (report.witness) out["witness"] = encode_witness(*report.witness);
  return out;
}

json encode(const PPReport& report) {
  json out{{"certified", report.certified()},
           {"reason", report.reason},
           {"contained_minors", encode(report.contained_minors)}};
  out["condition"] = report.condition ? json(*report.condition) : json(nullptr);
  return out;
}

json encode(const Classification& c) {
  json checks = json::array();
  for (const auto& check : c.bound_checks) {
    checks.push_back(
        {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  json out{{"kind", std::string(to_string(c.kind))},
           {"reciprocal", c.reciprocal},
           {"integrality_ok", c.integrality_ok},
           {"hecke_plausible", c.hecke_plausible()},
           {"max_weight", c.max_weight},
           {"bound_checks", std::move(checks)}};
  if (c.rank) out["rank"] = *c.rank;
  if (c.super_rank) out["super_rank"] = {c.super_rank->first, c.super_rank->second};
  if (c.extremal_closed_form) {
    out["extremal_closed_form"] = encode(*c.extremal_closed_form);
  }
  return out;
}

json encode(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

Rational decode_rational(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("expected a rational as a string \"p/q\" or an integer, got " +
                    j.dump());
}

std::vector<Rational> decode_rationals(const json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(decode_rational(v));
  return out;
}

std::vector<int> decode_integers(const json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError("expected an integer, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

Partition decode_partition(const json& j) {
  const auto parts = decode_integers(j);
  return Partition::from_parts(parts);
}

TruncatedSeries decode_series(const json& j) {
  auto coeffs = decode_rationals(require(j, "coeffs"));
  if (coeffs.empty()) throw SchemaError("a series needs at least one coefficient");
  if (j.contains("order")) {
    const auto& order = j.at("order");
    if (!order.is_number_integer() ||
        order.get<long long>() + 1 != static_cast<long long>(coeffs.size())) {
      throw SchemaError("'order' must equal the number of coefficients minus one");
    }
  }
  return TruncatedSeries(std::move(coeffs));
}

FactoredSeries decode_factored(const json& j) {
  if (!j.is_object()) throw SchemaError("expected an object with roots/poles");
  FactoredSeries f;
  if (j.contains("roots")) f.roots = decode_rationals(j.at("roots"));
  if (j.contains("poles")) f.poles = decode_rationals(j.at("poles"));
  if (j.contains("gamma")) f.gamma = decode_rational(j.at("gamma"));
  if (j.contains("root_family")) f.root_family = decode_family(j.at("root_family"));
  if (j.contains("pole_family")) f.pole_family = decode_family(j.at("pole_family"));
  return f;
}

QuantumSpaceSpec decode_spec(const json& j) {
  auto f = decode_factored(j);
  const Rational q = j.contains("q") ? decode_rational(j.at("q")) : Rational(1);
  return QuantumSpaceSpec(std::move(f), q);
}

}  // namespace poincare::json
