#pragma once

#include <nlohmann/json.hpp>

#include "poincare/error.hpp"
#include "poincare/partition.hpp"
#include "poincare/positivity.hpp"
#include "poincare/quantum.hpp"
#include "poincare/rational.hpp"
#include "poincare/series.hpp"

// JSON codecs. Rationals are always strings in lowest terms ("-3/2");
// decoding also accepts JSON integers. Decoders throw SchemaError for
// documents of the wrong shape; value-level violations (a negative root,
// q = 0) surface as poincare::Error from the constructors they feed.
namespace poincare::json {

using nlohmann::json;

class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json encode(const Rational& value);
json encode(const Partition& p);
json encode(const TruncatedSeries& s);
json encode(const FactoredSeries& f);
json encode(const QuantumSpaceSpec& spec);
json encode(const DimensionTable& table);
json encode(const PositivityReport& report);
json encode(const PPReport& report);
json encode(const Classification& c);
json encode(const Error& e);

Rational decode_rational(const json& j);
std::vector<Rational> decode_rationals(const json& j);
Partition decode_partition(const json& j);
std::vector<int> decode_integers(const json& j);
TruncatedSeries decode_series(const json& j);
FactoredSeries decode_factored(const json& j);
QuantumSpaceSpec decode_spec(const json& j);

}  // namespace poincare::json
