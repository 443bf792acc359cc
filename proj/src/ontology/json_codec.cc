#include "ssnforge/ontology/json_codec.h"

#include <cmath>

namespace ssnforge::ontology {
namespace {

using nlohmann::json;

json decimal_json(const Decimal& d) {
  if (d.is_shortest_form()) return d.value();
  return d.lexical();
}

json measurement_json(const Measurement& m) {
  return json{{"value", decimal_json(m.value)}, {"unit", m.unit.str()}};
}

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_, "expected an object");
  }

  const json* find(const char* key) const {
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  std::string at(const char* key) const { return path_ + "/" + key; }

  std::string string(const char* key) const {
    const json* v = find(key);
    if (v == nullptr) throw SchemaError(at(key), "required member is missing");
    if (!v->is_string()) throw SchemaError(at(key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<std::string> optional_string(const char* key) const {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) throw SchemaError(at(key), "expected a string");
    return v->get<std::string>();
  }

  rdf::Iri iri(const char* key) const {
    std::string s = string(key);
    if (!rdf::Iri::is_valid(s)) throw SchemaError(at(key), "not an absolute IRI: '" + s + "'");
    return rdf::Iri(s);
  }

  Decimal decimal(const char* key) const {
    const json* v = find(key);
    if (v == nullptr) throw SchemaError(at(key), "required member is missing");
    if (v->is_number()) {
      double d = v->get<double>();
      if (!std::isfinite(d)) throw SchemaError(at(key), "number out of range");
      return Decimal::from_double(d);
    }
    if (v->is_string()) {
      if (auto d = Decimal::parse(v->get<std::string>())) return *d;
      throw SchemaError(at(key), "not a decimal number: '" + v->get<std::string>() + "'");
    }
    throw SchemaError(at(key), "expected a number");
  }

  std::optional<Measurement> measurement(const char* key) const {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    Reader r(*v, at(key));
    return Measurement{r.decimal("value"), r.iri("unit")};
  }

  // Calls fn(element, path) for each element; absent means empty.
  template <typename Fn>
  void each(const char* key, Fn fn) const {
    const json* v = find(key);
    if (v == nullptr) return;
    if (!v->is_array()) throw SchemaError(at(key), "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      fn(Reader((*v)[i], at(key) + "/" + std::to_string(i)));
    }
  }

 private:
  const json& j_;
  std::string path_;
};

}  // namespace

SchemaError::SchemaError(std::string path, const std::string& message)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

json to_json(const SensorType& type) {
  json observes = json::array();
  for (const auto& p : type.observes) {
    json o{{"iri", p.iri.str()}};
    if (p.label) o["label"] = *p.label;
    observes.push_back(std::move(o));
  }
  json caps = json::array();
  for (const auto& c : type.capabilities) {
    json o{{"property", c.property.str()}};
    if (c.accuracy) o["accuracy"] = measurement_json(*c.accuracy);
    if (c.frequency) o["frequency"] = measurement_json(*c.frequency);
    caps.push_back(std::move(o));
  }
  return json{{"id", type.id},
              {"name", type.name},
              {"observes", std::move(observes)},
              {"capabilities", std::move(caps)}};
}

json to_json(const SensorInstance& instance) {
  json bindings = json::array();
  for (const auto& b : instance.bindings) {
    bindings.push_back(json{{"property", b.property.str()},
                            {"unit", b.unit.str()},
                            {"xgsnField", b.xgsn_field}});
  }
  json j{{"id", instance.id},
         {"name", instance.name},
         {"typeId", instance.type_id}};
  if (instance.owner) j["owner"] = *instance.owner;
  if (instance.description) j["description"] = *instance.description;
  j["latitude"] = decimal_json(instance.latitude);
  j["longitude"] = decimal_json(instance.longitude);
  j["featureOfInterest"] = instance.feature_of_interest;
  j["bindings"] = std::move(bindings);
  return j;
}

json to_json(const Violation& violation) {
  return json{{"code", violation.code}, {"message", violation.message}};
}

SensorType sensor_type_from_json(const json& j) {
  Reader r(j, "");
  SensorType t;
  t.id = r.string("id");
  t.name = r.string("name");
  r.each("observes", [&](const Reader& p) {
    t.observes.push_back({p.iri("iri"), p.optional_string("label")});
  });
  r.each("capabilities", [&](const Reader& c) {
    t.capabilities.push_back(
        {c.iri("property"), c.measurement("accuracy"), c.measurement("frequency")});
  });
  return t;
}

SensorInstance sensor_instance_from_json(const json& j) {
  Reader r(j, "");
  SensorInstance i{
      r.string("id"),
      r.string("name"),
      r.string("typeId"),
      r.optional_string("owner"),
      r.optional_string("description"),
      r.decimal("latitude"),
      r.decimal("longitude"),
      r.string("featureOfInterest"),
      {},
  };
  r.each("bindings", [&](const Reader& b) {
    i.bindings.push_back({b.iri("property"), b.iri("unit"), b.string("xgsnField")});
  });
  return i;
}

}  // namespace ssnforge::ontology
