#include "ssnforge/ontology/mapping.h"

#include "ssnforge/ontology/mint.h"
#include "ssnforge/ontology/validate.h"

namespace ssnforge::ontology {
namespace {

using rdf::Graph;
using rdf::Iri;
using rdf::Literal;

Literal double_literal(const Decimal& d, const Namespaces& ns) {
  return Literal(d.lexical(), ns.xsd_term("double"));
}

void emit_measurement(Graph& g, const Iri& cap, const SensorType& type,
                      const std::string& slug, const char* kind,
                      const char* ssn_class, const Measurement& m,
                      const Namespaces& ns) {
  Iri node = mint_iri(MintKind::kMeasurement, {type.id, slug, kind}, ns);
  g.insert(cap, ns.ssn_term("hasMeasurementProperty"), node);
  g.insert(node, ns.rdf_term("type"), ns.ssn_term(ssn_class));
  g.insert(node, ns.oiot_term("hasValue"), double_literal(m.value, ns));
  g.insert(node, ns.oiot_term("hasUnit"), m.unit);
}

}  // namespace

Iri type_iri(const SensorType& type, const Namespaces& ns) {
  return mint_iri(MintKind::kType, {type.id}, ns);
}

Iri instance_iri(const SensorInstance& instance, const Namespaces& ns) {
  return mint_iri(MintKind::kInstance, {instance.id}, ns);
}

Graph type_to_graph(const SensorType& type, const Namespaces& ns) {
  if (auto v = validate_type(type); !v.empty()) {
    throw InvalidDefinition("sensor type", std::move(v));
  }
  Graph g;
  ns.bind_prefixes(g);
  const Iri t = type_iri(type, ns);
  const Iri rdf_type = ns.rdf_term("type");

  g.insert(t, rdf_type, ns.oiot_term("SensorType"));
  g.insert(t, ns.rdfs_term("subClassOf"), ns.ssn_term("Sensor"));
  g.insert(t, ns.rdfs_term("label"), Literal(type.name));

  for (const auto& prop : type.observes) {
    g.insert(t, ns.ssn_term("observes"), prop.iri);
    const MeasurementCapability* cap = type.capability_for(prop.iri);
    if (cap == nullptr) continue;
    const std::string slug = property_slug(prop.iri);
    Iri c = mint_iri(MintKind::kCapability, {type.id, slug}, ns);
    g.insert(t, ns.ssn_term("hasMeasurementCapability"), c);
    g.insert(c, rdf_type, ns.ssn_term("MeasurementCapability"));
    g.insert(c, ns.ssn_term("forProperty"), prop.iri);
    if (cap->accuracy) {
      emit_measurement(g, c, type, slug, "accuracy", "Accuracy", *cap->accuracy, ns);
    }
    if (cap->frequency) {
      emit_measurement(g, c, type, slug, "frequency", "Frequency", *cap->frequency, ns);
    }
  }
  return g;
}

Graph instance_to_graph(const SensorInstance& instance, const SensorType& type,
                        const Namespaces& ns) {
  if (instance.type_id != type.id) {
    throw TypeMismatch("instance '" + instance.id + "' has type '" + instance.type_id +
                       "', not '" + type.id + "'");
  }
  if (auto v = validate_instance(instance, type); !v.empty()) {
    throw InvalidDefinition("sensor instance", std::move(v));
  }
  Graph g;
  ns.bind_prefixes(g);
  const Iri i = instance_iri(instance, ns);
  const Iri f = resolve_feature_of_interest(instance.feature_of_interest, ns);
  const Iri rdf_type = ns.rdf_term("type");

  g.insert(i, rdf_type, type_iri(type, ns));
  g.insert(i, ns.rdfs_term("label"), Literal(instance.name));
  if (instance.description) {
    g.insert(i, ns.rdfs_term("comment"), Literal(*instance.description));
  }
  if (instance.owner) g.insert(i, ns.oiot_term("hasOwner"), Literal(*instance.owner));
  g.insert(i, ns.geo_term("lat"), double_literal(instance.latitude, ns));
  g.insert(i, ns.geo_term("long"), double_literal(instance.longitude, ns));
  g.insert(i, ns.oiot_term("hasFeatureOfInterest"), f);
  g.insert(f, rdf_type, ns.ssn_term("FeatureOfInterest"));

  for (const auto& b : instance.bindings) {
    Iri node = mint_iri(MintKind::kBinding, {instance.id, property_slug(b.property)}, ns);
    g.insert(i, ns.ssn_term("observes"), b.property);
    g.insert(i, ns.oiot_term("hasBinding"), node);
    g.insert(node, ns.oiot_term("forProperty"), b.property);
    g.insert(node, ns.oiot_term("hasUnit"), b.unit);
    g.insert(node, ns.oiot_term("xgsnField"), Literal(b.xgsn_field, ns.xsd_term("string")));
  }
  return g;
}

}  // namespace ssnforge::ontology
