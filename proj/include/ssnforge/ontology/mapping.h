#ifndef SSNFORGE_ONTOLOGY_MAPPING_H_
#define SSNFORGE_ONTOLOGY_MAPPING_H_

#include "ssnforge/ontology/model.h"
#include "ssnforge/ontology/namespaces.h"
#include "ssnforge/rdf/graph.h"

namespace ssnforge::ontology {

rdf::Iri type_iri(const SensorType& type, const Namespaces& ns);
rdf::Iri instance_iri(const SensorInstance& instance, const Namespaces& ns);

// Sensor type as an SSN sensor subclass:
//
//   T a oiot:SensorType ; rdfs:subClassOf ssn:Sensor ; rdfs:label name .
//   T ssn:observes P .                                  (per property)
//   T ssn:hasMeasurementCapability C .                  (if P has one)
//   C a ssn:MeasurementCapability ; ssn:forProperty P .
//   C ssn:hasMeasurementProperty M .                    (per accuracy/frequency)
//   M a ssn:Accuracy|ssn:Frequency ; oiot:hasValue "v"^^xsd:double ;
//     oiot:hasUnit U .
//
// Throws InvalidDefinition when validate_type() reports violations.
rdf::Graph type_to_graph(const SensorType& type, const Namespaces& ns);

// Deployed sensor:
//
//   I a T ; rdfs:label name ; [rdfs:comment description] ; [oiot:hasOwner owner] ;
//     geo:lat "lat"^^xsd:double ; geo:long "long"^^xsd:double ;
//     oiot:hasFeatureOfInterest F .
//   F a ssn:FeatureOfInterest .
//   I ssn:observes P ; oiot:hasBinding B .              (per binding)
//   B oiot:forProperty P ; oiot:hasUnit U ; oiot:xgsnField "field"^^xsd:string .
//
// Throws TypeMismatch if instance.type_id != type.id, InvalidDefinition on
// violations.
rdf::Graph instance_to_graph(const SensorInstance& instance,
                             const SensorType& type, const Namespaces& ns);

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_MAPPING_H_
