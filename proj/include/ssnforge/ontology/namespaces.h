#ifndef SSNFORGE_ONTOLOGY_NAMESPACES_H_
#define SSNFORGE_ONTOLOGY_NAMESPACES_H_

#include <array>
#include <string_view>

#include "ssnforge/rdf/graph.h"

namespace ssnforge::ontology {

inline constexpr std::string_view kDefaultBaseIri = "http://example.org/oi/";

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSsn = "http://purl.oclc.org/NET/ssnx/ssn#";
inline constexpr std::string_view kGeo = "http://www.w3.org/2003/01/geo/wgs84_pos#";
inline constexpr std::string_view kOiot = "http://openiot.eu/ontology/ns/";
inline constexpr std::string_view kUnit = "http://qudt.org/vocab/unit#";
}  // namespace ns

// Unit local names shipped as presets.
namespace units {
inline constexpr std::string_view kKelvin = "Kelvin";
inline constexpr std::string_view kDegreeCelsius = "DegreeCelsius";
inline constexpr std::string_view kPercent = "Percent";
inline constexpr std::string_view kHertz = "Hertz";
inline constexpr std::array<std::string_view, 4> kShipped = {
    kKelvin, kDegreeCelsius, kPercent, kHertz};
}  // namespace units

struct Namespaces {
  rdf::Iri rdf;
  rdf::Iri rdfs;
  rdf::Iri xsd;
  rdf::Iri ssn;
  rdf::Iri geo;
  rdf::Iri oiot;
  rdf::Iri unit;
  // Root under which types, sensors, capabilities... are minted.
  rdf::Iri base;

  // The standard vocabulary with the given minting base. Throws
  // InvalidTerm unless `base` is an IRI ending in '/' or '#'.
  static Namespaces standard(std::string_view base = kDefaultBaseIri);

  rdf::Iri rdf_term(std::string_view local) const;
  rdf::Iri rdfs_term(std::string_view local) const;
  rdf::Iri xsd_term(std::string_view local) const;
  rdf::Iri ssn_term(std::string_view local) const;
  rdf::Iri geo_term(std::string_view local) const;
  rdf::Iri oiot_term(std::string_view local) const;
  rdf::Iri unit_term(std::string_view local) const;

  // Binds rdf, rdfs, xsd, ssn, geo, oiot and unit on `graph`.
  void bind_prefixes(rdf::Graph& graph) const;

  friend bool operator==(const Namespaces&, const Namespaces&) = default;
};

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_NAMESPACES_H_
