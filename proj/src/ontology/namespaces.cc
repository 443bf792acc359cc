#include "ssnforge/ontology/namespaces.h"

#include <string>

namespace ssnforge::ontology {
namespace {

rdf::Iri join(const rdf::Iri& ns, std::string_view local) {
  return rdf::Iri(ns.str() + std::string(local));
}

rdf::Iri checked_base(std::string_view base) {
  rdf::Iri iri{std::string(base)};
  char last = iri.str().back();
  if (last != '/' && last != '#') {
    throw InvalidTerm("base IRI must end with '/' or '#': " + iri.str());
  }
  return iri;
}

}  // namespace

Namespaces Namespaces::standard(std::string_view base) {
  return Namespaces{
      rdf::Iri(std::string(ns::kRdf)),  rdf::Iri(std::string(ns::kRdfs)),
      rdf::Iri(std::string(ns::kXsd)),  rdf::Iri(std::string(ns::kSsn)),
      rdf::Iri(std::string(ns::kGeo)),  rdf::Iri(std::string(ns::kOiot)),
      rdf::Iri(std::string(ns::kUnit)), checked_base(base),
  };
}

rdf::Iri Namespaces::rdf_term(std::string_view l) const { return join(rdf, l); }
rdf::Iri Namespaces::rdfs_term(std::string_view l) const { return join(rdfs, l); }
rdf::Iri Namespaces::xsd_term(std::string_view l) const { return join(xsd, l); }
rdf::Iri Namespaces::ssn_term(std::string_view l) const { return join(ssn, l); }
rdf::Iri Namespaces::geo_term(std::string_view l) const { return join(geo, l); }
rdf::Iri Namespaces::oiot_term(std::string_view l) const { return join(oiot, l); }
rdf::Iri Namespaces::unit_term(std::string_view l) const { return join(unit, l); }

void Namespaces::bind_prefixes(rdf::Graph& graph) const {
  graph.set_prefix("rdf", rdf);
  graph.set_prefix("rdfs", rdfs);
  graph.set_prefix("xsd", xsd);
  graph.set_prefix("ssn", ssn);
  graph.set_prefix("geo", geo);
  graph.set_prefix("oiot", oiot);
  graph.set_prefix("unit", unit);
}

}  // namespace ssnforge::ontology
