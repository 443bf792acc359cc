#ifndef SSNFORGE_ONTOLOGY_MINT_H_
#define SSNFORGE_ONTOLOGY_MINT_H_

#include <span>
#include <string>
#include <string_view>

#include "ssnforge/ontology/model.h"
#include "ssnforge/ontology/namespaces.h"

namespace ssnforge::ontology {

enum class MintKind { kType, kInstance, kCapability, kMeasurement, kBinding, kFoi };

// "types", "sensors", "cap", "m", "bind", "foi".
std::string_view kind_segment(MintKind kind);

// True for [a-z0-9-]+.
bool is_slug(std::string_view s);

// base + segment + "/" + parts joined by "/". Parts are lower-cased first;
// throws BadSlug if one is not a slug afterwards.
rdf::Iri mint_iri(MintKind kind, std::span<const std::string> parts,
                  const Namespaces& ns);
rdf::Iri mint_iri(MintKind kind, std::initializer_list<std::string> parts,
                  const Namespaces& ns);

// Slug of the IRI's local name (text after the last '#' or '/'): lower-cased,
// runs of other characters collapsed to '-', trimmed. Empty if nothing
// usable remains.
std::string property_slug(const rdf::Iri& property);

// The feature-of-interest IRI: the value itself when it is an absolute IRI,
// otherwise foi/<slug>. Throws BadSlug when it is neither.
rdf::Iri resolve_feature_of_interest(std::string_view value, const Namespaces& ns);

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_MINT_H_
