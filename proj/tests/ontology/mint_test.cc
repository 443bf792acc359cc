#include "ssnforge/ontology/mint.h"

#include <gtest/gtest.h>

#include "ssnforge/errors.h"

namespace ssnforge::ontology {
namespace {

const Namespaces kNs = Namespaces::standard();

TEST(MintTest, Examples) {
  EXPECT_EQ(mint_iri(MintKind::kType, {"weatherstation"}, kNs).str(),
            "http://example.org/oi/types/weatherstation");
  EXPECT_EQ(mint_iri(MintKind::kInstance, {"demo-weatherstation"}, kNs).str(),
            "http://example.org/oi/sensors/demo-weatherstation");
  EXPECT_EQ(mint_iri(MintKind::kFoi, {"crop-growth"}, kNs).str(),
            "http://example.org/oi/foi/crop-growth");
  EXPECT_EQ(mint_iri(MintKind::kMeasurement, {"ws", "airtemperature", "accuracy"}, kNs).str(),
            "http://example.org/oi/m/ws/airtemperature/accuracy");
  EXPECT_EQ(mint_iri(MintKind::kCapability, {"ws", "humidity"}, kNs).str(),
            "http://example.org/oi/cap/ws/humidity");
  EXPECT_EQ(mint_iri(MintKind::kBinding, {"x", "humidity"}, kNs).str(),
            "http://example.org/oi/bind/x/humidity");
}

TEST(MintTest, LowercasesParts) {
  EXPECT_EQ(mint_iri(MintKind::kType, {"WeatherStation"}, kNs),
            mint_iri(MintKind::kType, {"weatherstation"}, kNs));
}

TEST(MintTest, BadSlug) {
  EXPECT_THROW(mint_iri(MintKind::kType, {"weather station"}, kNs), BadSlug);
  EXPECT_THROW(mint_iri(MintKind::kType, {""}, kNs), BadSlug);
  EXPECT_THROW(mint_iri(MintKind::kType, {"a/b"}, kNs), BadSlug);
}

TEST(MintTest, CustomBase) {
  auto ns = Namespaces::standard("urn:reg#");
  EXPECT_EQ(mint_iri(MintKind::kType, {"t"}, ns).str(), "urn:reg#types/t");
  EXPECT_THROW(Namespaces::standard("http://example.org/oi"), InvalidTerm);
  EXPECT_THROW(Namespaces::standard("not an iri/"), InvalidTerm);
}

TEST(MintTest, Slugs) {
  EXPECT_TRUE(is_slug("demo-weatherstation"));
  EXPECT_TRUE(is_slug("a1"));
  EXPECT_FALSE(is_slug(""));
  EXPECT_FALSE(is_slug("A"));
  EXPECT_FALSE(is_slug("a_b"));
}

TEST(MintTest, PropertySlug) {
  EXPECT_EQ(property_slug(rdf::Iri("http://openiot.eu/ontology/ns/AirTemperature")),
            "airtemperature");
  EXPECT_EQ(property_slug(rdf::Iri("http://x.org/p#Wind_Speed")), "wind-speed");
  EXPECT_EQ(property_slug(rdf::Iri("http://x.org/p/__A..b__")), "a-b");
  EXPECT_EQ(property_slug(rdf::Iri("http://x.org/p/")), "");
  EXPECT_EQ(property_slug(rdf::Iri("urn:x")), "x");
}

TEST(MintTest, FeatureOfInterest) {
  EXPECT_EQ(resolve_feature_of_interest("crop-growth", kNs).str(),
            "http://example.org/oi/foi/crop-growth");
  EXPECT_EQ(resolve_feature_of_interest("http://dbpedia.org/resource/Crop", kNs).str(),
            "http://dbpedia.org/resource/Crop");
  EXPECT_THROW(resolve_feature_of_interest("crop growth", kNs), BadSlug);
}

}  // namespace
}  // namespace ssnforge::ontology
