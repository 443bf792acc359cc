#include "ssnforge/ontology/json_codec.h"

#include <gtest/gtest.h>

#include "demo.h"
#include "generators.h"

namespace ssnforge::ontology {
namespace {

using nlohmann::json;

TEST(JsonCodecTest, WeatherStationShape) {
  json j = to_json(testing::weather_station());
  EXPECT_EQ(j["id"], "weatherstation");
  EXPECT_EQ(j["observes"][0]["iri"], testing::kAirTemperature);
  EXPECT_EQ(j["capabilities"][0]["accuracy"]["value"], 0.5);
  EXPECT_EQ(j["capabilities"][1]["accuracy"]["value"], 2);
  EXPECT_EQ(j["capabilities"][0]["frequency"]["unit"], testing::kHertz);
  EXPECT_EQ(sensor_type_from_json(j), testing::weather_station());
}

TEST(JsonCodecTest, DemoInstanceShape) {
  json j = to_json(testing::demo_weatherstation());
  EXPECT_EQ(j["typeId"], "weatherstation");
  EXPECT_EQ(j["latitude"], 46.5191);
  EXPECT_EQ(j["featureOfInterest"], "crop-growth");
  EXPECT_EQ(j["bindings"][1]["xgsnField"], "hum");
  EXPECT_EQ(sensor_instance_from_json(j), testing::demo_weatherstation());
}

TEST(JsonCodecTest, NonShortestDecimalsTravelAsStrings) {
  SensorType t = testing::weather_station();
  t.capabilities[0].accuracy->value = *Decimal::parse("0.50");
  json j = to_json(t);
  EXPECT_EQ(j["capabilities"][0]["accuracy"]["value"], "0.50");
  EXPECT_EQ(sensor_type_from_json(j).capabilities[0].accuracy->value.lexical(), "0.50");
}

TEST(JsonCodecTest, OptionalMembers) {
  json j = json::parse(R"({"id":"x","name":"X","typeId":"t","latitude":1,"longitude":"2.0",
                           "featureOfInterest":"f","owner":null})");
  SensorInstance i = sensor_instance_from_json(j);
  EXPECT_FALSE(i.owner);
  EXPECT_FALSE(i.description);
  EXPECT_TRUE(i.bindings.empty());
  EXPECT_EQ(i.latitude.lexical(), "1");
  EXPECT_EQ(i.longitude.lexical(), "2.0");
  EXPECT_FALSE(to_json(i).contains("owner"));
}

void expect_schema_error(const json& j, const std::string& path, bool type) {
  try {
    if (type) {
      sensor_type_from_json(j);
    } else {
      sensor_instance_from_json(j);
    }
    FAIL() << "expected SchemaError at " << path;
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), path);
  }
}

TEST(JsonCodecTest, SchemaErrorsCarryPointer) {
  expect_schema_error(json::array(), "", true);
  expect_schema_error(json{{"name", "x"}}, "/id", true);
  expect_schema_error(json{{"id", 3}, {"name", "x"}}, "/id", true);
  expect_schema_error(json::parse(R"({"id":"a","name":"b","observes":{}})"), "/observes", true);
  expect_schema_error(json::parse(R"({"id":"a","name":"b","observes":[{"iri":"no iri"}]})"),
                      "/observes/0/iri", true);
  expect_schema_error(
      json::parse(R"({"id":"a","name":"b","observes":[],"capabilities":[
        {"property":"http://p/x","accuracy":{"value":"abc","unit":"http://u/x"}}]})"),
      "/capabilities/0/accuracy/value", true);
  expect_schema_error(
      json::parse(R"({"id":"a","name":"b","observes":[],"capabilities":[
        {"property":"http://p/x","frequency":{"value":true,"unit":"http://u/x"}}]})"),
      "/capabilities/0/frequency/value", true);
  expect_schema_error(json::parse(R"({"id":"a","name":"b","typeId":"t","latitude":1,
                                      "longitude":2})"),
                      "/featureOfInterest", false);
  expect_schema_error(json::parse(R"({"id":"a","name":"b","typeId":"t","latitude":1,
                                      "longitude":2,"featureOfInterest":"f",
                                      "bindings":[{"property":"http://p/x","unit":"http://u/x"}]})"),
                      "/bindings/0/xgsnField", false);
}

TEST(JsonCodecTest, RandomDefinitionsRoundTrip) {
  testing::Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    auto t = testing::random_sensor_type(rng, "t" + std::to_string(n));
    auto i = testing::random_sensor_instance(rng, t, "i" + std::to_string(n));
    ASSERT_EQ(sensor_type_from_json(json::parse(to_json(t).dump())), t);
    ASSERT_EQ(sensor_instance_from_json(json::parse(to_json(i).dump())), i);
  }
}

}  // namespace
}  // namespace ssnforge::ontology
