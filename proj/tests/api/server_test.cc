#include "ssnforge/api/server.h"

#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "demo.h"
#include "ssnforge/metadata/metadata.h"
#include "ssnforge/rdf/turtle.h"
#include "temp_dir.h"

namespace ssnforge::api {
namespace {

using nlohmann::json;
using registry::Registry;

constexpr const char* kJson = "application/json";

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override { start(); }
  void TearDown() override { shutdown(); }

  void start() {
    Registry::Options o;
    o.data_dir = dir_.path();
    registry_ = std::make_unique<Registry>(o);
    server_ = std::make_unique<ApiServer>(*registry_, ServerOptions{"127.0.0.1", 0, std::nullopt});
    port_ = server_->bind();
    thread_ = std::thread([this] { server_->listen(); });
    server_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void shutdown() {
    server_->stop();
    thread_.join();
    server_.reset();
    registry_.reset();
  }

  httplib::Result post(const std::string& path, const std::string& body,
                       const char* type = kJson) {
    return client_->Post(path, body, type);
  }

  httplib::Result get(const std::string& path, const std::string& accept = "") {
    httplib::Headers h;
    if (!accept.empty()) h.emplace("Accept", accept);
    return client_->Get(path, h);
  }

  void register_demo() {
    ASSERT_EQ(post("/api/types", testing::weather_station_json())->status, 201);
    ASSERT_EQ(post("/api/instances", testing::demo_weatherstation_json())->status, 201);
  }

  std::string store_bytes() {
    auto p = dir_ / "store.nq";
    return std::filesystem::exists(p) ? testing::read_file(p) : "";
  }
  std::string index_bytes() {
    auto p = dir_ / "index.json";
    return std::filesystem::exists(p) ? testing::read_file(p) : "";
  }

  static void expect_error(const httplib::Result& r, int status, const std::string& code) {
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, status);
    EXPECT_EQ(r->get_header_value("Content-Type"), kJson);
    json body = json::parse(r->body);
    EXPECT_EQ(body["httpStatus"], status);
    EXPECT_EQ(body["code"], code) << r->body;
    EXPECT_FALSE(body["message"].get<std::string>().empty());
  }

  testing::TempDir dir_;
  std::unique_ptr<Registry> registry_;
  std::unique_ptr<ApiServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, HealthOnFreshServer) {
  auto r = get("/health");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(json::parse(r->body), json::parse(R"({"status":"ok","types":0,"instances":0})"));
}

TEST_F(ServerTest, EmptyLists) {
  EXPECT_EQ(get("/api/types")->body, "[]");
  EXPECT_EQ(get("/api/instances")->body, "[]");
}

TEST_F(ServerTest, RegisterType) {
  auto r = post("/api/types", testing::weather_station_json());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 201);
  EXPECT_EQ(json::parse(r->body),
            json::parse(R"({"id":"weatherstation",
                            "iri":"http://example.org/oi/types/weatherstation",
                            "graphIri":"http://example.org/oi/types/weatherstation/graph",
                            "tripleCount":27})"));
  expect_error(post("/api/types", testing::weather_station_json()), 409, "ALREADY_EXISTS");
}

TEST_F(ServerTest, RegisterTypeValidation) {
  json t = json::parse(testing::weather_station_json());
  t["observes"] = json::array();
  t["capabilities"] = json::array();
  auto r = post("/api/types", t.dump());
  expect_error(r, 422, "EMPTY_OBSERVES");
  EXPECT_EQ(json::parse(r->body)["details"][0]["code"], "EMPTY_OBSERVES");
  expect_error(post("/api/types", "{not json"), 400, "MALFORMED_JSON");
  expect_error(post("/api/types", R"({"id":"x"})"), 422, "SCHEMA_ERROR");
  expect_error(post("/api/types", testing::weather_station_json(), "text/plain"), 415,
               "UNSUPPORTED_MEDIA_TYPE");
  EXPECT_EQ(store_bytes(), "");
}

TEST_F(ServerTest, GetTypeNegotiation) {
  register_demo();
  auto j = get("/api/types/weatherstation", kJson);
  ASSERT_EQ(j->status, 200);
  json body = json::parse(j->body);
  EXPECT_EQ(body["name"], "WeatherStation");
  EXPECT_EQ(body["tripleCount"], 27);
  EXPECT_EQ(body["observes"].size(), 2u);

  auto t = get("/api/types/weatherstation", "text/turtle");
  ASSERT_EQ(t->status, 200);
  EXPECT_EQ(t->get_header_value("Content-Type").rfind("text/turtle", 0), 0u);
  EXPECT_EQ(rdf::parse_turtle(t->body).size(), 27u);

  auto q = get("/api/types/weatherstation", "application/xml;q=1, text/turtle;q=0.5");
  EXPECT_EQ(q->status, 200);
  EXPECT_EQ(q->body, t->body);
  auto w = get("/api/types/weatherstation", "text/turtle;q=0.4, application/json;q=0.9");
  EXPECT_EQ(w->get_header_value("Content-Type"), kJson);
  expect_error(get("/api/types/weatherstation", "application/xml"), 415, "UNSUPPORTED_MEDIA_TYPE");
  expect_error(get("/api/types/nope"), 404, "NOT_FOUND");
  expect_error(get("/api/instances/nope"), 404, "NOT_FOUND");
}

TEST_F(ServerTest, ListsAfterRegistration) {
  register_demo();
  json types = json::parse(get("/api/types")->body);
  ASSERT_EQ(types.size(), 1u);
  EXPECT_EQ(types[0]["id"], "weatherstation");
  json inst = json::parse(get("/api/instances")->body);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0]["tripleCount"], 18);
  EXPECT_EQ(rdf::parse_turtle(get("/api/instances", "text/turtle")->body).size(), 18u);
  EXPECT_EQ(json::parse(get("/health")->body)["instances"], 1);
}

TEST_F(ServerTest, RegisterInstance) {
  ASSERT_EQ(post("/api/types", testing::weather_station_json())->status, 201);
  auto r = post("/api/instances", testing::demo_weatherstation_json());
  ASSERT_EQ(r->status, 201);
  EXPECT_EQ(json::parse(r->body)["tripleCount"], 18);
  json body = json::parse(get("/api/instances/demo-weatherstation")->body);
  EXPECT_EQ(body["owner"], "OpenIoT demo deployment");
  EXPECT_EQ(body["latitude"], 46.5191);
  expect_error(post("/api/instances", testing::demo_weatherstation_json()), 409,
               "ALREADY_EXISTS");
}

TEST_F(ServerTest, InstanceErrorsLeaveStoreUntouched) {
  ASSERT_EQ(post("/api/types", testing::weather_station_json())->status, 201);
  const std::string store = store_bytes();
  const std::string index = index_bytes();

  json lat = json::parse(testing::demo_weatherstation_json());
  lat["latitude"] = 91;
  expect_error(post("/api/instances", lat.dump()), 422, "LAT_RANGE");

  json unknown = json::parse(testing::demo_weatherstation_json());
  unknown["typeId"] = "nosuchtype";
  expect_error(post("/api/instances", unknown.dump()), 422, "UNKNOWN_TYPE");

  json partial = json::parse(testing::demo_weatherstation_json());
  partial["bindings"].erase(1);
  expect_error(post("/api/instances", partial.dump()), 422, "BINDING_MISMATCH");

  EXPECT_EQ(store_bytes(), store);
  EXPECT_EQ(index_bytes(), index);
}

TEST_F(ServerTest, UpdateType) {
  register_demo();
  json t = json::parse(testing::weather_station_json());
  t["name"] = "Renamed";
  auto r = client_->Put("/api/types/weatherstation", t.dump(), kJson);
  ASSERT_EQ(r->status, 200);
  EXPECT_EQ(json::parse(get("/api/types/weatherstation")->body)["name"], "Renamed");

  const std::string store = store_bytes();
  json removed = t;
  removed["observes"].erase(1);
  removed["capabilities"].erase(1);
  expect_error(client_->Put("/api/types/weatherstation", removed.dump(), kJson), 409,
               "CONFLICT_IN_USE");
  expect_error(client_->Put("/api/types/other", t.dump(), kJson), 422, "ID_MISMATCH");
  t["id"] = "ghost";
  expect_error(client_->Put("/api/types/ghost", t.dump(), kJson), 404, "NOT_FOUND");
  EXPECT_EQ(store_bytes(), store);
}

TEST_F(ServerTest, Delete) {
  register_demo();
  const std::string store = store_bytes();
  expect_error(client_->Delete("/api/types/weatherstation"), 409, "CONFLICT_IN_USE");
  EXPECT_EQ(store_bytes(), store);
  EXPECT_EQ(client_->Delete("/api/instances/demo-weatherstation")->status, 204);
  EXPECT_EQ(client_->Delete("/api/types/weatherstation")->status, 204);
  expect_error(client_->Delete("/api/types/weatherstation"), 404, "NOT_FOUND");
  EXPECT_EQ(get("/api/types")->body, "[]");
}

TEST_F(ServerTest, Metadata) {
  register_demo();
  auto a = get("/api/instances/demo-weatherstation/metadata");
  ASSERT_EQ(a->status, 200);
  EXPECT_EQ(a->get_header_value("Content-Type").rfind("text/plain", 0), 0u);
  auto expected = metadata::render(metadata::generate_metadata(
      testing::demo_weatherstation(), testing::weather_station(), registry_->namespaces()));
  EXPECT_EQ(a->body, expected);
  EXPECT_EQ(get("/api/instances/demo-weatherstation/metadata")->body, a->body);
  expect_error(get("/api/instances/nope/metadata"), 404, "NOT_FOUND");
}

TEST_F(ServerTest, PreviewMatchesRegisteredTurtle) {
  auto pt = post("/api/preview/type", testing::weather_station_json());
  ASSERT_EQ(pt->status, 200);
  EXPECT_EQ(get("/health")->body, R"({"instances":0,"status":"ok","types":0})");
  expect_error(post("/api/preview/instance", testing::demo_weatherstation_json()), 422,
               "UNKNOWN_TYPE");
  register_demo();
  EXPECT_EQ(pt->body, get("/api/types/weatherstation", "text/turtle")->body);
  auto pi = post("/api/preview/instance", testing::demo_weatherstation_json());
  ASSERT_EQ(pi->status, 200);
  EXPECT_EQ(pi->body, get("/api/instances/demo-weatherstation", "text/turtle")->body);

  json bad = json::parse(testing::weather_station_json());
  bad["id"] = "Bad Id";
  const std::string store = store_bytes();
  expect_error(post("/api/preview/type", bad.dump()), 422, "BAD_SLUG");
  EXPECT_EQ(store_bytes(), store);
}

TEST_F(ServerTest, Query) {
  const std::string q =
      "PREFIX ssn: <http://purl.oclc.org/NET/ssnx/ssn#>\n"
      "SELECT ?s WHERE { ?s ssn:observes <http://openiot.eu/ontology/ns/AirTemperature> }";
  auto empty = post("/api/query", q, "text/plain");
  ASSERT_EQ(empty->status, 200);
  EXPECT_EQ(json::parse(empty->body), json::parse(R"({"vars":["s"],"rows":[]})"));
  register_demo();
  auto r = post("/api/query", q, "application/sparql-query");
  ASSERT_EQ(r->status, 200);
  json body = json::parse(r->body);
  ASSERT_EQ(body["rows"].size(), 2u);
  EXPECT_EQ(body["rows"][0]["s"]["value"], "http://example.org/oi/sensors/demo-weatherstation");
  EXPECT_EQ(body["rows"][1]["s"]["value"], "http://example.org/oi/types/weatherstation");

  auto bad = post("/api/query", "SELECT ?s WHERE {\n ?s ?p }", "text/plain");
  expect_error(bad, 400, "SYNTAX_ERROR");
  EXPECT_NE(json::parse(bad->body)["message"].get<std::string>().find("line 2"), std::string::npos);
  expect_error(post("/api/query", "SELECT ?x WHERE { ?s ?p ?o }", "text/plain"), 400,
               "INVALID_QUERY");
  expect_error(post("/api/query", q, kJson), 415, "UNSUPPORTED_MEDIA_TYPE");
}

TEST_F(ServerTest, UnknownRouteHasJsonError) {
  expect_error(get("/api/nothing"), 404, "NOT_FOUND");
}

TEST_F(ServerTest, StateSurvivesRestart) {
  register_demo();
  shutdown();
  start();
  EXPECT_EQ(json::parse(get("/health")->body)["types"], 1);
  EXPECT_EQ(json::parse(get("/api/instances/demo-weatherstation")->body)["typeId"],
            "weatherstation");
}

TEST_F(ServerTest, ConcurrentClients) {
  ASSERT_EQ(post("/api/types", testing::weather_station_json())->status, 201);
  std::vector<std::thread> threads;
  std::atomic<int> created{0};
  for (int k = 0; k < 4; ++k) {
    threads.emplace_back([&, k] {
      httplib::Client c("127.0.0.1", port_);
      for (int n = 0; n < 5; ++n) {
        json i = json::parse(testing::demo_weatherstation_json());
        i["id"] = "ws-" + std::to_string(k) + "-" + std::to_string(n);
        if (auto r = c.Post("/api/instances", i.dump(), kJson); r && r->status == 201) ++created;
        c.Get("/api/instances");
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(created, 20);
  EXPECT_EQ(json::parse(get("/health")->body)["instances"], 20);
}

TEST(NegotiateTest, Rules) {
  EXPECT_EQ(negotiate(""), MediaFormat::kJson);
  EXPECT_EQ(negotiate("*/*"), MediaFormat::kJson);
  EXPECT_EQ(negotiate("text/turtle"), MediaFormat::kTurtle);
  EXPECT_EQ(negotiate("text/turtle; charset=utf-8"), MediaFormat::kTurtle);
  EXPECT_EQ(negotiate("application/json;q=0.2, text/turtle"), MediaFormat::kTurtle);
  EXPECT_EQ(negotiate("text/turtle;q=0, application/json"), MediaFormat::kJson);
  EXPECT_FALSE(negotiate("application/xml"));
  EXPECT_FALSE(negotiate("text/turtle;q=0"));
}

TEST(ApiErrorTest, Mapping) {
  auto err = to_api_error(std::make_exception_ptr(registry::RegistryError(
      registry::RegistryError::Code::kUnknownType, "x")));
  EXPECT_EQ(err.http_status, 422);
  EXPECT_EQ(err.code, "UNKNOWN_TYPE");
  err = to_api_error(std::make_exception_ptr(std::runtime_error("boom")));
  EXPECT_EQ(err.http_status, 500);
  json j = ApiError{422, "LAT_RANGE", "m", {{"LAT_RANGE", "latitude"}}}.to_json();
  EXPECT_EQ(j["details"][0]["code"], "LAT_RANGE");
  ApiError plain{404, "NOT_FOUND", "m", {}};
  EXPECT_FALSE(plain.to_json().contains("details"));
}

}  // namespace
}  // namespace ssnforge::api
