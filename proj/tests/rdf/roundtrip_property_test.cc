#include <gtest/gtest.h>

#include "generators.h"
#include "ssnforge/rdf/ntriples.h"
#include "ssnforge/rdf/turtle.h"

namespace ssnforge::rdf {
namespace {

constexpr int kCases = 200;

TEST(RoundTripProperty, TurtlePreservesGraph) {
  testing::Rng rng(20240611);
  for (int i = 0; i < kCases; ++i) {
    Graph g = testing::random_graph(rng, 40);
    std::string doc = serialize_turtle(g);
    Graph parsed;
    ASSERT_NO_THROW(parsed = parse_turtle(doc)) << doc;
    ASSERT_TRUE(graph_equal(parsed, g)) << doc;
    EXPECT_EQ(parsed.prefixes(), g.prefixes());
  }
}

TEST(RoundTripProperty, TurtleIsFixpoint) {
  testing::Rng rng(7);
  for (int i = 0; i < kCases; ++i) {
    Graph g = testing::random_graph(rng, 40);
    std::string doc = serialize_turtle(g);
    ASSERT_EQ(serialize_turtle(parse_turtle(doc)), doc);
  }
}

TEST(RoundTripProperty, NTriplesIsFixpoint) {
  testing::Rng rng(11);
  for (int i = 0; i < kCases; ++i) {
    Graph g = testing::random_graph(rng, 40);
    std::string doc = serialize_ntriples(g);
    Graph parsed = parse_ntriples(doc);
    ASSERT_EQ(parsed.triples(), g.triples()) << doc;
    ASSERT_EQ(serialize_ntriples(parsed), doc);
  }
}

TEST(RoundTripProperty, NQuadsIsFixpoint) {
  testing::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    Dataset d;
    for (int k = 0; k < 3; ++k) {
      Graph g = testing::random_graph(rng, 20);
      if (!g.empty()) d.put(Iri("http://g.example/" + std::to_string(k)), g);
    }
    std::string doc = serialize_nquads(d);
    Dataset parsed = parse_nquads(doc);
    ASSERT_EQ(serialize_nquads(parsed), doc);
    ASSERT_EQ(parsed.quad_count(), d.quad_count());
  }
}

TEST(RoundTripProperty, DuplicateInsertNeverGrows) {
  testing::Rng rng(17);
  for (int i = 0; i < kCases; ++i) {
    Graph g = testing::random_graph(rng, 30);
    Graph copy = g;
    for (const auto& t : g.triples()) EXPECT_FALSE(copy.insert(t));
    EXPECT_EQ(copy.size(), g.size());
  }
}

TEST(RoundTripProperty, RelabeledBlankNodesStayEqual) {
  testing::Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::random_graph(rng, 30);
    Graph relabeled;
    auto relabel = [](const Term& t) -> Term {
      if (t.is_blank()) return BlankNode("r" + t.blank().label() + "x");
      return t;
    };
    for (const auto& t : g.triples()) {
      relabeled.insert(Triple(relabel(t.subject()), t.predicate(), relabel(t.object())));
    }
    ASSERT_TRUE(graph_equal(g, relabeled));
  }
}

}  // namespace
}  // namespace ssnforge::rdf
