#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "tonnetz/io.hpp"

using namespace tonnetz;

TEST_CASE("save and load are mutually inverse on the whole catalog") {
  for (const auto& [key, name] : catalog_key_names()) {
    const auto entry = build(key);
    const auto doc = document_for(entry);
    std::stringstream ss;
    save(doc, ss);
    const auto loaded = load_stream(ss);
    CHECK(loaded.document.tonnetz == entry.tonnetz);
    CHECK(loaded.verification.ok);
    CHECK(loaded.document.provenance == entry.provenance);
    REQUIRE(loaded.document.layout.has_value());
    CHECK(loaded.document.layout->face_corners == entry.layout.face_corners);
    CHECK(loaded.document.quads.size() == entry.quads.size());

    // a second round-trip is byte-identical
    std::stringstream again;
    save(document_for(entry), again);
    std::stringstream reserialized;
    save(loaded.document, reserialized);
    CHECK(again.str() == reserialized.str());
  }
}

TEST_CASE("schema violations are reported with context") {
  auto doc = to_json(document_for(build(CatalogKey::tetra_dim)));

  SECTION("face referencing a missing edge names the face") {
    doc["faces"][2]["edges"][1] = "e99";
    try {
      load(doc);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("f2") != std::string::npos);
      CHECK(msg.find("e99") != std::string::npos);
    }
  }
  SECTION("label on an unknown simplex") {
    doc["labels"]["zz"] = {"C"};
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("missing label") {
    doc["labels"].erase("e3");
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("bad note name inside a label") {
    doc["labels"]["e3"] = {"Hb"};
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("edge with wrong endpoint count") {
    doc["edges"][0]["verts"] = {"v0"};
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("duplicate names") {
    doc["vertices"].push_back("v0");
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("missing top-level key") {
    doc.erase("labels");
    CHECK_THROWS_AS(load(doc), SchemaError);
  }
  SECTION("malformed json text") {
    std::stringstream ss("{ not json");
    CHECK_THROWS_AS(load_stream(ss), SchemaError);
  }
}

TEST_CASE("a hand-edited bauble still loads unchecked and reports the damage") {
  auto doc = to_json(document_for(build(CatalogKey::bauble)));
  doc["labels"]["e0"] = {"C", "C"};  // was Bb,Bb

  CHECK_THROWS_AS(load(doc), VerificationError);

  const auto result = load(doc, /*checked=*/false);
  CHECK(result.validation.ok);
  CHECK_FALSE(result.verification.ok);
  CHECK_FALSE(result.verification.failures.empty());
  std::set<std::string> named;
  for (const auto& f : result.verification.failures)
    named.insert(result.document.tonnetz.surface().name(f.simplex));
  CHECK(named.count("e0") == 1);
}

TEST_CASE("structurally broken documents are loadable unchecked too") {
  auto doc = to_json(document_for(build(CatalogKey::tetra_dim)));
  doc["faces"].erase(3);  // drop a face: no longer a closed surface
  doc["labels"].erase("f3");
  doc.erase("layout");
  CHECK_THROWS_AS(load(doc), VerificationError);
  const auto result = load(doc, /*checked=*/false);
  CHECK_FALSE(result.validation.ok);
}

TEST_CASE("dot export writes the dual graph") {
  const auto entry = build(CatalogKey::b2);
  std::ostringstream os;
  export_dot(entry.tonnetz, os);
  const std::string dot = os.str();
  std::size_t nodes = 0, links = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    ++pos;
    ++nodes;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++pos;
    ++links;
  }
  CHECK(nodes - links == 8);  // 8 node labels
  CHECK(links == 12);
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("F major") != std::string::npos);
}

TEST_CASE("dot export of a constant tonnetz labels every face unison") {
  const auto s = oracles::tetrahedron();
  const auto t = from_vertex_map(s, std::vector<PitchClass>(4, parse_note("A")));
  std::ostringstream os;
  export_dot(t, os);
  const std::string dot = os.str();
  std::size_t count = 0, pos = 0;
  while ((pos = dot.find("A unison", pos)) != std::string::npos) {
    ++pos;
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("svg export draws one polygon per face and one label per edge") {
  const auto entry = build(CatalogKey::bauble);
  std::ostringstream os;
  export_svg(entry.tonnetz, entry.layout, os);
  const std::string svg = os.str();
  std::size_t polys = 0, texts = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    ++pos;
    ++polys;
  }
  pos = 0;
  while ((pos = svg.find("<text", pos)) != std::string::npos) {
    ++pos;
    ++texts;
  }
  CHECK(polys == 24);
  CHECK(texts == 36);
  CHECK(svg.find("<svg") == 0);

  // deterministic output
  std::ostringstream os2;
  export_svg(entry.tonnetz, entry.layout, os2);
  CHECK(os.str() == os2.str());

  // layout of the wrong shape is rejected
  Layout wrong = entry.layout;
  wrong.edge_anchors.pop_back();
  std::ostringstream os3;
  CHECK_THROWS_AS(export_svg(entry.tonnetz, wrong, os3), std::invalid_argument);
}

TEST_CASE("tritone edges render both notes in svg and dot") {
  const auto entry = build(CatalogKey::tritone1);
  std::ostringstream os;
  export_svg(entry.tonnetz, entry.layout, os);
  CHECK(os.str().find("A Eb") != std::string::npos);
  std::ostringstream dot;
  export_dot(entry.tonnetz, dot);
  CHECK(dot.str().find("label=\"A Eb\"") != std::string::npos);
}
