#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cocseg/context_io.hpp"
#include "cocseg/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#ifndef COCSEG_DATA_DIR
#define COCSEG_DATA_DIR "tests/data"
#endif

using cocseg::FormalContext;

TEST_CASE("cxt writer and reader round-trip the tourism context") {
  const auto ctx = fixtures::tourism_context();
  std::ostringstream out;
  cocseg::write_cxt(ctx, out);
  std::istringstream in(out.str());
  const auto back = cocseg::read_cxt(in);
  CHECK(back.objects == ctx.objects);
  CHECK(back.attributes == ctx.attributes);
  CHECK(back.incidence == ctx.incidence);
}

TEST_CASE("the bundled tourism.cxt matches the in-code fixture") {
  const auto ctx =
      cocseg::read_cxt_file(std::string(COCSEG_DATA_DIR) + "/tourism.cxt");
  const auto expected = fixtures::tourism_context();
  CHECK(ctx.objects == expected.objects);
  CHECK(ctx.attributes == expected.attributes);
  CHECK(ctx.incidence == expected.incidence);
}

TEST_CASE("cxt reader names the missing or malformed section") {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return cocseg::read_cxt(in);
  };
  CHECK_THROWS_WITH_AS(read(""), "cxt: missing header line", cocseg::FormatError);
  CHECK_THROWS_WITH_AS(read("A\n"), "cxt: missing 'B' header line",
                       cocseg::FormatError);
  CHECK_THROWS_WITH_AS(read("B\n\n2\n"),
                       "cxt: missing attribute count", cocseg::FormatError);
  CHECK_THROWS_WITH_AS(read("B\n\n1\n1\n\ng\n"),
                       "cxt: missing attribute name list", cocseg::FormatError);
  CHECK_THROWS_WITH_AS(read("B\n\n1\n1\n\ng\nm\n"),
                       "cxt: missing incidence rows", cocseg::FormatError);
  CHECK_THROWS_AS(read("B\n\n1\n1\n\ng\nm\nXY\n"), cocseg::FormatError);
  CHECK_THROWS_AS(read("B\n\n1\n2\n\ng\nm1\nm2\nX?\n"), cocseg::FormatError);
  CHECK_THROWS_AS(read("B\n\nx\n1\n\n"), cocseg::FormatError);
}

TEST_CASE("context json export and import") {
  const auto ctx = fixtures::tourism_context();
  const auto j = cocseg::context_to_json(ctx);
  CHECK(j["objects"].size() == 6);
  CHECK(j["attributes"].size() == 5);
  CHECK(j["incidence"][0] == nlohmann::json({1, 1, 0, 0, 0}));
  const auto back = cocseg::context_from_json(j);
  CHECK(back.objects == ctx.objects);
  CHECK(back.incidence == ctx.incidence);

  CHECK_THROWS_AS(cocseg::context_from_json(nlohmann::json::array()),
                  cocseg::FormatError);
  CHECK_THROWS_AS(
      cocseg::context_from_json(nlohmann::json{{"objects", {"a"}}}),
      cocseg::FormatError);
}

TEST_CASE("lattice json lists concepts by name and covers by index") {
  const auto lattice = cocseg::build_lattice(fixtures::tourism_context());
  const auto j = cocseg::lattice_to_json(lattice);
  CHECK(j["concepts"].size() == 6);
  CHECK(j["covers"].size() == 6);
  CHECK(j["concepts"][0]["intent"] == nlohmann::json({"bookable"}));
  CHECK(j["introduced_objects"]["hotel"] == j["top"]);
  CHECK(j["introduced_attributes"]["joinable"] ==
        j["introduced_objects"]["excursion"]);
}

TEST_CASE("read_context_file dispatches on the extension") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "cocseg_ctx_io";
  fs::create_directories(dir);
  const auto ctx = fixtures::tourism_context();

  cocseg::write_cxt_file(ctx, (dir / "t.cxt").string());
  const auto from_cxt = cocseg::read_context_file((dir / "t.cxt").string());
  CHECK(from_cxt.objects == ctx.objects);

  {
    std::ofstream out(dir / "t.json");
    out << cocseg::json_to_string(cocseg::context_to_json(ctx));
  }
  const auto from_json = cocseg::read_context_file((dir / "t.json").string());
  CHECK(from_json.objects == ctx.objects);
  CHECK(from_json.incidence == ctx.incidence);

  {
    std::ofstream out(dir / "bad.json");
    out << "{ not json";
  }
  CHECK_THROWS_AS(cocseg::read_context_file((dir / "bad.json").string()),
                  cocseg::FormatError);
  CHECK_THROWS_AS(cocseg::read_context_file((dir / "missing.cxt").string()),
                  cocseg::FormatError);
  fs::remove_all(dir);
}

TEST_CASE("json contexts accept boolean incidence cells") {
  nlohmann::json j = {{"objects", {"g"}},
                      {"attributes", {"m1", "m2"}},
                      {"incidence", {{true, false}}}};
  const auto ctx = cocseg::context_from_json(j);
  CHECK(ctx.incidence == std::vector<std::vector<bool>>{{true, false}});
}

TEST_CASE("cxt round-trip preserves enumeration on random contexts") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    auto raw = oracle::random_context(rng);
    auto ctx = cocseg::FormalContext::create(raw.objects, raw.attributes,
                                             raw.incidence);
    std::ostringstream out;
    cocseg::write_cxt(ctx, out);
    std::istringstream in(out.str());
    const auto back = cocseg::read_cxt(in);
    CHECK(back.incidence == ctx.incidence);
    CHECK(cocseg::enumerate_concepts(back) == cocseg::enumerate_concepts(ctx));
  }
}

TEST_CASE("cxt reader survives noise with typed errors only") {
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> len(0, 120);
  std::uniform_int_distribution<int> chr(0, 96);
  for (int trial = 0; trial < 300; ++trial) {
    std::string noise;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int c = chr(rng);
      noise += c < 8 ? '\n' : static_cast<char>(' ' + c - 8);
    }
    std::istringstream in(noise);
    try {
      (void)cocseg::read_cxt(in);
    } catch (const cocseg::Error&) {
      // fine: malformed input must surface as a library error
    }
  }
}

TEST_CASE("lattice dot output carries introduction labels") {
  const auto lattice = cocseg::build_lattice(fixtures::tourism_context());
  const auto dot = cocseg::lattice_to_dot(lattice);
  CHECK(dot.find("digraph concept_lattice") != std::string::npos);
  CHECK(dot.find("bookable") != std::string::npos);
  CHECK(dot.find("(hotel)") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
