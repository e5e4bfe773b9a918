#include <random>
#include <string>

#include "bandsmp/io.hpp"
#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bandsmp;

namespace {
  template <typename F>
  ErrorCode code_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  }
}  // namespace

TEST_CASE("band files", "[io]") {
  Band const two = io::parse_band("# a chain\n2\n1 1\n1 2\n", "chain");
  CHECK(two.order() == 2);
  CHECK(two.name() == "chain");
  CHECK(two(0, 1) == 0);
  CHECK(io::format_band(two) == "2\n1 1\n1 2\n");

  Band const j = io::parse_band(R"({"order": 2, "table": [[1, 1], [1, 2]]})");
  CHECK(j == two);
  CHECK(io::band_to_json(two)["table"] == nlohmann::json::parse("[[1,1],[1,2]]"));

  for (Band const& S : {catalog::s9(), catalog::s10(), catalog::rectangular(2, 3)}) {
    CHECK(io::parse_band(io::format_band(S)) == S);
    CHECK(io::parse_band(io::band_to_json(S).dump()) == S);
  }

  CHECK(code_of([] { io::parse_band(""); }) == ErrorCode::MalformedTable);
  CHECK(code_of([] { io::parse_band("2\n1 1\n"); }) == ErrorCode::MalformedTable);
  CHECK(code_of([] { io::parse_band("2\n1 2\n2 1\n"); }) == ErrorCode::NotIdempotent);
  CHECK(code_of([] { io::parse_band("1\nx\n"); }) != ErrorCode::IoError);
  CHECK(code_of([] { io::parse_band(R"({"order": 3, "table": [[1]]})"); })
        == ErrorCode::MalformedTable);
}

TEST_CASE("instance files", "[io]") {
  Band const  S10  = catalog::s10();
  SmpInstance inst = io::parse_instance(S10, "1 2\n2\n3\n4\n");
  CHECK(inst.generators.arity == 1);
  CHECK(inst.generators.size() == 2);
  CHECK(inst.target == Tuple{3});

  SmpInstance const inl = io::parse_instance(S10, "n=1 k=2; (2),(3); target (4)");
  CHECK(inl.generators.members == inst.generators.members);
  CHECK(inl.target == inst.target);

  SmpInstance const two = io::parse_instance(S10, "n=2 k=1; (2,3); target (2,3)");
  CHECK(two.generators[0] == Tuple{1, 2});
  CHECK(io::format_instance(two) == "2 1\n2 3\n2 3\n");

  SmpInstance const zero = io::parse_instance(S10, "0 1");
  CHECK(zero.generators.arity == 0);
  CHECK(zero.generators.size() == 1);
  CHECK(io::parse_instance(S10, "n=0 k=1; (); target ()").generators.size() == 1);

  SmpInstance const js
      = io::parse_instance(S10, R"({"n": 1, "generators": [[2], [3]], "target": [4]})");
  CHECK(js.generators.members == inst.generators.members);
  CHECK(io::instance_to_json(js)["target"] == nlohmann::json::parse("[4]"));

  std::mt19937 rng(2);
  for (int it = 0; it < 50; ++it) {
    std::size_t const  n = rng() % 4;
    std::vector<Tuple> gens(1 + rng() % 3, Tuple(n));
    for (auto& g : gens) {
      for (auto& a : g) {
        a = static_cast<element_type>(rng() % S10.order());
      }
    }
    SmpInstance const a = make_instance(S10, n, gens, gens[0]);
    SmpInstance const b = io::parse_instance(S10, io::format_instance(a));
    CHECK(b.generators.members == a.generators.members);
    CHECK(b.target == a.target);
    SmpInstance const c = io::parse_instance(S10, io::instance_to_json(a).dump());
    CHECK(c.generators.members == a.generators.members);
  }

  CHECK(code_of([&] { io::parse_instance(S10, "1 2\n2\n4\n"); }) == ErrorCode::MalformedTable);
  CHECK(code_of([&] { io::parse_instance(S10, "1 1\n11\n4\n"); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { io::parse_instance(S10, "2 1\n1\n1 1\n"); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { io::parse_instance(S10, "n=1 k=1; (2; target (2)"); })
        == ErrorCode::MalformedTable);
}

TEST_CASE("word syntax", "[io]") {
  CHECK(io::parse_word("3 1 2") == Word{3, 1, 2});
  CHECK(io::parse_word("G3") == ghi_word(WordFamily::G, 3));
  CHECK(io::parse_word("~G3") == Word{2, 1, 3});
  CHECK(io::parse_word("~G3 G3") == concat(Word{2, 1, 3}, Word{3, 1, 2}));
  CHECK(io::parse_word("").empty());
  CHECK(io::format_word({}) == "()");
  CHECK(io::format_word({4, 2}) == "4 2");
  CHECK(io::word_to_json({1, 2}) == nlohmann::json::parse("[1,2]"));
  for (char const* bad : {"0", "x", "G", "G3x", "-1", "~"}) {
    INFO(bad);
    CHECK(code_of([&] { io::parse_word(bad); }) == ErrorCode::SyntaxError);
  }
  CHECK(code_of([] { io::parse_word("G9"); }) == ErrorCode::UnsupportedIndex);
}
