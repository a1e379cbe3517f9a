#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "ramlab/error.hpp"
#include "ramlab/module_io.hpp"

using namespace ramlab;

namespace {

std::string fixture(const std::string& name) { return std::string(RAMLAB_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

bool same_module(const WachModuleModP& a, const WachModuleModP& b) {
  if (!(a.field == b.field) || a.trunc != b.trunc || a.rank != b.rank || a.height != b.height || !(a.F == b.F)) return false;
  if (a.gamma.has_value() != b.gamma.has_value()) return false;
  return !a.gamma || (a.gamma->G == b.gamma->G && a.gamma->u == b.gamma->u);
}

}  // namespace

TEST_CASE("fixtures load and reproduce their canonical text") {
  for (const char* name : {"rank1_p3_i1.json", "unit_p3.json", "rank1_p2_i1.json", "rank2_p2.json", "height_exceeded_p3.json",
                           "rank1_f2_p3.json"}) {
    const std::string text = read_file(fixture(name));
    const ModuleFile file = parse_module_json(text);
    CHECK(module_to_json(file) == text);
    CHECK(same_module(load_module_file(fixture(name)).module, file.module));
  }
  const ModuleFile f = load_module_file(fixture("rank1_p3_i1.json"));
  CHECK(f.name == "rank1_p3_i1");
  CHECK(f.module.p() == 3);
  CHECK(f.module.rank == 1);
  CHECK(f.module.gamma->u == 4);
}

TEST_CASE("random modules survive a round trip") {
  std::mt19937_64 rng(51);
  for (const FiniteField& k : {FiniteField(2), FiniteField(3), FiniteField(5), FiniteField(3, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModuleFile file{"random", "generated", random_module(k, 10, 3, 2, 7, rng)};
      const std::string text = module_to_json(file);
      const ModuleFile back = parse_module_json(text);
      CHECK(same_module(back.module, file.module));
      CHECK(module_to_json(back) == text);
    }
  }
}

TEST_CASE("human-written entries are accepted") {
  const ModuleFile f = parse_module_json(R"({"p": 3, "N": 6, "d": 1, "i": 1, "F": [["x^2"]], "G": [["1 + x"]], "uG": 2})");
  CHECK(f.module.field.degree() == 1);
  CHECK(f.module.F(0, 0) == QPoly::x_power(FiniteField(3), 6, 2));
  CHECK(f.name.empty());
}

TEST_CASE("malformed files") {
  CHECK(code_of([] { parse_module_json("{"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json("[]"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json(R"({"p": 3, "N": 6, "d": 1, "i": 1})"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json(R"({"p": 3, "N": 6, "d": 2, "i": 1, "F": [["1"]]})"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json(R"({"p": 3, "N": 6, "d": 1, "i": 1, "F": [[1]]})"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json(R"({"p": 3, "N": 6, "d": 1, "i": 1, "F": [["1"]], "G": [["1"]]})"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([] { parse_module_json(R"({"p": 3, "N": 6, "d": 1, "i": 1, "F": [["1"]], "G": [["1"]], "uG": 3})"); }) ==
        ErrorCode::kNonUnitExponent);
  CHECK(code_of([] { parse_module_json(R"({"p": "3", "N": 6, "d": 1, "i": 1, "F": [["1"]]})"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { load_module_file("/nonexistent/module.json"); }) == ErrorCode::kInvalidArgument);
}
