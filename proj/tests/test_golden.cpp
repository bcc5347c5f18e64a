#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "coxwalls/cli.hpp"
#include "coxwalls/io.hpp"

#ifndef COXWALLS_SOURCE_DIR
#error "COXWALLS_SOURCE_DIR must point at the repository root"
#endif

namespace coxwalls {
namespace {

const std::string kRoot = COXWALLS_SOURCE_DIR;

// Bundled command scripts reproduce their recorded reports byte for byte.
TEST(Golden, ReportsAreByteIdentical) {
  const auto cases = nlohmann::json::parse(io::read_file(kRoot + "/data/golden/cases.json"));
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    std::vector<std::string> args;
    for (const auto& a : c["args"]) {
      const std::string arg = a.get<std::string>();
      args.push_back(arg.rfind("data/", 0) == 0 ? kRoot + "/" + arg : arg);
    }
    const std::string name = c["name"].get<std::string>();
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out, err;
      EXPECT_EQ(cli::run(args, out, err), c["exit"].get<int>()) << name;
      EXPECT_EQ(out.str(), io::read_file(kRoot + "/data/golden/" + name + ".out")) << name;
    }
  }
}

}  // namespace
}  // namespace coxwalls
