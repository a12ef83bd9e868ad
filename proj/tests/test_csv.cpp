#include <doctest.h>

#include <sstream>

#include "teamgame/csv.hpp"

using namespace teamgame;

TEST_CASE("format_number gives the shortest round-trip form") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-3.0) == "-3");
  CHECK(format_number(0.1) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("discrete strategy round trip") {
  const Strategy y((Eigen::VectorXd(4) << 1.0, 0.25, 1.0 / 3.0, -2.0).finished());
  std::stringstream io;
  write_strategy_csv(io, y, {" made by a test"});
  CHECK(io.str() == "# made by a test\nindex,value\n0,1\n1,0.25\n2,0.3333333333333333\n3,-2\n");
  const StrategyFile f = read_strategy_csv(io);
  CHECK_FALSE(f.sampled);
  CHECK(f.values == y.values());
  REQUIRE(f.comments.size() == 1);
  CHECK(f.comments[0] == " made by a test");
}

TEST_CASE("sampled strategy round trip") {
  const auto s = SampledStrategy::from_function(7, [](double x) { return std::exp(x); });
  std::stringstream io;
  write_strategy_csv(io, s);
  const StrategyFile f = read_strategy_csv(io);
  CHECK(f.sampled);
  CHECK(f.values == s.samples());
}

TEST_CASE("malformed files are rejected") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_strategy_csv(in);
  };
  CHECK_THROWS_AS(parse("a,b\n0,1\n1,1\n"), CsvError);
  CHECK_THROWS_AS(parse(""), CsvError);
  CHECK_THROWS_AS(parse("index,value\n0,1\n"), CsvError);
  CHECK_THROWS_AS(parse("index,value\n0,1\n2,1\n"), CsvError);
  CHECK_THROWS_AS(parse("x,value\n0,1\n0.4,1\n1,1\n"), CsvError);
  CHECK_THROWS_AS(parse("index,value\n0,1\n1,abc\n"), CsvError);
  CHECK_THROWS_AS(parse("index,value\n0,1\n1\n"), CsvError);
  CHECK(parse("\n# c\nindex, value\n0, 1\n1 ,2\n").values.size() == 2);
  CHECK_THROWS_AS(read_strategy_csv_file("/nonexistent/dir/f.csv"), std::ios_base::failure);
}
