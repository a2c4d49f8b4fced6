#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "entmono/emit.hpp"
#include "entmono/error.hpp"
#include "json.hpp"

using namespace entmono;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("empty tables render a header only") {
  const Table t{{"a", "b"}, {}};
  CHECK(render(t, Format::Csv) == "a,b\n");
  CHECK(nlohmann::json::parse(render(t, Format::Json)).empty());
}

TEST_CASE("one chain row renders twelve columns") {
  Table t{{"model", "N", "ell", "state", "S", "C", "C3", "C4", "M2", "M3", "renyi2", "renyi3"}, {}};
  t.add({std::string("xx"), std::int64_t(200), std::int64_t(10), std::string("gs"), 1.0, 0.5, 0.1, 0.2, 3.0, 4.0,
         0.9, 0.8});
  std::stringstream ss(render(t, Format::Csv));
  std::string header, row, extra;
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK(header == "model,N,ell,state,S,C,C3,C4,M2,M3,renyi2,renyi3");
  CHECK(split(row).size() == 12);
  CHECK_FALSE(std::getline(ss, extra));
  CHECK_THROWS_AS(t.add({1.0}), Error);
}

TEST_CASE("numbers use twelve significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(123456.789012345) == "123456.789012");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("CSV and JSON carry the same values") {
  Table t{{"quantity", "value", "flag"}, {}};
  t.add({std::string("alpha"), 0.1234567890123456, true});
  t.add({std::string("with,comma"), std::int64_t(-7), false});
  t.add({std::string("missing"), std::monostate{}, false});
  t.add({std::string("tiny"), 6.02214076e-23, true});
  const auto j = nlohmann::json::parse(render(t, Format::Json));
  std::stringstream ss(render(t, Format::Csv));
  std::string line;
  std::getline(ss, line);
  CHECK(line == "quantity,value,flag");
  std::getline(ss, line);
  CHECK(line == "alpha,0.123456789012,true");
  CHECK(std::stod(split(line)[1]) == j[0]["value"].get<double>());
  std::getline(ss, line);
  CHECK(line == "\"with,comma\",-7,false");
  CHECK(j[1]["quantity"] == "with,comma");
  CHECK(j[1]["value"] == -7);
  std::getline(ss, line);
  CHECK(line == "missing,,false");
  CHECK(j[2]["value"].is_null());
  std::getline(ss, line);
  CHECK(std::stod(split(line)[1]) == j[3]["value"].get<double>());
  CHECK(j[3]["flag"] == true);
}

TEST_CASE("rendering is reproducible and files are written") {
  Table t{{"x"}, {}};
  for (int i = 0; i < 5; ++i) t.add({i * 0.1});
  CHECK(render(t, Format::Csv) == render(t, Format::Csv));
  const std::string path = "emit_test_output.csv";
  emit(t, Format::Csv, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render(t, Format::Csv));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_output("x", "/nonexistent/dir/file.csv"), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
