#include <doctest.h>

#include "helpers.hpp"
#include "mcperm/io.hpp"

using namespace mcperm;
using testing::el;
using testing::sig;

TEST_CASE("statistics record json") {
  const auto j = to_json(stats(el(sig("3,2"), "3^(0,0) 1^(2,1) 2^(0,1)")));
  CHECK(j.dump() == R"({"exc":13,"exc_A":1,"csum":7,"csum_per_palette":[2,1],"fix":0,"cyc":1})");
}

TEST_CASE("polynomial json round trip") {
  const auto p = MultiPolynomial::parse("-1 - 2*q^2 + 12345678901234567890123*u*v^3*w");
  const auto j = to_json(p);
  CHECK(j.size() == 3);
  CHECK(j[0]["coeff"] == "-1");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
}

TEST_CASE("csv rows") {
  CHECK(csv_header() == "n,signature,sigma,colors,exc,exc_A,csum,fix,cyc,class_thm1,class_thm2");
  const auto row = csv_row(el(sig("3,2"), "3^(0,0) 1^(2,1) 2^(0,1)"));
  CHECK(row == "3,\"3,2\",3 1 2,\"0,0;2,1;0,1\",13,1,7,0,1,K,\"A(2,1)\"");
  CHECK(csv_row(el(sig("2"), "1^(1)")) == "1,2,1,1,1,0,1,1,1,,");
  CHECK(csv_row(el(sig("1"), "1^(0) 2^(0)")) == "2,1,1 2,0;0,0,0,0,2,2,T(0),");
}

TEST_CASE("jsonl records") {
  const auto j = element_record(el(sig("2"), "2^(1) 1^(1)"));
  CHECK(j.dump() ==
        R"J({"n":2,"signature":"2","sigma":[2,1],"colors":[[1],[1]],"exc":2,"exc_A":0,"csum":2,"fix":0,"cyc":1,"class_thm1":"R(1)","class_thm2":"B"})J");
}
