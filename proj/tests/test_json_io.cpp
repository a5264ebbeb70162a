#include <doctest.h>

#include "descartes/json_io.hpp"

using namespace descartes;
using namespace descartes::io;

TEST_CASE("rationals and polynomials round-trip") {
  for (const Rational q : {Rational(0), Rational(-7, 3), Rational(1, 30054570)}) CHECK(decode_rational(encode(q)) == q);
  CHECK(encode(Rational(5)) == json("5"));
  CHECK(decode_rational(json(3)) == 3);
  const UniPoly p = UniPoly::from_highest_first({Rational(1), Rational(-3, 2), 0, Rational(7, 9)});
  CHECK(encode(p) == json::parse(R"(["1","-3/2","0","7/9"])"));
  CHECK(decode_poly(encode(p)) == p);
  CHECK_THROWS_AS(decode_rational(json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(decode_poly(json("x")), std::invalid_argument);
}

TEST_CASE("targets round-trip") {
  const CompatibleCouple c{SignPattern::from_blocks({1, 3, 1}), {2, 2}};
  CHECK(decode_couple(encode(c)) == c);
  CHECK(std::get<CompatibleCouple>(decode_target(encode(RealizationTarget{c}))) == c);
  const Scp s({{0, 2}, {1, 2}, {1, 1}, {1, 0}});
  CHECK(decode_scp(encode(s)) == s);
  CHECK(std::get<Scp>(decode_target(json::parse("[[0,2],[1,2],[1,1],[1,0]]"))) == s);
  const OrderCouple o{SignPattern::from_blocks({1, 3, 1}), ModuliOrder::parse("PNNP")};
  CHECK(std::get<OrderCouple>(decode_target(encode(RealizationTarget{o}))) == o);
  CHECK_THROWS_AS(decode_target(json::parse(R"({"kind":"banana"})")), std::invalid_argument);
  CHECK_THROWS_AS(decode_pattern(json("+0-")), std::invalid_argument);
}

TEST_CASE("count tables and witnesses round-trip") {
  const auto t = count_scps(5);
  const auto back = decode_count_table(encode(t));
  CHECK(back.degree == 5);
  CHECK(back.total == t.total);
  CHECK(back.entries == t.entries);

  const CompatibleCouple c{SignPattern::parse("+-+"), {2, 0}};
  const UniPoly p = UniPoly::from_highest_first({1, -3, 2});
  const Witness w{p, c, *certify(p, c)};
  const Witness w2 = decode_witness(encode(w));
  CHECK(w2.poly == p);
  CHECK(std::get<CompatibleCouple>(w2.target) == c);
  CHECK(w2.certificate == w.certificate);
  CHECK(verify_witness(w2));
}
