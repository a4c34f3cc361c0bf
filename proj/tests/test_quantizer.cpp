#include <doctest.h>

#include "hadaq/quantizer.hpp"
#include "hadaq/rng.hpp"

using namespace hadaq;

TEST_CASE("bank construction rules") {
  CHECK_THROWS_AS(QuantizerBank::uniform(4, 0, 1, 0, 0), domain_error);
  CHECK_THROWS_AS(QuantizerBank::uniform(4, 1, 0, 0, 0), domain_error);
  CHECK_THROWS_AS(QuantizerBank({1, 1}, {1}, {0, 0}, {0, 0}), domain_error);
  QuantizerBank b = QuantizerBank::uniform(3, 5, 7, -1, 2);
  CHECK(b.size() == 3);
  CHECK_FALSE(b.equal_steps());
  CHECK(QuantizerBank::uniform(3, 5, 5, -1, 2).equal_steps());
}

TEST_CASE("scalar quantization examples") {
  QuantizerBank b1000 = QuantizerBank::uniform(1, 1000, 1000, 0, 0);
  CHECK(dq(b1000, 0, Ratio::integer(1001)) == 1);
  CHECK(dq(b1000, 0, Ratio::integer(-999)) == 0);
  CHECK(dq(b1000, 0, Ratio::integer(0)) == 0);

  QuantizerBank rz = QuantizerBank::uniform(1, 1, 1, 0, 0);
  CHECK(dq(rz, 0, Ratio(-4030, 16)) == -251);  // rounding toward zero

  CHECK(iq(b1000, 0, 1) == 1000);
  CHECK(iq(b1000, 0, 0) == 0);
  QuantizerBank mixed = QuantizerBank::uniform(1, 800, 800, -1000, 1400);
  CHECK(iq(mixed, 0, -2) == -3000);

  CHECK_THROWS_AS(dq(b1000, 1, Ratio::integer(0)), domain_error);
}

TEST_CASE("vector quantization and length checks") {
  QuantizerBank b = QuantizerBank::uniform(3, 10, 10, 0, 0);
  std::vector<Ratio> x{Ratio::integer(25), Ratio::integer(-25), Ratio(5, 2)};
  CHECK(dq_vec(b, x) == Vec{2, -2, 0});
  CHECK(iq_vec(b, Vec{2, -2, 0}) == Vec{20, -20, 0});
  CHECK(dq_vec(b, {Ratio::integer(0), Ratio::integer(0), Ratio::integer(0)}) == Vec{0, 0, 0});
  CHECK_THROWS_AS(dq_vec(b, std::vector<Ratio>{Ratio::integer(1)}), domain_error);
  CHECK_THROWS_AS(iq_vec(b, Vec{1}), domain_error);
}

TEST_CASE("staircase closed form on the plotted parameters") {
  // step 10, dead offset −5, recon 10, recon offset 10
  QuantizerBank b = QuantizerBank::uniform(1, 10, 10, -5, 10);
  CHECK(staircase(b, 0, Ratio::integer(0)) == 0);
  CHECK(staircase(b, 0, Ratio::integer(15)) == 20);
  CHECK(iq(b, 0, dq(b, 0, Ratio::integer(15))) == 20);
  // first step edge y = step − dead: value recon + offset
  CHECK(staircase(b, 0, Ratio::integer(10 - (-5))) == 10 + 10);
}

TEST_CASE("staircase equals iq∘dq on a dense rational grid") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const i64 step = rng.range(1, 8);
    const i64 recon = rng.range(1, 8);
    const i64 dead = rng.range(-9, 9);  // includes dead ≥ step, where the
                                        // printed branch regions overlap
    const i64 off = rng.range(-9, 9);
    QuantizerBank b = QuantizerBank::uniform(1, step, recon, dead, off);
    const i64 lo = -(3 * step + (dead < 0 ? -dead : dead));
    const i64 hi = -lo;
    for (i64 den = 1; den <= 64; den += 7) {
      for (i64 num = lo * den; num <= hi * den; ++num) {
        Ratio y(num, den);
        REQUIRE(staircase(b, 0, y) == iq(b, 0, dq(b, 0, y)));
      }
    }
  }
}

TEST_CASE("odd symmetry of dq and iq") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    QuantizerBank b = QuantizerBank::uniform(1, rng.range(1, 50), rng.range(1, 50),
                                             rng.range(-50, 50), rng.range(-50, 50));
    Ratio y(rng.range(-4000, 4000), rng.range(1, 64));
    CHECK(dq(b, 0, y.neg()) == -dq(b, 0, y));
    i64 q = rng.range(-100, 100);
    CHECK(iq(b, 0, -q) == -iq(b, 0, q));
  }
}

TEST_CASE("dq is nondecreasing in its argument") {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    QuantizerBank b = QuantizerBank::uniform(1, rng.range(1, 12), 1, rng.range(-15, 15), 0);
    i64 prev = dq(b, 0, Ratio(-200, 4));
    for (i64 num = -199; num <= 200; ++num) {
      i64 cur = dq(b, 0, Ratio(num, 4));
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("breakpoint law at y = j·step − dead") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const i64 step = rng.range(1, 20);
    const i64 dead = rng.range(-20, step);  // keep breakpoints in the positive branch
    const i64 recon = rng.range(1, 20);
    const i64 off = rng.range(-20, 20);
    QuantizerBank b = QuantizerBank::uniform(1, step, recon, dead, off);
    for (i64 j = 1; j <= 5; ++j) {
      Ratio y = Ratio::integer(j * step - dead);
      CHECK(iq(b, 0, dq(b, 0, y)) == j * recon + off);
    }
  }
}

TEST_CASE("classic quantizer examples") {
  ClassicQuantizer mt = classic_quantizer(ClassicKind::mid_tread, 1000);
  CHECK(mt.quantize(Ratio::integer(1001)) == 1);
  CHECK(mt.dequantize(1) == Ratio::integer(1000));

  ClassicQuantizer mr = classic_quantizer(ClassicKind::mid_riser, 10);
  CHECK(mr.quantize(Ratio::integer(0)) == 0);
  CHECK(mr.dequantize(0) == Ratio(5, 1));

  ClassicQuantizer dz = classic_quantizer(ClassicKind::dead_zone_intro, 10, 3);
  CHECK(dz.quantize(Ratio::integer(2)) == 0);  // max(0, …) clips the negative index

  ClassicQuantizer rz = classic_quantizer(ClassicKind::mid_riser_toward_zero, 10);
  CHECK(rz.quantize(Ratio::integer(-15)) == -1);
  CHECK(rz.dequantize(-1) == Ratio(-15, 1));
  CHECK(rz.dequantize(0) == Ratio::integer(0));

  CHECK_THROWS_AS(classic_quantizer(ClassicKind::mid_tread, 0), domain_error);
  CHECK_THROWS_AS(classic_kind_from_name("nearest"), usage_error);
  CHECK(classic_kind_from_name("mid-tread") == ClassicKind::mid_tread);
  CHECK(classic_kind_name(ClassicKind::dead_zone_intro) == "dead-zone-intro");
}

TEST_CASE("ratio rendering") {
  CHECK(Ratio(-4030, 16).to_string() == "-251.875");
  CHECK(Ratio(-12288, 16).to_string() == "-768");
  CHECK(Ratio(1, 16).to_string() == "0.0625");
  CHECK(Ratio(-1, 2).to_string() == "-0.5");
  CHECK(Ratio(5, 3).to_string() == "5/3");
  CHECK(Ratio(6, 3).to_string() == "2");
  CHECK(Ratio(0, 7).to_string() == "0");
  CHECK(Ratio(6, 12).to_string() == "0.5");
  CHECK_THROWS_AS(Ratio(1, 0), domain_error);
  CHECK(Ratio(3, 4) < Ratio(4, 5));
  CHECK(Ratio(2, 4) == Ratio(1, 2));
}
