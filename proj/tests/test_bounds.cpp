#include <doctest.h>

#include <nlohmann/json.hpp>

#include "jnorm/bounds.hpp"
#include "testutil.hpp"

using jnorm::EVector;
using jnorm::Rat;
using jnorm::Sequence;

namespace {

EVector ev(std::initializer_list<int> cs) {
  std::vector<Rat> v;
  for (int c : cs) v.emplace_back(c);
  return EVector(std::move(v));
}

Sequence seq(std::initializer_list<int> vs) {
  std::vector<Rat> v;
  for (int c : vs) v.emplace_back(c);
  return Sequence(std::move(v));
}

}  // namespace

TEST_CASE("insertion matrix shape") {
  CHECK(jnorm::insertion_matrix(ev({5})) ==
        jnorm::Matrix{{Rat(0), Rat(5)}, {Rat(5), Rat(0)}});
  CHECK(jnorm::insertion_matrix(ev({1, 2})) ==
        jnorm::Matrix{{Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(0), Rat(2)}, {Rat(1), Rat(2), Rat(0)}});
  auto m = jnorm::insertion_matrix(ev({1, 1, 1}));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(m[r][c] == (r == c ? 0 : 1));
}

TEST_CASE("det_oracle") {
  CHECK(jnorm::det_oracle({{Rat(0), Rat(5)}, {Rat(5), Rat(0)}}) == -25);
  CHECK(jnorm::det_oracle({{Rat(0), Rat(1), Rat(2)},
                           {Rat(1), Rat(0), Rat(2)},
                           {Rat(1), Rat(2), Rat(0)}}) == 6);
  CHECK(jnorm::det_oracle({{Rat(1), Rat(0), Rat(0)},
                           {Rat(0), Rat(1), Rat(0)},
                           {Rat(0), Rat(0), Rat(1)}}) == 1);
  CHECK_THROWS_AS(jnorm::det_oracle({{Rat(1), Rat(2)}}), std::invalid_argument);
}

TEST_CASE("determinant closed form vs oracle") {
  CHECK(jnorm::det_closed_form(ev({5})) == -25);
  CHECK(jnorm::det_closed_form(ev({1, 2})) == 6);
  CHECK(jnorm::det_closed_form(ev({1, -1})) == 0);

  std::mt19937_64 gen(300);
  for (int trial = 0; trial < 500; ++trial) {
    EVector e = testutil::random_evector(gen, 6, false);
    CAPTURE(trial);
    CHECK(jnorm::det_oracle(jnorm::insertion_matrix(e)) == jnorm::det_closed_form(e));
  }
  // Singularity boundary: with nonzero coordinates, singular iff sum zero.
  for (int trial = 0; trial < 500; ++trial) {
    EVector e = testutil::random_evector(gen, 6, true);
    CHECK((jnorm::det_oracle(jnorm::insertion_matrix(e)) == 0) == (e.sum() == 0));
  }
}

TEST_CASE("lemma 7") {
  CHECK(jnorm::lemma7_constant_sq(ev({1})) == 1);
  CHECK(jnorm::lemma7_constant_sq(ev({1, -1})) == 2);
  CHECK(jnorm::lemma7_constant_sq(ev({2, -1, -1})) == 6);
  CHECK(jnorm::check_lemma7(ev({1, -1}), seq({1, 0})));
  CHECK(jnorm::check_lemma7(ev({2, -1, -1}), Sequence()));
  // d = 1: the norms coincide, so equality holds.
  Sequence x = seq({3, -4, 5});
  CHECK(jnorm::e_norm_sq(ev({1}), x) == jnorm::lemma7_constant_sq(ev({1})) * jnorm::l2_norm_sq(x));
}

TEST_CASE("lemma 9 checks") {
  CHECK(jnorm::check_lemma9(ev({1, 1}), {Rat(0), Rat(5), Rat(-7)}, Rat(100)));
  CHECK(jnorm::check_lemma9(ev({1, 1}), {Rat(1), Rat(-1, 3), Rat(-1, 3)}, Rat(2, 3)));
  CHECK(jnorm::check_lemma9(ev({2}), {Rat(1), Rat(9)}, Rat(2)));
  CHECK_THROWS_AS(jnorm::check_lemma9(ev({1, 1}), {Rat(1)}, Rat(1)), std::invalid_argument);

  std::mt19937_64 gen(301);
  for (int etrial = 0; etrial < 10; ++etrial) {
    EVector e = testutil::random_hilbert_evector(gen, 4);
    Rat C = jnorm::lemma9_constant(e);
    std::size_t dp = jnorm::reduce_nonzero(e).d();
    bool doubled_failed_somewhere = false;
    for (int xtrial = 0; xtrial < 2000; ++xtrial) {
      std::vector<Rat> x(dp + 1);
      for (auto& v : x) v = testutil::random_rat(gen);
      CHECK(jnorm::check_lemma9(e, x, C));
      if (!jnorm::check_lemma9(e, x, 2 * C)) doubled_failed_somewhere = true;
    }
    // Tightness probe: doubling C usually breaks the inequality; record it
    // without asserting (not guaranteed for every sample set).
    CAPTURE(doubled_failed_somewhere);
  }
}

TEST_CASE("lemma 10 lower bound") {
  CHECK(jnorm::lemma10_lower_bound_sq(ev({1})) == 2);
  CHECK(jnorm::lemma10_lower_bound_sq(ev({1, 1})) == Rat(27, 4));
  CHECK(jnorm::lemma10_lower_bound_sq(ev({2})) == Rat(1, 2));
  CHECK_THROWS_AS(jnorm::lemma10_lower_bound_sq(ev({1, -1})), std::domain_error);

  CHECK(jnorm::check_lemma10(ev({1, 1}), Sequence()));
  CHECK(jnorm::check_lemma10(ev({1, 1}), seq({1})));
  std::mt19937_64 gen(302);
  EVector e123 = ev({1, 2, 3});
  for (int trial = 0; trial < 200; ++trial) {
    Sequence x = testutil::random_sequence(gen, 6);
    CAPTURE(trial);
    CHECK(jnorm::check_lemma10(e123, x));
  }
}

TEST_CASE("lemma 11 constant and corrected check") {
  CHECK(jnorm::lemma11_constant_sq(ev({1, -1})) == 1);
  CHECK(jnorm::lemma11_constant_sq(ev({2, -1, -1})) == 8);
  CHECK(jnorm::lemma11_constant_sq(ev({1, 1, -2})) == 8);
  CHECK_THROWS_AS(jnorm::lemma11_constant_sq(ev({1, 2})), std::domain_error);

  CHECK(jnorm::check_lemma11(ev({2, -1, -1}), seq({1, 0, 0})));
  CHECK(jnorm::check_lemma11(ev({1, -1}), Sequence()));

  // For d >= 3 the chained in-block differences exceed any single
  // disjoint-pair 2-set, so the raw constant C^2 (d-1) is not enough:
  // e = (1,-2,1) on x = (0,1,0) has e-norm 4 but C^2 (d-1) * james = 2.
  EVector sharp = ev({1, -2, 1});
  Sequence spike = seq({0, 1, 0});
  CHECK(jnorm::e_norm_sq(sharp, spike) == 4);
  CHECK(jnorm::james_norm_sq(spike) == 1);
  CHECK(jnorm::lemma11_constant_sq(sharp) * jnorm::james_norm_sq(spike) <
        jnorm::e_norm_sq(sharp, spike));
  CHECK(jnorm::chain_split_factor(3) == 2);
  CHECK(jnorm::check_lemma11(sharp, spike));

  // d = 2: a single pair family suffices, with equality for e = (1,-1).
  std::mt19937_64 gen(303);
  for (int trial = 0; trial < 50; ++trial) {
    Sequence x = testutil::random_sequence(gen, 5);
    CHECK(jnorm::e_norm_sq(ev({1, -1}), x) == jnorm::james_norm_sq(x));
  }
}

TEST_CASE("lemma 12") {
  CHECK(jnorm::check_lemma12(ev({1, -1}), Sequence()));
  CHECK(jnorm::check_lemma12(ev({2, -1, -1}), seq({1, 1, 0, 0})));
  std::mt19937_64 gen(304);
  for (int trial = 0; trial < 100; ++trial) {
    Sequence x = testutil::random_sequence(gen, 6);
    CHECK(jnorm::check_lemma12(ev({1, -1}), x));
  }
}

TEST_CASE("lemma 13") {
  CHECK(jnorm::check_lemma13(1, seq({2, -3, 5})));
  CHECK(jnorm::check_lemma13(2, seq({1, 0, -1, 0, 1, 0})));
  CHECK(jnorm::check_lemma13(3, Sequence()));
  std::mt19937_64 gen(305);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dd(1, 4);
    Sequence x = testutil::random_sequence(gen, 6);
    CAPTURE(trial);
    CHECK(jnorm::check_lemma13(dd(gen), x));
  }
}

TEST_CASE("classification verdicts and certificates") {
  auto hilbert = jnorm::classify(ev({1}), 50, 7);
  CHECK(hilbert.verdict == jnorm::Verdict::Hilbert);
  CHECK(hilbert.upper.samples_checked == 50);

  auto james = jnorm::classify(ev({1, -1}), 50, 7);
  CHECK(james.verdict == jnorm::Verdict::James);
  CHECK(james.lower.constant_sq == 12);  // (floor(d/2)+2) * 4/e1^2 at d=2
  CHECK(james.upper.constant_sq == 1);   // same space, chain factor 1

  CHECK(jnorm::classify(ev({2, -1, -1}), 30, 7).verdict == jnorm::Verdict::James);
  CHECK(jnorm::classify(ev({1, 2, 3}), 30, 7).verdict == jnorm::Verdict::Hilbert);
  CHECK(jnorm::classify(ev({1, 1, -2}), 30, 7).verdict == jnorm::Verdict::James);
  CHECK(jnorm::classify(ev({2}), 30, 7).verdict == jnorm::Verdict::Hilbert);
  CHECK_THROWS_AS(EVector({Rat(0), Rat(1), Rat(-1)}), std::invalid_argument);
}

TEST_CASE("regime-complete sampling: exactly one side applies and passes") {
  std::mt19937_64 gen(306);
  for (int etrial = 0; etrial < 10; ++etrial) {
    bool hilbert_side = etrial % 2 == 0;
    EVector e = hilbert_side ? testutil::random_hilbert_evector(gen, 4)
                             : testutil::random_james_evector(gen, 4);
    CHECK((e.sum() != 0) == hilbert_side);
    for (int xtrial = 0; xtrial < 30; ++xtrial) {
      Sequence x = testutil::random_sequence(gen, 5);
      if (hilbert_side) {
        CHECK(jnorm::check_lemma7(e, x));
        CHECK(jnorm::check_lemma10(e, x));
      } else {
        CHECK(jnorm::check_lemma11(e, x));
        CHECK(jnorm::check_lemma12(e, x));
        CHECK(jnorm::check_lemma13(e.d(), x));
      }
    }
  }
}

TEST_CASE("certificate JSON round-trips") {
  auto cls = jnorm::classify(ev({2, -1, -1}), 10, 9);
  auto text = jnorm::classification_json(cls);
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["verdict"] == "James");
  CHECK(parsed["upper"]["lemma"] == 11);
  CHECK(parsed["lower"]["lemma"] == 13);
  CHECK(jnorm::parse_rational(parsed["lower"]["constant_sq"].get<std::string>()) ==
        cls.lower.constant_sq);
  CHECK(nlohmann::json::parse(parsed.dump()).dump() == parsed.dump());
}
