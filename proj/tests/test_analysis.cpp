#include <doctest.h>

#include <cmath>

#include "gavsa/analysis.hpp"
#include "gavsa/corpus.hpp"

using namespace gavsa;

namespace {

MemoryProfile table_profile(int n) {
  MemoryProfile profile;
  profile.dimension = n;
  profile.counts = {{1, 42}, {2, 2}, {3, 2}, {4, 3}, {5, 2}, {6, 1},
                    {7, 1},  {8, 3}, {9, 2}, {10, 2}, {11, 1}};
  return profile;
}

}  // namespace

TEST_CASE("cancellation probability closed form") {
  CHECK(cancellation_probability(1).num == 1);
  CHECK(cancellation_probability(1).den == 2);
  CHECK(cancellation_probability(2).value() == doctest::Approx(0.375));
  CHECK(1.0 - cancellation_probability(2).value() == doctest::Approx(0.625));
  CHECK(1.0 - cancellation_probability(4).value() == doctest::Approx(0.726563).epsilon(1e-5));
  CHECK(1.0 - cancellation_probability(5).value() == doctest::Approx(0.753906).epsilon(1e-5));
  // Largest supported K stays exact in 64 bits.
  CHECK(cancellation_probability(30).value() == doctest::Approx(0.1026).epsilon(1e-3));
  CHECK_THROWS(cancellation_probability(0));
  CHECK_THROWS(cancellation_probability(31));
}

TEST_CASE("simple estimator reproduces the 1:3 table") {
  CHECK(expected_potential_answers_simple(table_profile(4), 3) ==
        doctest::Approx(25.9406).epsilon(1e-5));
  CHECK(expected_potential_answers_simple(table_profile(10), 3) ==
        doctest::Approx(1.6153).epsilon(1e-4));
  CHECK(expected_potential_answers_simple(table_profile(20), 3) ==
        doctest::Approx(1.00061).epsilon(1e-5));
}

TEST_CASE("general estimator reproduces the worked cases") {
  AnswerProfile bite_obj;
  bite_obj.p = {{3, 1}, {7, 1}};
  bite_obj.noisy_blade_count = 4;
  CHECK(expected_potential_answers_general(table_profile(20), bite_obj) ==
        doctest::Approx(2.00057).epsilon(1e-5));

  AnswerProfile cause_obj;
  cause_obj.p = {{2, 1}, {4, 1}, {8, 1}};
  cause_obj.noisy_blade_count = 4;
  CHECK(expected_potential_answers_general(table_profile(10), cause_obj) ==
        doctest::Approx(3.56505).epsilon(1e-5));
  CHECK(expected_potential_answers_general(table_profile(20), cause_obj) ==
        doctest::Approx(3.00056).epsilon(1e-5));
}

TEST_CASE("general form specialises to the simple form") {
  AnswerProfile one_meaningful;
  one_meaningful.p = {{1, 1}};
  one_meaningful.noisy_blade_count = 4;  // L = l_noise + 1
  for (int n : {4, 8, 14, 20}) {
    CHECK(expected_potential_answers_general(table_profile(n), one_meaningful) ==
          doctest::Approx(expected_potential_answers_simple(table_profile(n), 3))
              .epsilon(1e-12));
  }
}

TEST_CASE("estimators are monotone in N and bounded below by p") {
  AnswerProfile cause_obj;
  cause_obj.p = {{2, 1}, {4, 1}, {8, 1}};
  cause_obj.noisy_blade_count = 4;
  double previous = 1e300;
  for (int n = 2; n <= 40; ++n) {
    const double value = expected_potential_answers_general(table_profile(n), cause_obj);
    CHECK(value <= previous);
    CHECK(value >= 3.0);
    previous = value;
  }
  CHECK(previous == doctest::Approx(3.0).epsilon(1e-9));

  double previous_simple = 1e300;
  for (int n = 2; n <= 40; ++n) {
    const double value = expected_potential_answers_simple(table_profile(n), 3);
    CHECK(value <= previous_simple);
    CHECK(value >= 1.0);
    previous_simple = value;
  }
  CHECK(previous_simple == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("profile violations raise") {
  AnswerProfile bogus;
  bogus.p = {{2, 5}};  // more potential answers than |S_2|
  bogus.noisy_blade_count = 4;
  CHECK_THROWS(expected_potential_answers_general(table_profile(10), bogus));
  MemoryProfile empty;
  empty.dimension = 10;
  CHECK_THROWS(expected_potential_answers_simple(empty, 3));
}

TEST_CASE("catalog profiles match the corpus census") {
  const MemoryProfile profile = table1_profile(Construction::AgentObject, 12);
  const MemoryProfile reference = table_profile(12);
  CHECK(profile.counts == reference.counts);
  CHECK(profile.omega() == 11);
}
