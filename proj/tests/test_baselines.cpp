#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "gavsa/baselines.hpp"

using namespace gavsa;

TEST_CASE("circular convolution basics") {
  const RealVector a = {1, 2, 3};
  const RealVector b = {1, 0, 1};
  const RealVector c = hrr_bind(a, b);
  CHECK(c[0] == doctest::Approx(3));
  CHECK(c[1] == doctest::Approx(5));
  CHECK(c[2] == doctest::Approx(4));

  const RealVector impulse = {1, 0, 0};
  const RealVector conv = hrr_bind(impulse, b);
  for (std::size_t j = 0; j < b.size(); ++j) CHECK(conv[j] == doctest::Approx(b[j]));

  CHECK_THROWS(hrr_bind(a, {1, 2}));
}

TEST_CASE("convolution commutes") {
  Rng rng(3);
  for (int round = 0; round < 20; ++round) {
    const RealVector a = hrr_random_atom(32, rng);
    const RealVector b = hrr_random_atom(32, rng);
    const RealVector ab = hrr_bind(a, b);
    const RealVector ba = hrr_bind(b, a);
    for (std::size_t j = 0; j < ab.size(); ++j) CHECK(ab[j] == doctest::Approx(ba[j]));
  }
}

TEST_CASE("involution properties") {
  Rng rng(5);
  const RealVector q = hrr_random_atom(17, rng);
  const RealVector twice = hrr_involution(hrr_involution(q));
  for (std::size_t j = 0; j < q.size(); ++j) CHECK(twice[j] == q[j]);

  const RealVector s = hrr_random_atom(17, rng);
  RealVector impulse(17, 0.0);
  impulse[0] = 1.0;
  const RealVector unbound = hrr_unbind(s, impulse);
  for (std::size_t j = 0; j < s.size(); ++j) CHECK(unbound[j] == doctest::Approx(s[j]));
}

TEST_CASE("unbinding recovers the bound filler") {
  // d = 1300, 40 atoms: the decoded filler must win the clean-up in at
  // least 95% of 200 trials.
  const int d = 1300;
  const int atoms = 40;
  int hits = 0;
  for (int t = 0; t < 200; ++t) {
    Rng rng(substream_seed(77, "hrr-recovery", d, t));
    std::vector<RealVector> vocabulary;
    for (int i = 0; i < atoms; ++i) vocabulary.push_back(hrr_random_atom(d, rng));
    const RealVector bound = hrr_bind(vocabulary[0], vocabulary[1]);
    const RealVector decoded = hrr_unbind(bound, vocabulary[0]);
    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < atoms; ++i) {
      const double score = hrr_similarity(decoded, vocabulary[i]);
      if (best < 0 || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    hits += (best == 1);
  }
  CHECK(hits >= 190);
}

TEST_CASE("bundled sentences have unit norm in expectation") {
  const int d = 1300;
  double total = 0.0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    Rng rng(substream_seed(78, "hrr-norm", d, t));
    const RealVector verb = hrr_random_atom(d, rng);
    const RealVector c1 = hrr_bind(hrr_random_atom(d, rng), hrr_random_atom(d, rng));
    const RealVector c2 = hrr_bind(hrr_random_atom(d, rng), hrr_random_atom(d, rng));
    double norm2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const double x = (verb[j] + c1[j] + c2[j]) / std::sqrt(3.0);
      norm2 += x * x;
    }
    total += std::sqrt(norm2);
  }
  CHECK(std::abs(total / trials - 1.0) <= 0.1);
}

TEST_CASE("xor binding is involutive") {
  Rng rng(7);
  const BitVector name = bsc_random(64, rng);
  const BitVector pat = bsc_random(64, rng);
  CHECK(bsc_bind(name, bsc_bind(name, pat)) == pat);
  CHECK(bsc_bind(name, name) == BitVector(64, 0));
  CHECK(bsc_bind(name, pat) == bsc_bind(pat, name));
  CHECK_THROWS(bsc_bind(name, BitVector(32, 0)));
}

TEST_CASE("majority bundling") {
  Rng rng(9);
  const BitVector a = {1, 1, 0};
  const BitVector b = {1, 0, 0};
  const BitVector c = {1, 0, 1};
  CHECK(bsc_bundle({a, b, c}, rng) == BitVector{1, 0, 0});

  const BitVector single = bsc_random(32, rng);
  CHECK(bsc_bundle({single}, rng) == single);
  // Two identical chunks decide every position regardless of the tie-break.
  CHECK(bsc_bundle({single, single}, rng) == single);
  CHECK_THROWS(bsc_bundle({}, rng));
}

TEST_CASE("bundle output stays close to each chunk") {
  const int d = 1300;
  for (int t = 0; t < 200; ++t) {
    Rng rng(substream_seed(79, "bsc-majority", d, t));
    std::vector<BitVector> chunks;
    for (int i = 0; i < 3; ++i) chunks.push_back(bsc_random(d, rng));
    const BitVector bundle = bsc_bundle(chunks, rng);
    for (const BitVector& chunk : chunks) {
      CHECK(bsc_similarity(bundle, chunk) > 0.5);
    }
  }
}

TEST_CASE("hrr sentence encoding mirrors the constructions") {
  Rng rng(13);
  HrrLexicon lexicon;
  for (const char* name : {"r0", "r1", "verb", "f0", "f1"}) {
    lexicon.emplace(name, hrr_random_atom(64, rng));
  }

  // A single-pair sentence is exactly the binding.
  const SentenceSpec single{"s", std::nullopt, {{"r0", "f0"}}};
  const RealVector encoded = hrr_encode(single, lexicon, Construction::AgentObject);
  const RealVector bound = hrr_bind(lexicon.at("r0"), lexicon.at("f0"));
  for (std::size_t j = 0; j < encoded.size(); ++j) CHECK(encoded[j] == doctest::Approx(bound[j]));

  // A nested filler reuses the stored (already scaled) sentence vector.
  lexicon.emplace("s", encoded);
  const SentenceSpec nested{"t", std::nullopt, {{"r1", "s"}}};
  const RealVector nested_encoded = hrr_encode(nested, lexicon, Construction::AgentObject);
  const RealVector nested_bound = hrr_bind(lexicon.at("r1"), lexicon.at("s"));
  for (std::size_t j = 0; j < nested_encoded.size(); ++j) {
    CHECK(nested_encoded[j] == doctest::Approx(nested_bound[j]));
  }

  // Plate adds the verb as a chunk and scales by 1/sqrt(3).
  const SentenceSpec plated{"p", std::string("verb"), {{"r0", "f0"}, {"r1", "f1"}}};
  const RealVector plate = hrr_encode(plated, lexicon, Construction::Plate);
  const RealVector c1 = hrr_bind(lexicon.at("r0"), lexicon.at("f0"));
  const RealVector c2 = hrr_bind(lexicon.at("r1"), lexicon.at("f1"));
  for (std::size_t j = 0; j < plate.size(); ++j) {
    CHECK(plate[j] ==
          doctest::Approx((lexicon.at("verb")[j] + c1[j] + c2[j]) / std::sqrt(3.0)));
  }

  CHECK_THROWS(hrr_encode(SentenceSpec{"bad", std::nullopt, {{"r0", "nosuch"}}}, lexicon,
                          Construction::AgentObject));
}

TEST_CASE("bsc sentence encoding bundles bound chunks") {
  Rng rng(17);
  BscLexicon lexicon;
  for (const char* name : {"r0", "r1", "r2", "verb", "f0", "f1", "f2"}) {
    lexicon.emplace(name, bsc_random(256, rng));
  }
  // One pair: the bundle of a single chunk is the chunk.
  const SentenceSpec single{"s", std::nullopt, {{"r0", "f0"}}};
  CHECK(bsc_encode(single, lexicon, Construction::AgentObject, rng) ==
        bsc_bind(lexicon.at("r0"), lexicon.at("f0")));

  // Three pairs: positionwise majority of the bound chunks.
  const SentenceSpec triple{
      "t", std::nullopt, {{"r0", "f0"}, {"r1", "f1"}, {"r2", "f2"}}};
  const BitVector encoded = bsc_encode(triple, lexicon, Construction::AgentObject, rng);
  const BitVector c0 = bsc_bind(lexicon.at("r0"), lexicon.at("f0"));
  const BitVector c1 = bsc_bind(lexicon.at("r1"), lexicon.at("f1"));
  const BitVector c2 = bsc_bind(lexicon.at("r2"), lexicon.at("f2"));
  for (std::size_t j = 0; j < encoded.size(); ++j) {
    CHECK(encoded[j] == ((c0[j] + c1[j] + c2[j] >= 2) ? 1 : 0));
  }
}

TEST_CASE("similarity endpoints") {
  Rng rng(11);
  const BitVector v = bsc_random(128, rng);
  CHECK(bsc_similarity(v, v) == 1.0);
  BitVector complement = v;
  for (auto& bit : complement) bit ^= 1;
  CHECK(bsc_similarity(v, complement) == 0.0);

  const RealVector r = hrr_random_atom(64, rng);
  double norm2 = 0.0;
  for (double x : r) norm2 += x * x;
  CHECK(hrr_similarity(r, r) == doctest::Approx(norm2));

  double mean = 0.0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    Rng pair_rng(substream_seed(80, "bsc-random-sim", 1300, t));
    mean += bsc_similarity(bsc_random(1300, pair_rng), bsc_random(1300, pair_rng));
  }
  CHECK(std::abs(mean / trials - 0.5) <= 0.05);
}
