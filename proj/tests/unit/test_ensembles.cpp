#include <doctest.h>

#include "hive/ensembles.hpp"
#include "hive/rng.hpp"

using namespace hive;

namespace {

EnsembleSpec spec_of(EnsembleKind kind, int n, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = kind;
  s.n = n;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("sample is deterministic given seed") {
  const auto a = sample(spec_of(EnsembleKind::GOE, 5, 42), Pairing::Independent);
  const auto b = sample(spec_of(EnsembleKind::GOE, 5, 42), Pairing::Independent);
  CHECK(a.M == b.M);
  CHECK(a.N == b.N);
  const auto c = sample(spec_of(EnsembleKind::GOE, 5, 43), Pairing::Independent);
  CHECK(a.M != c.M);
}

TEST_CASE("SORTED_INT_DIAG is weakly decreasing within range") {
  auto s = spec_of(EnsembleKind::SORTED_INT_DIAG, 3, 7);
  const auto pair = sample(s, Pairing::Independent);
  for (int i = 0; i < 3; ++i) {
    CHECK(pair.M(i, i) >= 1);
    CHECK(pair.M(i, i) <= 50);
    if (i > 0) CHECK(pair.M(i, i) <= pair.M(i - 1, i - 1));
    for (int j = 0; j < 3; ++j) {
      if (i != j) CHECK(pair.M(i, j) == 0);
    }
  }
}

TEST_CASE("identical pairing copies M") {
  const auto pair = sample(spec_of(EnsembleKind::GOE, 4, 1), Pairing::Identical);
  CHECK(pair.M == pair.N);
  CHECK(pair.L == pair.M + pair.N);
}

TEST_CASE("FLIPPED_INT_DIAG swaps the extreme entries of M only") {
  const auto sorted = sample(spec_of(EnsembleKind::SORTED_INT_DIAG, 5, 99),
                             Pairing::Independent);
  const auto flipped = sample(spec_of(EnsembleKind::FLIPPED_INT_DIAG, 5, 99),
                              Pairing::Independent);
  CHECK(flipped.M(0, 0) == sorted.M(4, 4));
  CHECK(flipped.M(4, 4) == sorted.M(0, 0));
  for (int i = 1; i < 4; ++i) CHECK(flipped.M(i, i) == sorted.M(i, i));
  // the second matrix stays sorted
  for (int i = 1; i < 5; ++i) CHECK(flipped.N(i, i) <= flipped.N(i - 1, i - 1));
}

TEST_CASE("FLIPPED identical pairing couples the flipped and sorted forms") {
  const auto pair = sample(spec_of(EnsembleKind::FLIPPED_INT_DIAG, 4, 17),
                           Pairing::Identical);
  // M is the flipped matrix, N its unflipped counterpart from the same draw
  CHECK(pair.M(0, 0) == pair.N(3, 3));
  CHECK(pair.M(3, 3) == pair.N(0, 0));
  CHECK(pair.M(1, 1) == pair.N(1, 1));
}

TEST_CASE("sample rejects bad specs") {
  CHECK_THROWS_AS(sample(spec_of(EnsembleKind::GOE, 1, 0), Pairing::Independent),
                  InvalidSpec);
  auto s = spec_of(EnsembleKind::SORTED_INT_DIAG, 3, 0);
  s.int_low = 9;
  s.int_high = 3;
  CHECK_THROWS_AS(sample(s, Pairing::Independent), InvalidSpec);
}

TEST_CASE("spectrum of simple matrices") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 3;
  d(2, 2) = 2;
  const auto s = spectrum(d);
  CHECK(s.values[0] == doctest::Approx(3.0));
  CHECK(s.values[1] == doctest::Approx(2.0));
  CHECK(s.values[2] == doctest::Approx(1.0));

  const auto id = spectrum(Eigen::MatrixXd::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(id.values[i] == doctest::Approx(1.0));
}

TEST_CASE("spectrum scaling: sigma(M+M) = 2 sigma(M)") {
  const auto pair = sample(spec_of(EnsembleKind::GOE, 5, 4), Pairing::Independent);
  const auto s1 = spectrum(pair.M);
  const auto s2 = spectrum(pair.M + pair.M);
  for (int i = 0; i < 5; ++i) CHECK(s2.values[i] == doctest::Approx(2 * s1.values[i]));
}

TEST_CASE("spectrum rejects asymmetric input") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(spectrum(bad), NotSymmetric);
}

TEST_CASE("triple_from_pair basics") {
  MatrixPair pair;
  pair.M = Eigen::MatrixXd::Zero(2, 2);
  pair.M(0, 0) = 2;
  pair.M(1, 1) = 1;
  pair.N = pair.M;
  pair.L = pair.M + pair.N;
  const auto triple = triple_from_pair(pair);
  CHECK(triple.mu()[0] == doctest::Approx(2));
  CHECK(triple.mu()[1] == doctest::Approx(1));
  CHECK(triple.lambda()[0] == doctest::Approx(4));
  CHECK(triple.lambda()[1] == doctest::Approx(2));
}

TEST_CASE("sorted diagonal pairs give integer third boundary") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pair = sample(spec_of(EnsembleKind::SORTED_INT_DIAG, 6, seed),
                             Pairing::Independent);
    const auto triple = triple_from_pair(pair);
    for (int i = 0; i < 6; ++i) {
      CHECK(triple.lambda()[i] ==
            doctest::Approx(std::llround(triple.lambda()[i])).epsilon(1e-9));
    }
  }
}

TEST_CASE("saturation residual small across all ensembles") {
  const EnsembleKind kinds[] = {EnsembleKind::GOE, EnsembleKind::SPD_NORMAL,
                                EnsembleKind::SPD_DIAG_DOMINANT,
                                EnsembleKind::SORTED_INT_DIAG,
                                EnsembleKind::FLIPPED_INT_DIAG};
  for (const auto kind : kinds) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto pair = sample(spec_of(kind, 6, seed), Pairing::Independent);
      const auto triple = triple_from_pair(pair);  // throws if saturation fails
      const double resid = triple.mu().sum() + triple.nu().sum() - triple.lambda().sum();
      CHECK(std::abs(resid) <= 1e-8 * std::max(1.0, std::abs(triple.lambda().sum())));
    }
  }
}

TEST_CASE("SPD ensembles have positive spectra") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = sample(spec_of(EnsembleKind::SPD_NORMAL, 6, seed),
                          Pairing::Independent);
    CHECK(spectrum(a.M).values.minCoeff() > 0.0);
    const auto b = sample(spec_of(EnsembleKind::SPD_DIAG_DOMINANT, 6, seed),
                          Pairing::Independent);
    CHECK(spectrum(b.M).values.minCoeff() > 0.0);
  }
}

TEST_CASE("GOE spectra follow a semicircle-like law") {
  // qualitative: eigenvalues of M/sqrt(n) symmetric about 0, compact support
  const int n = 200;
  const auto pair = sample(spec_of(EnsembleKind::GOE, n, 3), Pairing::Independent);
  const auto s = spectrum(pair.M / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(s.values.mean()) < 0.15);
  CHECK(s.values.maxCoeff() < 2.5);
  CHECK(s.values.minCoeff() > -2.5);
  // roughly symmetric quartiles
  CHECK(std::abs(s.values[n / 4] + s.values[3 * n / 4]) < 0.3);
}

TEST_CASE("ensemble names parse round trip") {
  CHECK(parse_ensemble("sid") == EnsembleKind::SORTED_INT_DIAG);
  CHECK(parse_ensemble("GOE") == EnsembleKind::GOE);
  CHECK(parse_ensemble("SPD_DD") == EnsembleKind::SPD_DIAG_DOMINANT);
  CHECK(to_string(EnsembleKind::FLIPPED_INT_DIAG) == "FLIPPED_INT_DIAG");
  CHECK_THROWS_AS(parse_ensemble("nope"), InvalidSpec);
}
