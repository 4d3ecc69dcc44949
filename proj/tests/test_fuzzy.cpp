#include <random>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/fuzzy.hpp"

using namespace mcdm;

namespace {

void check_tfn(const Tfn& got, double l, double m, double u, double tol = 1e-4) {
  CHECK(std::abs(got.l - l) <= tol);
  CHECK(std::abs(got.m - m) <= tol);
  CHECK(std::abs(got.u - u) <= tol);
}

Tfn random_tfn(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> d(0.05, 10.0);
  double a = d(gen), b = d(gen), c = d(gen);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

}  // namespace

TEST_CASE("addition") {
  CHECK(tfn_add({1, 1, 1}, {0, 0, 0}) == Tfn{1, 1, 1});
  CHECK(tfn_add({1, 2, 3}, {2, 3, 4}) == Tfn{3, 5, 7});
  check_tfn(tfn_add({0.5, 0.577, 0.707}, {1.414, 1.732, 2.0}), 1.914, 2.309, 2.707, 1e-12);
}

TEST_CASE("multiplication") {
  CHECK(tfn_mul({1, 1, 1}, {2, 3, 4}) == Tfn{2, 3, 4});
  CHECK(tfn_mul({1, 2, 3}, {2, 3, 4}) == Tfn{2, 6, 12});
  const Tfn p = tfn_mul({2, 3, 4}, tfn_invert({2, 3, 4}));
  check_tfn(p, 0.5, 1.0, 2.0, 1e-15);
}

TEST_CASE("inversion") {
  CHECK(tfn_invert({1, 1, 1}) == Tfn{1, 1, 1});
  check_tfn(tfn_invert({2, 3, 4}), 0.25, 1.0 / 3.0, 0.5, 1e-15);
  check_tfn(tfn_invert({6, 7, 8}), 0.125, 1.0 / 7.0, 1.0 / 6.0, 1e-15);
  CHECK_THROWS_AS(tfn_invert({0, 1, 2}), Error);
  try {
    tfn_invert({-1, 1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("nth root") {
  CHECK(tfn_nth_root({1, 1, 1}, 5) == Tfn{1, 1, 1});
  check_tfn(tfn_nth_root({2, 3, 4}, 2), 1.41421356, 1.73205081, 2.0, 1e-8);
  check_tfn(tfn_nth_root({8, 27, 64}, 3), 2, 3, 4, 1e-12);
  CHECK_THROWS_AS(tfn_nth_root({0, 1, 2}, 2), Error);
  CHECK_THROWS_AS(tfn_nth_root({1, 2, 3}, 0), Error);
}

TEST_CASE("centroid") {
  CHECK(defuzzify_centroid({0.2, 0.3, 0.4}) == doctest::Approx(0.3));
  CHECK(defuzzify_centroid({1, 1, 1}) == 1.0);
  CHECK(std::abs(defuzzify_centroid({0.5224, 0.75, 1.0448}) - 0.7724) < 1e-12);
}

TEST_CASE("linguistic scale") {
  CHECK(linguistic_to_tfn(LinguisticLabel::Equal) == Tfn{1, 1, 1});
  CHECK(linguistic_to_tfn(LinguisticLabel::Strong) == Tfn{4, 5, 6});
  check_tfn(linguistic_to_tfn(LinguisticLabel::Moderate, true), 0.25, 1.0 / 3.0, 0.5, 1e-15);

  const Tfn expected[] = {{1, 1, 1}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {9, 9, 9},
                          {1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}};
  for (std::size_t k = 0; k < kAllLabels.size(); ++k) {
    CAPTURE(k);
    CHECK(linguistic_to_tfn(kAllLabels[k]) == expected[k]);
    CHECK(parse_label(label_key(kAllLabels[k])) == kAllLabels[k]);
    CHECK(parse_label(label_phrase(kAllLabels[k])) == kAllLabels[k]);
  }
  CHECK(parse_label("Very Strong Important") == LinguisticLabel::VeryStrong);
  CHECK(parse_label("  strongly to very strongly more important ") == LinguisticLabel::StrongToVeryStrong);
  CHECK_THROWS_AS(parse_label("somewhat important"), Error);
  CHECK_FALSE(try_parse_label("").has_value());
}

TEST_CASE("algebra properties over random fuzzy numbers") {
  std::mt19937_64 gen(20240917);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tfn a = random_tfn(gen);
    const Tfn b = random_tfn(gen);
    REQUIRE(a.ordered());
    CHECK(tfn_add(a, b).ordered());
    CHECK(tfn_mul(a, b).ordered());
    CHECK(tfn_invert(a).ordered());
    const unsigned n = 1 + static_cast<unsigned>(trial % 9);
    const Tfn root = tfn_nth_root(a, n);
    CHECK(root.ordered());

    const Tfn back = tfn_invert(tfn_invert(a));
    CHECK(std::abs(back.l - a.l) <= 1e-12 * std::max(1.0, a.l));
    CHECK(std::abs(back.m - a.m) <= 1e-12 * std::max(1.0, a.m));
    CHECK(std::abs(back.u - a.u) <= 1e-12 * std::max(1.0, a.u));

    Tfn power{1, 1, 1};
    for (unsigned k = 0; k < n; ++k) power = tfn_mul(power, root);
    CHECK(std::abs(power.l - a.l) <= 1e-9);
    CHECK(std::abs(power.m - a.m) <= 1e-9);
    CHECK(std::abs(power.u - a.u) <= 1e-9);

    CHECK(defuzzify_centroid(tfn_add(a, b)) ==
          doctest::Approx(defuzzify_centroid(a) + defuzzify_centroid(b)).epsilon(1e-14));
  }
}
