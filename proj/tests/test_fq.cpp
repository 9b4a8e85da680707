#include <doctest.h>

#include <random>
#include <set>

#include "wmk/errors.hpp"
#include "wmk/fq.hpp"

using namespace wmk::fq;

TEST_CASE("field orders and primitive generator") {
  for (int r = 1; r <= 6; ++r) {
    const auto F = build_field(r);
    Code q = 1;
    for (int i = 0; i < r; ++i) q *= 3;
    CHECK(F->order() == q);
    CHECK(F->modulus().size() == static_cast<std::size_t>(r + 1));
    CHECK(F->modulus().back() == 1);
    CHECK(F->multiplicative_order(F->generator()) == q - 1);
  }
}

TEST_CASE("construction is deterministic") {
  const auto a = build_field(4);
  const auto b = build_field(4);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->generator() == b->generator());
  CHECK(a->wp_coset_reps() == b->wp_coset_reps());
}

TEST_CASE("ring axioms exhaustively over F_9") {
  const auto F = build_field(2);
  for (Code a = 0; a < 9; ++a) {
    CHECK(F->add(a, F->neg(a)) == 0);
    CHECK(F->mul(a, 1) == a);
    if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    for (Code b = 0; b < 9; ++b) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      for (Code c = 0; c < 9; ++c) {
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      }
    }
  }
}

TEST_CASE("ring axioms on random triples over F_729") {
  const auto F = build_field(6);
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<Code> pick(0, F->order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const Code a = pick(rng), b = pick(rng), c = pick(rng);
    REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
  }
}

TEST_CASE("characteristic 3 and Frobenius") {
  const auto F = build_field(3);
  for (Code a = 0; a < F->order(); ++a) {
    CHECK(F->add(a, F->add(a, a)) == 0);
    CHECK(F->pow(F->cube_root(a), 3) == a);
  }
}

TEST_CASE("wp is additive with kernel F_3, exhaustively for q <= 81") {
  for (int r = 1; r <= 4; ++r) {
    const auto F = build_field(r);
    std::set<Code> image, kernel;
    for (Code a = 0; a < F->order(); ++a) {
      image.insert(F->wp(a));
      if (F->wp(a) == 0) kernel.insert(a);
      for (Code b = 0; b < F->order(); ++b) REQUIRE(F->wp(F->add(a, b)) == F->add(F->wp(a), F->wp(b)));
    }
    CHECK(kernel == std::set<Code>{0, 1, 2});
    CHECK(image.size() == F->order() / 3);
    for (Code a = 0; a < F->order(); ++a) CHECK(F->in_wp_image(a) == (image.count(a) == 1));
  }
}

TEST_CASE("wp coset representatives") {
  for (int r = 1; r <= 4; ++r) {
    const auto F = build_field(r);
    const auto& reps = F->wp_coset_reps();
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == 0);
    std::set<int> seen;
    for (Code a = 0; a < F->order(); ++a) {
      const int i = F->wp_coset_index(a);
      CHECK(F->in_wp_image(F->sub(a, reps[static_cast<std::size_t>(i)])));
      seen.insert(i);
    }
    CHECK(seen.size() == 3);
  }
}

TEST_CASE("squares") {
  const auto F = build_field(3);
  int squares = 0;
  for (Code a = 1; a < F->order(); ++a) squares += F->is_square(a);
  CHECK(squares == 13);
  CHECK_FALSE(F->is_square(F->generator()));
}

TEST_CASE("roots of unity") {
  CHECK(degree_containing_roots(13) == 3);
  CHECK(degree_containing_roots(10) == 4);
  CHECK(degree_containing_roots(7) == 6);
  const auto F = build_field(3);
  const auto z = root_of_unity(F, 13);
  CHECK(z.m == 1);
  CHECK(z.zeta.multiplicative_order() == 13);
  CHECK(z.discrete_log(z.zeta.pow(5)) == 5);
  // Extension case: 13th roots over F_3 live in F_27.
  const auto w = root_of_unity(build_field(1), 13);
  CHECK(w.m == 3);
  CHECK(w.zeta.multiplicative_order() == 13);
}

TEST_CASE("compatible roots: zeta_e = zeta_n^(n/e)") {
  const auto F = build_field(4);
  const auto z10 = root_of_unity(F, 10);
  const auto z5 = root_of_unity(F, 5);
  CHECK(z10.zeta.pow(2) == z5.zeta);
}

TEST_CASE("primes") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(728) == std::vector<std::uint64_t>{2, 7, 13});
}
