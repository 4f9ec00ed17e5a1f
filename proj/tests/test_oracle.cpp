#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "gaintrail/errors.hpp"
#include "gaintrail/oracle.hpp"
#include "support.hpp"

using namespace gaintrail;
using testsupport::W;
using testsupport::fixture_path;
using testsupport::random_word;

TEST_CASE("every backend treats the empty word as identity") {
  for (const char* spec : {"z2 3", "z 2", "cyclic 6", "free 2", "sym 3 gens r=(1 2 3);t=(1 2)"}) {
    auto o = make_oracle(spec);
    CAPTURE(spec);
    CHECK(o->is_identity(Word{}));
  }
}

TEST_CASE("z2^k: every element is an involution") {
  auto o = make_oracle("z2 2");
  CHECK(o->is_identity(W({+1, +1})));
  CHECK(o->is_identity(W({+1, -1})));
  CHECK_FALSE(o->is_identity(W({+1, +2})));
  CHECK(o->equals(W({+1, +2}), W({+2, +1})));
}

TEST_CASE("z^k is torsion-free") {
  auto o = make_oracle("z 2");
  CHECK_FALSE(o->is_identity(W({+1, +1})));
  CHECK(o->is_identity(W({+1, +2, -1, -2})));
  CHECK(o->commutes(W({+1}), W({+2})));
}

TEST_CASE("cyclic order counts exponents mod n") {
  auto o = make_oracle("cyclic 6");
  CHECK(o->is_identity(W({+1, +1, +1, +1, +1, +1})));
  CHECK_FALSE(o->is_identity(W({+1, +1, +1})));
  CHECK(o->is_identity(W({-1, +1})));
  CHECK_FALSE(o->has_order_at_most_2(W({+1})));
  CHECK(o->has_order_at_most_2(W({+1, +1, +1})));
}

TEST_CASE("symmetric backend composes in reading order") {
  auto o = testsupport::s3();
  CHECK(o->is_identity(W({+1, +1, +1})));      // the 3-cycle cubed
  CHECK_FALSE(o->is_identity(W({+1, +1})));
  CHECK(o->has_order_at_most_2(W({+2})));      // transposition squared
  CHECK_FALSE(o->has_order_at_most_2(W({+1})));  // 3-cycle squared
  CHECK_FALSE(o->equals(W({+1, +2}), W({+2, +1})));
  CHECK_FALSE(o->commutes(W({+1}), W({+2})));
  CHECK(o->commutes(W({+1}), Word{}));

  // Pins the application order: r then t then r^-1 equals (1 3), not (2 3).
  auto o3 = testsupport::s3_three_gens();
  CHECK(o3->equals(W({+1, +3, -1}), W({+2})));
  CHECK_FALSE(o3->equals(W({+1, +3, -1}), W({+3})));
}

TEST_CASE("free group reduces formally") {
  auto o = make_oracle("free 2");
  CHECK_FALSE(o->is_identity(W({+1, +2, -1, -2})));
  CHECK(o->is_identity(W({+1, +2, -2, -1})));
}

TEST_CASE("table backend matches the cyclic backend it encodes") {
  auto table = make_oracle("table z6.table", GAINTRAIL_FIXTURE_DIR);
  auto cyclic = make_oracle("cyclic 6");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 1, 9);
    CHECK(table->is_identity(w) == cyclic->is_identity(w));
  }
  CHECK(table->header() == "table z6.table");
}

TEST_CASE("table backend rejects broken tables") {
  CHECK_THROWS_AS((void)make_oracle("table bad_rows.table", GAINTRAIL_FIXTURE_DIR), input_error);
  CHECK_THROWS_AS((void)make_oracle("table missing.table", GAINTRAIL_FIXTURE_DIR), input_error);
}

TEST_CASE("unknown generator ids are input errors") {
  auto o = make_oracle("z2 2");
  CHECK_THROWS_AS((void)o->is_identity(W({+3})), input_error);
  auto before = o->stats().query_count;
  CHECK_THROWS_AS((void)o->is_identity(W({+3})), input_error);
  CHECK(o->stats().query_count == before);  // rejected queries are not counted
}

TEST_CASE("header strings round-trip through the factory") {
  for (const char* spec :
       {"z2 3", "z 1", "cyclic 12", "free 4", "sym 4 gens a=(1 2 3 4);b=(1 2)"}) {
    auto o = make_oracle(spec);
    auto again = make_oracle(o->header());
    CHECK(again->header() == o->header());
    CHECK(again->generator_count() == o->generator_count());
  }
}

TEST_CASE("generator tokens resolve by name for the symmetric backend") {
  auto o = testsupport::s3();
  CHECK(o->token_name(1) == "r");
  CHECK(o->find_generator("t") == 2u);
  CHECK_FALSE(o->find_generator("x").has_value());
  auto z = make_oracle("z2 2");
  CHECK(z->find_generator("2") == 2u);
  CHECK_FALSE(z->find_generator("3").has_value());
}

TEST_CASE("algebraic laws hold on sampled words for every backend") {
  std::vector<std::unique_ptr<GroupOracle>> oracles;
  oracles.push_back(make_oracle("z2 2"));
  oracles.push_back(make_oracle("z 2"));
  oracles.push_back(make_oracle("cyclic 6"));
  oracles.push_back(make_oracle("free 2"));
  oracles.push_back(testsupport::s3());

  std::mt19937_64 rng(23);
  for (auto& o : oracles) {
    CAPTURE(o->header());
    for (int i = 0; i < 60; ++i) {
      Word u = random_word(rng, o->generator_count(), 4);
      Word v = random_word(rng, o->generator_count(), 4);
      Word w = random_word(rng, o->generator_count(), 4);

      CHECK(o->is_identity(concat(w, invert(w))));
      CHECK(o->equals(u, u));
      if (o->equals(u, v)) {
        CHECK(o->equals(v, u));
        CHECK(o->equals(concat(w, u), concat(w, v)));
      }
      if (o->equals(u, v) && o->equals(v, w)) CHECK(o->equals(u, w));
      CHECK(o->is_identity(w) == o->is_identity(free_reduce(w)));
      CHECK(o->commutes(u, v) == o->equals(concat(u, v), concat(v, u)));
    }
  }
}

TEST_CASE("stats count every identity query and track the longest word") {
  auto o = make_oracle("z2 2");
  CHECK(o->stats().query_count == 0);
  o->is_identity(W({+1}));
  o->is_identity(W({+1, +2, +1}));
  o->is_identity(Word{});
  CHECK(o->stats().query_count == 3);
  CHECK(o->stats().max_query_length == 3);
  CHECK(o->stats().total_query_length == 4);
  o->equals(W({+1}), W({+2}));  // one query of length 2
  CHECK(o->stats().query_count == 4);
  CHECK(o->stats().total_query_length == 6);
  o->reset_stats();
  CHECK(o->stats().query_count == 0);
  CHECK(o->stats().max_query_length == 0);
}
