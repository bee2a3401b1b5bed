#include <doctest.h>

#include <algorithm>
#include <random>

#include "mulprob/errors.hpp"
#include "mulprob/ket.hpp"
#include "mulprob/multiset.hpp"
#include "oracles.hpp"

using namespace mulprob;

namespace {

Multiset ms(const char* text) { return parse_multiset(text); }

FiniteSpace letters(std::size_t n) {
  std::vector<Value> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Value::atom(std::string(1, static_cast<char>('a' + i))));
  return FiniteSpace(std::move(xs));
}

// Every multiset over `space` with size <= max_size.
std::vector<Multiset> all_upto(const FiniteSpace& space, std::size_t max_size) {
  std::vector<Multiset> out;
  for (std::size_t k = 0; k <= max_size; ++k) {
    for (auto& m : enumerate_multisets(space, k)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("storage is canonical") {
  const Multiset m{{atom("b"), 2}, {atom("a"), 1}, {atom("b"), 1}, {atom("c"), 0}};
  REQUIRE(m.entries().size() == 2);
  CHECK(m.entries()[0].first == atom("a"));
  CHECK(m.count(atom("b")) == 3);
  CHECK(m.count(atom("c")) == 0);
  CHECK(m.support() == FiniteSpace::atoms({"a", "b"}));
  CHECK(m == ms("[1 a, 3 b]"));
}

TEST_CASE("size") {
  CHECK(ms("[3 a, 2 b]").size() == 5);
  CHECK(Multiset().size() == 0);
  CHECK(Multiset().empty());
  CHECK(ms("[7 x]").size() == 7);
}

TEST_CASE("add") {
  CHECK(add(ms("[2 a]"), ms("[1 a, 1 b]")) == ms("[3 a, 1 b]"));
  CHECK(add(ms("[2 a, 1 b]"), Multiset()) == ms("[2 a, 1 b]"));
  CHECK(add(ms("[1 a]"), ms("[1 b]")) == ms("[1 a, 1 b]"));
}

TEST_CASE("sub") {
  CHECK(sub(ms("[3 a, 2 b]"), atom("a")) == ms("[2 a, 2 b]"));
  CHECK(sub(ms("[1 x]"), atom("x")) == Multiset());
  CHECK_THROWS_AS(sub(ms("[2 b]"), atom("a")), DomainError);
}

TEST_CASE("leq") {
  CHECK(leq(ms("[1 a]"), ms("[3 a, 2 b]")));
  CHECK_FALSE(leq(ms("[4 a]"), ms("[3 a, 2 b]")));
  CHECK(leq(Multiset(), ms("[3 a, 2 b]")));
  CHECK_FALSE(leq(ms("[1 c]"), ms("[3 a, 2 b]")));
}

TEST_CASE("tensor") {
  CHECK(tensor(ms("[3 a, 2 b, 1 c]"), ms("[2 z0, 4 z1]")) ==
        ms("[6 (a,z0), 12 (a,z1), 4 (b,z0), 8 (b,z1), 2 (c,z0), 4 (c,z1)]"));
  CHECK(tensor(ms("[2 a, 1 b]"), ms("[1 y]")) == ms("[2 (a,y), 1 (b,y)]"));
  CHECK(tensor(Multiset(), ms("[2 a]")) == Multiset());
}

TEST_CASE("map_elements") {
  CHECK(map_elements([](const Value&) { return atom("c"); }, ms("[3 a, 2 b]")) == ms("[5 c]"));
  CHECK(map_elements([](const Value& x) { return x; }, ms("[3 a, 2 b]")) == ms("[3 a, 2 b]"));
  CHECK(map_elements([](const Value& p) { return p.first(); }, ms("[2 (a,z0), 1 (b,z0)]")) ==
        ms("[2 a, 1 b]"));
}

TEST_CASE("flatten_multiset") {
  CHECK(flatten_multiset(ms("[2 [1 a, 1 b], 1 [3 a]]")) == ms("[5 a, 2 b]"));
  CHECK(flatten_multiset(Multiset()) == Multiset());
}

TEST_CASE("coefficient") {
  CHECK(coefficient(ms("[2 a, 3 b]")) == 10);
  CHECK(coefficient(ms("[4 x]")) == 1);
  CHECK(coefficient(ms("[1 a, 1 b, 1 c]")) == 6);
  CHECK(coefficient(Multiset()) == 1);
}

TEST_CASE("coefficient counts distinct orderings") {
  for (const auto& phi : all_upto(letters(3), 6)) {
    CHECK(coefficient(phi) == oracle::distinct_orderings(phi));
  }
}

TEST_CASE("acc") {
  CHECK(acc(parse_value("(a,a,b,a)")) == ms("[3 a, 1 b]"));
  CHECK(acc(parse_value("()")) == Multiset());
  CHECK(acc(parse_value("(b,a)")) == ms("[1 a, 1 b]"));
}

TEST_CASE("acc is permutation-stable") {
  std::vector<Value> xs{atom("a"), atom("b"), atom("a"), atom("c"), atom("b")};
  const Multiset expected = acc(xs);
  std::sort(xs.begin(), xs.end());
  do {
    CHECK(acc(xs) == expected);
  } while (std::next_permutation(xs.begin(), xs.end()));
}

TEST_CASE("enumerate_multisets") {
  const auto ab = FiniteSpace::atoms({"a", "b"});
  const auto got = enumerate_multisets(ab, 3);
  REQUIRE(got.size() == 4);
  CHECK(got[0] == ms("[3 a]"));
  CHECK(got[1] == ms("[2 a, 1 b]"));
  CHECK(got[2] == ms("[1 a, 2 b]"));
  CHECK(got[3] == ms("[3 b]"));

  const auto zero = enumerate_multisets(letters(3), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Multiset());

  const auto ones = enumerate_multisets(letters(3), 1);
  REQUIRE(ones.size() == 3);
  CHECK(ones[0] == ms("[1 a]"));
  CHECK(ones[1] == ms("[1 b]"));
  CHECK(ones[2] == ms("[1 c]"));

  CHECK(enumerate_multisets(FiniteSpace(), 0).size() == 1);
  CHECK_THROWS_AS(enumerate_multisets(FiniteSpace(), 2), DomainError);
}

TEST_CASE("enumerate_multisets lists each multiset once, with the right size") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k <= 6; ++k) {
      auto all = enumerate_multisets(letters(n), k);
      CHECK(Natural(all.size()) == multichoose(n, k));
      for (const auto& m : all) CHECK(m.size() == k);
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("coefficients partition the tuple space") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 0; k <= 5; ++k) {
      Natural total = 0;
      for (const auto& m : enumerate_multisets(letters(n), k)) total += coefficient(m);
      Natural expected = 1;
      for (std::size_t i = 0; i < k; ++i) expected *= static_cast<unsigned long>(n);
      CHECK(total == expected);
    }
  }
}

TEST_CASE("enumerate_arrangements") {
  const auto got = enumerate_arrangements(ms("[1 a, 2 b]"));
  REQUIRE(got.size() == 3);
  CHECK(got[0] == parse_value("(a,b,b)"));
  CHECK(got[1] == parse_value("(b,a,b)"));
  CHECK(got[2] == parse_value("(b,b,a)"));

  const auto constant = enumerate_arrangements(ms("[4 x]"));
  REQUIRE(constant.size() == 1);
  CHECK(constant[0] == parse_value("(x,x,x,x)"));

  CHECK(enumerate_arrangements(ms("[2 a, 3 b]")).size() == 10);

  const auto empty = enumerate_arrangements(Multiset());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Value::tuple({}));
}

TEST_CASE("arrangements are distinct and accumulate back") {
  for (const auto& phi : all_upto(letters(3), 6)) {
    const auto seqs = enumerate_arrangements(phi);
    CHECK(Natural(seqs.size()) == coefficient(phi));
    CHECK(std::is_sorted(seqs.begin(), seqs.end()));
    CHECK(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end());
    for (const auto& s : seqs) CHECK(acc(s) == phi);
  }
}

TEST_CASE("submultisets") {
  const auto subs = enumerate_submultisets(ms("[3 a, 2 b]"), 2);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == ms("[2 a]"));
  CHECK(subs[1] == ms("[1 a, 1 b]"));
  CHECK(subs[2] == ms("[2 b]"));
  CHECK(enumerate_submultisets(ms("[1 a]"), 2).empty());
  for (const auto& phi : all_upto(letters(3), 5)) {
    for (std::size_t k = 0; k <= phi.size(); ++k) {
      for (const auto& chi : enumerate_submultisets(phi, k)) {
        CHECK(chi.size() == k);
        CHECK(leq(chi, phi));
      }
    }
  }
}

TEST_CASE("size is additive under add and multiplicative under tensor") {
  const auto all = all_upto(FiniteSpace::atoms({"a", "b"}), 6);
  const auto ys = all_upto(FiniteSpace::atoms({"z0", "z1"}), 6);
  for (const auto& phi : all) {
    for (const auto& psi : ys) {
      CHECK(add(phi, psi).size() == phi.size() + psi.size());
      CHECK(tensor(phi, psi).size() == phi.size() * psi.size());
    }
  }
}

TEST_CASE("map_elements is functorial") {
  const auto x = letters(3);
  auto f = [](const Value& v) { return v.name() == "c" ? atom("a") : atom("z"); };
  auto g = [](const Value& v) { return Value::pair(v, v); };
  for (const auto& phi : all_upto(x, 4)) {
    CHECK(map_elements([&](const Value& v) { return g(f(v)); }, phi) ==
          map_elements(g, map_elements(f, phi)));
    CHECK(map_elements([](const Value& v) { return v; }, phi) == phi);
  }
}

TEST_CASE("colexicographic order") {
  CHECK(ms("[3 a]") < ms("[2 a, 1 b]"));
  CHECK(ms("[2 a, 1 b]") < ms("[1 a, 2 b]"));
  CHECK(ms("[1 a, 2 b]") < ms("[3 b]"));
  CHECK(Multiset() < ms("[1 a]"));
  CHECK(ms("[5 a]") < ms("[1 b]"));
  std::mt19937_64 rng(3);
  auto all = all_upto(letters(3), 3);
  for (int i = 0; i < 200; ++i) {
    const auto& p = all[rng() % all.size()];
    const auto& q = all[rng() % all.size()];
    const auto& r = all[rng() % all.size()];
    CHECK(((p < q) + (q < p) + (p == q)) == 1);
    if (p < q && q < r) CHECK(p < r);
  }
}

TEST_CASE("product and power spaces") {
  const auto ab = FiniteSpace::atoms({"a", "b"});
  CHECK(product(ab, ab).size() == 4);
  CHECK(product(ab, FiniteSpace()).size() == 0);
  CHECK(power(ab, 3).size() == 8);
  REQUIRE(power(ab, 0).size() == 1);
  CHECK(power(ab, 0).elements()[0] == Value::tuple({}));
}
