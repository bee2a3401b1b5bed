#include <doctest.h>

#include "mulprob/channels.hpp"
#include "mulprob/dist.hpp"
#include "mulprob/errors.hpp"
#include "mulprob/ket.hpp"
#include "mulprob/laws.hpp"
#include "mulprob/multiset.hpp"
#include "mulprob/pml.hpp"
#include "oracles.hpp"

using namespace mulprob;

namespace {

Dist d(const char* text) { return parse_dist(text); }

const FiniteSpace ab = FiniteSpace::atoms({"a", "b"});

const Dist omega = d("<1/3 a, 2/3 b>");
const Dist rho = d("<3/4 a, 1/4 b>");
const Dist example = d("<1/12 [3 a], 13/36 [2 a, 1 b], 4/9 [1 a, 2 b], 1/9 [3 b]>");

// One factor per unit of multiplicity, for the brute-force oracle.
std::vector<Dist> factors(const Multiset& psi) {
  std::vector<Dist> out;
  for (const auto& [w, n] : psi.entries()) out.insert(out.end(), n, w.dist());
  return out;
}

// Every multiset of total size <= max_size over the given states.
std::vector<Multiset> psis(const std::vector<Dist>& states, std::size_t max_size) {
  std::vector<Value> values(states.begin(), states.end());
  const FiniteSpace space(values);
  std::vector<Multiset> out;
  for (std::size_t k = 0; k <= max_size; ++k) {
    for (auto& m : enumerate_multisets(space, k)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("worked example") {
  const auto psi = multiset_of_dists({{omega, 2}, {rho, 1}});
  CHECK(psi == parse_multiset("[2 <1/3 a, 2/3 b>, 1 <3/4 a, 1/4 b>]"));
  CHECK(pml(psi) == example);
  CHECK(pml_def1(psi) == example);
  CHECK(pml_def2(psi) == example);
  CHECK(pml_def4(psi) == example);
  CHECK(format(pml(psi)) == "<1/12 [3 a], 13/36 [2 a, 1 b], 4/9 [1 a, 2 b], 1/9 [3 b]>");
}

TEST_CASE("multiset_of_dists merges equal distributions") {
  const auto psi = multiset_of_dists({{omega, 1}, {d("<2/3 b, 1/3 a>"), 2}, {rho, 0}});
  CHECK(psi.size() == 3);
  CHECK(psi.entries().size() == 1);
}

TEST_CASE("a single repeated state gives the multinomial") {
  for (const auto& w : laws::state_pool(FiniteSpace::atoms({"a", "b", "c"}), 5, 3)) {
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(pml(multiset_of_dists({{w, k}})) == multinomial(w, k));
    }
  }
}

TEST_CASE("point masses give a point mass") {
  const auto psi = multiset_of_dists({{Dist::point(atom("a")), 2}, {Dist::point(atom("b")), 3}});
  CHECK(pml(psi) == Dist::point(Value(parse_multiset("[2 a, 3 b]"))));
}

TEST_CASE("empty multiset") {
  CHECK(pml(Multiset()) == Dist::point(Value(Multiset())));
  CHECK(pml_def1(Multiset()) == Dist::point(Value(Multiset())));
  CHECK(pml_def4(Multiset()) == Dist::point(Value(Multiset())));
}

TEST_CASE("frequentist learning after pml is the mixture") {
  const auto psi = multiset_of_dists({{omega, 2}, {rho, 1}});
  CHECK(push(flrn_channel(multiset_space(ab, 3)), pml(psi)) == d("<17/36 a, 19/36 b>"));
  CHECK(flatten(flrn(psi)) == d("<17/36 a, 19/36 b>"));
}

TEST_CASE("the four definitions agree with the oracle") {
  const auto states = laws::state_pool(ab, 2, 17);
  for (const auto& psi : psis(states, 4)) {
    const auto expected = oracle::pml(factors(psi));
    CHECK(pml(psi) == expected);
    CHECK(pml_def1(psi) == expected);
    CHECK(pml_def2(psi) == expected);
    CHECK(pml_def4(psi) == expected);
  }
}

TEST_CASE("defining triangle on tuples of states") {
  const auto states = laws::state_pool(ab, 2, 5);
  for (const auto& a : states) {
    for (const auto& b : states) {
      CHECK(pml_def3_check(std::vector<Dist>{a, b}));
      CHECK(pml_def3_check(std::vector<Dist>{a, b, omega}));
    }
  }
  CHECK(pml_def3_check(std::vector<Dist>{}));
}

TEST_CASE("require_dists") {
  CHECK_NOTHROW(require_dists(multiset_of_dists({{omega, 1}})));
  CHECK_NOTHROW(require_dists(Multiset()));
  CHECK_THROWS_AS(require_dists(parse_multiset("[2 a]")), DomainError);
  CHECK_THROWS_AS(pml(parse_multiset("[2 a]")), DomainError);
}

TEST_CASE("multiset sum algebra") {
  using A = MultisetSumAlgebra;
  const auto x = d("<1/2 [1 a], 1/2 [1 b]>");
  const auto y = d("<1/3 [2 a], 2/3 [1 a, 1 b]>");
  CHECK(A::plus(A::unit(), x) == x);
  CHECK(A::plus(x, A::unit()) == x);
  CHECK(A::plus(x, y) == A::plus(y, x));
  CHECK(A::plus(A::plus(x, y), x) == A::plus(x, A::plus(y, x)));
  CHECK(A::apply(Multiset()) == A::unit());
  CHECK(A::apply(Multiset{{Value(x), 1}}) == x);
  CHECK(A::apply(Multiset{{Value(x), 2}, {Value(y), 1}}) == A::plus(A::plus(x, x), y));
}

TEST_CASE("lifted map") {
  SUBCASE("identity channel") {
    const auto lift = lifted_map(Channel::identity(ab), 3);
    for (const auto& phi : lift.domain()) CHECK(lift(phi) == Dist::point(phi));
  }
  SUBCASE("deterministic channel acts as map_elements") {
    const auto f = Channel::deterministic(ab, [](const Value& x) {
      return x.name() == "a" ? atom("z0") : atom("z1");
    });
    const auto lift = lifted_map(f, 3);
    for (const auto& phi : lift.domain()) {
      CHECK(lift(phi) == Dist::point(Value(map_elements(
                             [](const Value& x) { return x.name() == "a" ? atom("z0") : atom("z1"); },
                             phi.multiset()))));
    }
  }
  SUBCASE("size one is the channel itself") {
    const auto c = laws::random_channel(ab, FiniteSpace::atoms({"z0", "z1"}), 4);
    const auto lift = lifted_map(c, 1);
    for (const auto& x : ab) {
      CHECK(lift(Value(Multiset{{x, 1}})) ==
            map_dist([](const Value& y) { return Value(Multiset{{y, 1}}); }, c(x)));
    }
  }
  SUBCASE("domain must stay inside the channel's domain") {
    CHECK_THROWS_AS(lifted_map(Channel::identity(ab), multiset_space(FiniteSpace::atoms({"a", "c"}), 1)),
                    DomainError);
  }
}

TEST_CASE("pml channel") {
  const auto states = laws::state_pool(ab, 2, 9);
  std::vector<Value> values(states.begin(), states.end());
  const auto space = multiset_space(FiniteSpace(values), 2);
  const auto c = pml_channel(space);
  for (const auto& psi : space) CHECK(c(psi) == pml(psi.multiset()));
}
