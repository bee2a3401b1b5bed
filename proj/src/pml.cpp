#include "mulprob/pml.hpp"

#include "mulprob/channels.hpp"
#include "mulprob/errors.hpp"
#include "mulprob/multiset.hpp"

namespace mulprob {

MultisetOfDists multiset_of_dists(std::vector<std::pair<Dist, std::size_t>> entries) {
  std::vector<Multiset::Entry> ms;
  ms.reserve(entries.size());
  for (auto& [d, n] : entries) ms.emplace_back(Value(std::move(d)), n);
  return Multiset(std::move(ms));
}

void require_dists(const Multiset& psi) {
  for (const auto& e : psi.entries()) {
    if (!e.first.is_dist()) throw DomainError("pml expects a multiset of distributions");
  }
}

Dist pml_def1(const MultisetOfDists& psi) {
  require_dists(psi);
  std::vector<Dist> factors;
  factors.reserve(psi.size());
  for (const auto& [omega, n] : psi.entries()) {
    for (std::size_t i = 0; i < n; ++i) factors.push_back(omega.dist());
  }
  return map_dist([](const Value& xs) { return Value(acc(xs)); }, big_tensor(factors));
}

Dist pml_def2(const MultisetOfDists& psi) {
  require_dists(psi);
  Dist result = Dist::point(Value(Multiset()));
  for (const auto& [omega, n] : psi.entries()) {
    const Dist draws = multinomial(omega.dist(), n);
    DistBuilder next;
    for (const auto& [phi, w] : result.entries()) {
      for (const auto& [chi, v] : draws.entries()) {
        next.add(Value(add(phi.multiset(), chi.multiset())), w * v);
      }
    }
    result = next.build();
  }
  return result;
}

Dist MultisetSumAlgebra::unit() { return Dist::point(Value(Multiset())); }

Dist MultisetSumAlgebra::plus(const Dist& rho, const Dist& sigma) {
  DistBuilder out;
  for (const auto& [phi, w] : rho.entries()) {
    for (const auto& [chi, v] : sigma.entries()) {
      out.add(Value(add(phi.multiset(), chi.multiset())), w * v);
    }
  }
  return out.build();
}

Dist MultisetSumAlgebra::apply(const Multiset& rhos) {
  Dist result = unit();
  for (const auto& [rho, n] : rhos.entries()) {
    for (std::size_t i = 0; i < n; ++i) result = plus(result, rho.dist());
  }
  return result;
}

Dist pml_def4(const MultisetOfDists& psi) {
  require_dists(psi);
  // M D(eta): each omega becomes a distribution over singleton multisets.
  const Multiset lifted = map_elements(
      [](const Value& omega) {
        return Value(map_dist([](const Value& x) { return Value(Multiset{{x, 1}}); },
                              omega.dist()));
      },
      psi);
  return MultisetSumAlgebra::apply(lifted);
}

Dist pml(const MultisetOfDists& psi) { return pml_def2(psi); }

bool pml_def3_check(std::span<const Dist> states) {
  std::vector<Value> as_values;
  as_values.reserve(states.size());
  for (const auto& s : states) as_values.emplace_back(s);
  const Dist lhs = pml(acc(as_values));
  const Dist rhs =
      map_dist([](const Value& xs) { return Value(acc(xs)); }, big_tensor(states));
  return lhs == rhs;
}

Channel pml_channel(const FiniteSpace& multisets_of_dists) {
  return Channel(multisets_of_dists, [](const Value& psi) { return pml(psi.multiset()); });
}

Channel lifted_map(const Channel& f, std::size_t k) {
  return lifted_map(f, multiset_space(f.domain(), k));
}

Channel lifted_map(const Channel& f, const FiniteSpace& multisets) {
  for (const auto& phi : multisets) {
    for (const auto& e : phi.multiset().entries()) {
      if (!f.domain().contains(e.first)) {
        throw DomainError("lifted map domain escapes the channel's domain");
      }
    }
  }
  return Channel(multisets, [f](const Value& phi) {
    return pml(map_elements([&f](const Value& x) { return Value(f(x)); }, phi.multiset()));
  });
}

}  // namespace mulprob
