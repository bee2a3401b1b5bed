#include "mulprob/channels.hpp"

#include <stdexcept>

#include "mulprob/errors.hpp"
#include "mulprob/multiset.hpp"

namespace mulprob {

Dist arrange(const Multiset& phi) {
  const auto sequences = enumerate_arrangements(phi);
  const Rational w = make_rational(Natural(1), coefficient(phi));
  std::vector<Dist::Entry> entries;
  entries.reserve(sequences.size());
  for (const auto& s : sequences) entries.emplace_back(s, w);
  return Dist(std::move(entries));
}

Dist multinomial(const Dist& omega, std::size_t k) {
  std::vector<Dist::Entry> entries;
  for (auto& phi : enumerate_multisets(omega.support(), k)) {
    Rational w(coefficient(phi));
    for (const auto& [x, n] : phi.entries()) w *= pow(omega.weight(x), n);
    entries.emplace_back(Value(std::move(phi)), std::move(w));
  }
  return Dist(std::move(entries));
}

Dist hypergeometric(const Multiset& psi, std::size_t k) {
  if (k > psi.size()) {
    throw DomainError("cannot draw " + std::to_string(k) + " elements from an urn of size " +
                      std::to_string(psi.size()));
  }
  const Natural total = binomial(psi.size(), k);
  std::vector<Dist::Entry> entries;
  for (auto& phi : enumerate_submultisets(psi, k)) {
    Natural ways = 1;
    for (const auto& [x, n] : phi.entries()) ways *= binomial(psi.count(x), n);
    entries.emplace_back(Value(std::move(phi)), make_rational(ways, total));
  }
  return Dist(std::move(entries));
}

Dist draw_delete(const Multiset& psi) {
  if (psi.empty()) throw DomainError("draw-and-delete from an empty urn");
  const unsigned long n = psi.size();
  std::vector<Dist::Entry> entries;
  for (const auto& [x, m] : psi.entries()) {
    entries.emplace_back(Value(sub(psi, x)), make_rational(static_cast<long>(m), n));
  }
  return Dist(std::move(entries));
}

Dist ppr(const Value& tuple) {
  const auto xs = tuple.items();
  if (xs.empty()) throw DomainError("probabilistic projection of the empty tuple");
  const Rational w = make_rational(1, xs.size());
  std::vector<Dist::Entry> entries;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    std::vector<Value> rest;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i != k) rest.push_back(xs[i]);
    }
    entries.emplace_back(Value::tuple(std::move(rest)), w);
  }
  return Dist(std::move(entries));
}

Value zip(const Value& xs, const Value& ys) {
  const auto a = xs.items();
  const auto b = ys.items();
  if (a.size() != b.size()) throw DomainError("zip of tuples with different lengths");
  std::vector<Value> pairs;
  pairs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) pairs.push_back(Value::pair(a[i], b[i]));
  return Value::tuple(std::move(pairs));
}

Dist mzip(const Multiset& phi, const Multiset& psi) {
  if (phi.size() != psi.size()) throw DomainError("mzip of multisets with different sizes");
  const auto xs = enumerate_arrangements(phi);
  const auto ys = enumerate_arrangements(psi);
  const Rational w = make_rational(Natural(1), coefficient(phi) * coefficient(psi));
  DistBuilder out;
  for (const auto& x : xs) {
    for (const auto& y : ys) out.add(Value(acc(zip(x, y))), w);
  }
  return out.build();
}

Dist msum_channel(const Multiset& phi, const Multiset& psi) {
  DistBuilder out;
  for (const auto left = arrange(phi); const auto& [xs, w] : left.entries()) {
    for (const auto right = arrange(psi); const auto& [ys, v] : right.entries()) {
      std::vector<Value> joined(xs.items().begin(), xs.items().end());
      joined.insert(joined.end(), ys.items().begin(), ys.items().end());
      out.add(Value(acc(joined)), w * v);
    }
  }
  Dist result = out.build();
  if (result.support_size() != 1) {
    throw std::logic_error("concatenation composite is not deterministic");
  }
  return result;
}

Channel arr_channel(const FiniteSpace& multisets) {
  return Channel(multisets, [](const Value& phi) { return arrange(phi.multiset()); });
}

Channel acc_channel(const FiniteSpace& tuples) {
  return Channel::deterministic(tuples, [](const Value& xs) { return Value(acc(xs)); });
}

Channel mn_channel(const FiniteSpace& states, std::size_t k) {
  return Channel(states, [k](const Value& omega) { return multinomial(omega.dist(), k); });
}

Channel iid_channel(const FiniteSpace& states, std::size_t k) {
  return Channel(states, [k](const Value& omega) { return iid(omega.dist(), k); });
}

Channel hg_channel(const FiniteSpace& urns, std::size_t k) {
  return Channel(urns, [k](const Value& psi) { return hypergeometric(psi.multiset(), k); });
}

Channel dd_channel(const FiniteSpace& urns) {
  return Channel(urns, [](const Value& psi) { return draw_delete(psi.multiset()); });
}

Channel dd_power_channel(const FiniteSpace& urns, std::size_t times) {
  return Channel(urns, [times](const Value& psi) {
    Dist current = Dist::point(psi);
    for (std::size_t i = 0; i < times; ++i) {
      DistBuilder next;
      for (const auto& [phi, w] : current.entries()) {
        for (const auto dd = draw_delete(phi.multiset()); const auto& [chi, v] : dd.entries()) {
          next.add(chi, w * v);
        }
      }
      current = next.build();
    }
    return current;
  });
}

Channel flrn_channel(const FiniteSpace& multisets) {
  return Channel(multisets, [](const Value& phi) { return flrn(phi.multiset()); });
}

Channel ppr_channel(const FiniteSpace& tuples) {
  return Channel(tuples, [](const Value& xs) { return ppr(xs); });
}

Channel zip_channel(const FiniteSpace& tuple_pairs) {
  return Channel::deterministic(tuple_pairs,
                                [](const Value& p) { return zip(p.first(), p.second()); });
}

Channel mzip_channel(const FiniteSpace& multiset_pairs) {
  return Channel(multiset_pairs, [](const Value& p) {
    return mzip(p.first().multiset(), p.second().multiset());
  });
}

Channel sum_channel(const FiniteSpace& multiset_pairs) {
  return Channel::deterministic(multiset_pairs, [](const Value& p) {
    return Value(add(p.first().multiset(), p.second().multiset()));
  });
}

Channel big_tensor_channel(const FiniteSpace& state_tuples) {
  return Channel(state_tuples, [](const Value& t) {
    std::vector<Dist> states;
    for (const auto& s : t.items()) states.push_back(s.dist());
    return big_tensor(states);
  });
}

Channel power_map(const Channel& f, const FiniteSpace& tuples) {
  return Channel(tuples, [f](const Value& t) {
    std::vector<Dist> states;
    for (const auto& x : t.items()) states.push_back(f(x));
    return big_tensor(states);
  });
}

}  // namespace mulprob
