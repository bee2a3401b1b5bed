#include "mulprob/multiset.hpp"

#include <algorithm>

#include "mulprob/errors.hpp"

namespace mulprob {

Multiset add(const Multiset& phi, const Multiset& psi) {
  std::vector<Multiset::Entry> entries(phi.entries().begin(), phi.entries().end());
  entries.insert(entries.end(), psi.entries().begin(), psi.entries().end());
  return Multiset(std::move(entries));
}

Multiset sub(const Multiset& phi, const Value& x) {
  std::vector<Multiset::Entry> entries(phi.entries().begin(), phi.entries().end());
  for (auto& [y, n] : entries) {
    if (y == x) {
      --n;
      return Multiset(std::move(entries));
    }
  }
  throw DomainError("cannot remove an element outside the multiset's support");
}

bool leq(const Multiset& phi, const Multiset& psi) {
  return std::all_of(phi.entries().begin(), phi.entries().end(),
                     [&](const auto& e) { return e.second <= psi.count(e.first); });
}

Multiset tensor(const Multiset& phi, const Multiset& psi) {
  std::vector<Multiset::Entry> entries;
  entries.reserve(phi.entries().size() * psi.entries().size());
  for (const auto& [x, n] : phi.entries()) {
    for (const auto& [y, m] : psi.entries()) entries.emplace_back(Value::pair(x, y), n * m);
  }
  return Multiset(std::move(entries));
}

Multiset map_elements(const std::function<Value(const Value&)>& f, const Multiset& phi) {
  std::vector<Multiset::Entry> entries;
  entries.reserve(phi.entries().size());
  for (const auto& [x, n] : phi.entries()) entries.emplace_back(f(x), n);
  return Multiset(std::move(entries));
}

Multiset flatten_multiset(const Multiset& nested) {
  std::vector<Multiset::Entry> entries;
  for (const auto& [inner, n] : nested.entries()) {
    for (const auto& [x, m] : inner.multiset().entries()) entries.emplace_back(x, n * m);
  }
  return Multiset(std::move(entries));
}

Natural coefficient(const Multiset& phi) {
  Natural result = factorial(phi.size());
  for (const auto& e : phi.entries()) result /= factorial(e.second);
  return result;
}

Multiset acc(std::span<const Value> xs) {
  std::vector<Multiset::Entry> entries;
  entries.reserve(xs.size());
  for (const auto& x : xs) entries.emplace_back(x, 1);
  return Multiset(std::move(entries));
}

Multiset acc(const Value& tuple) { return acc(tuple.items()); }

std::vector<Multiset> enumerate_multisets(const FiniteSpace& space, std::size_t k) {
  if (space.empty() && k > 0) {
    throw DomainError("no multisets of positive size over the empty set");
  }
  if (space.empty()) return {Multiset()};
  check_cells(multichoose(space.size(), k), "multiset enumeration");

  const auto xs = space.elements();
  std::vector<Multiset> out;
  std::vector<std::size_t> counts(xs.size(), 0);
  // Fill positions left to right, largest remaining count first.
  auto fill = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == xs.size()) {
      counts[pos] = remaining;
      std::vector<Multiset::Entry> entries;
      for (std::size_t i = 0; i < xs.size(); ++i) entries.emplace_back(xs[i], counts[i]);
      out.emplace_back(std::move(entries));
      return;
    }
    for (std::size_t c = remaining + 1; c-- > 0;) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  fill(fill, 0, k);
  return out;
}

FiniteSpace multiset_space(const FiniteSpace& space, std::size_t k) {
  std::vector<Value> xs;
  for (auto& m : enumerate_multisets(space, k)) xs.emplace_back(std::move(m));
  return FiniteSpace(std::move(xs));
}

std::vector<Value> enumerate_arrangements(const Multiset& phi) {
  check_cells(coefficient(phi), "arrangement enumeration");
  std::vector<Value> elems;
  std::vector<std::size_t> left;
  for (const auto& [x, n] : phi.entries()) {
    elems.push_back(x);
    left.push_back(n);
  }
  std::vector<Value> out;
  std::vector<Value> prefix;
  prefix.reserve(phi.size());
  auto descend = [&](auto&& self) -> void {
    if (prefix.size() == phi.size()) {
      out.push_back(Value::tuple(prefix));
      return;
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      prefix.push_back(elems[i]);
      self(self);
      prefix.pop_back();
      ++left[i];
    }
  };
  descend(descend);
  return out;
}

std::vector<Multiset> enumerate_submultisets(const Multiset& phi, std::size_t k) {
  if (k > phi.size()) return {};
  const auto entries = phi.entries();
  std::vector<std::size_t> suffix(entries.size() + 1, 0);
  for (std::size_t i = entries.size(); i-- > 0;) suffix[i] = suffix[i + 1] + entries[i].second;

  std::vector<Multiset> out;
  std::vector<std::size_t> counts(entries.size(), 0);
  auto fill = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos == entries.size()) {
      if (remaining != 0) return;
      std::vector<Multiset::Entry> picked;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        picked.emplace_back(entries[i].first, counts[i]);
      }
      out.emplace_back(std::move(picked));
      return;
    }
    const std::size_t hi = std::min(remaining, entries[pos].second);
    for (std::size_t c = hi + 1; c-- > 0;) {
      if (remaining - c > suffix[pos + 1]) break;
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  fill(fill, 0, k);
  return out;
}

}  // namespace mulprob
