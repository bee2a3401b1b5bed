#pragma once

// Brute-force reference implementations. They work on raw token lists and
// index arithmetic and share no code with the formulas under test.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mulprob/combinatorics.hpp"
#include "mulprob/value.hpp"

namespace oracle {

using mulprob::Dist;
using mulprob::Multiset;
using mulprob::Natural;
using mulprob::Rational;
using mulprob::Value;

using Weights = std::map<Value, Rational>;

inline Dist to_dist(const Weights& w) {
  std::vector<Dist::Entry> entries(w.begin(), w.end());
  return Dist(std::move(entries));
}

inline Multiset count(const std::vector<Value>& xs) {
  std::vector<Multiset::Entry> entries;
  for (const auto& x : xs) entries.emplace_back(x, 1);
  return Multiset(std::move(entries));
}

// One token per unit of multiplicity.
inline std::vector<Value> tokens(const Multiset& phi) {
  std::vector<Value> out;
  for (const auto& [x, n] : phi.entries()) out.insert(out.end(), n, x);
  return out;
}

// mn[K](omega): walk all |supp|^K index vectors, multiply weights, count.
inline Dist multinomial(const Dist& omega, std::size_t k) {
  const auto& e = omega.entries();
  Weights out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Rational w = 1;
    std::vector<Value> xs;
    for (auto i : idx) {
      w *= e[i].second;
      xs.push_back(e[i].first);
    }
    out[Value(count(xs))] += w;
    std::size_t i = 0;
    while (i < k && ++idx[i] == e.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return to_dist(out);
}

// hg[K](psi): every ordered draw of K distinct balls, equally likely.
inline Dist hypergeometric(const Multiset& psi, std::size_t k) {
  const auto balls = tokens(psi);
  Weights counts;
  Natural total = 0;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(balls.size(), false);
  auto rec = [&](auto&& self) -> void {
    if (chosen.size() == k) {
      std::vector<Value> xs;
      for (auto i : chosen) xs.push_back(balls[i]);
      counts[Value(count(xs))] += 1;
      ++total;
      return;
    }
    for (std::size_t i = 0; i < balls.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  for (auto& [x, w] : counts) w /= Rational(total);
  return to_dist(counts);
}

// DD(psi): remove each ball with equal probability.
inline Dist draw_delete(const Multiset& psi) {
  auto balls = tokens(psi);
  Weights out;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    auto rest = balls;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    out[Value(count(rest))] += mulprob::make_rational(1, balls.size());
  }
  return to_dist(out);
}

// All |phi|! orderings of the tokens, duplicates included.
inline std::vector<std::vector<Value>> all_orderings(const Multiset& phi) {
  auto balls = tokens(phi);
  std::vector<std::size_t> idx(balls.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::vector<Value>> out;
  do {
    std::vector<Value> xs;
    for (auto i : idx) xs.push_back(balls[i]);
    out.push_back(std::move(xs));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// Number of distinct orderings.
inline std::size_t distinct_orderings(const Multiset& phi) {
  auto all = all_orderings(phi);
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

// mzip by zipping every pair of token orderings.
inline Dist mzip(const Multiset& phi, const Multiset& psi) {
  const auto xs = all_orderings(phi);
  const auto ys = all_orderings(psi);
  Weights out;
  const Rational w = Rational(1) / (Rational(static_cast<long>(xs.size())) * static_cast<long>(ys.size()));
  for (const auto& a : xs) {
    for (const auto& b : ys) {
      std::vector<Value> pairs;
      for (std::size_t i = 0; i < a.size(); ++i) pairs.push_back(Value::pair(a[i], b[i]));
      out[Value(count(pairs))] += w;
    }
  }
  return to_dist(out);
}

// pml(Psi): product over one factor per unit of multiplicity, counted.
inline Dist pml(const std::vector<Dist>& factors) {
  Weights out;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    Rational w = 1;
    std::vector<Value> xs;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      w *= factors[f].entries()[idx[f]].second;
      xs.push_back(factors[f].entries()[idx[f]].first);
    }
    out[Value(count(xs))] += w;
    std::size_t i = 0;
    while (i < factors.size() && ++idx[i] == factors[i].support_size()) idx[i++] = 0;
    if (i == factors.size()) break;
  }
  return to_dist(out);
}

// n! by repeated multiplication.
inline Natural factorial(unsigned n) {
  Natural r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, k) from Pascal's triangle.
inline Natural binomial(unsigned n, unsigned k) {
  std::vector<std::vector<Natural>> t(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? Natural(0) : t[n][k];
}

}  // namespace oracle
