#include "mulprob/dist.hpp"

#include <map>
#include <mutex>

#include "mulprob/errors.hpp"
#include "mulprob/multiset.hpp"

namespace mulprob {

struct Channel::State {
  FiniteSpace domain;
  Kernel kernel;
  std::mutex mutex;
  std::map<Value, Dist> cache;
};

Channel::Channel(FiniteSpace domain, Kernel kernel)
    : state_(std::make_shared<State>()) {
  state_->domain = std::move(domain);
  state_->kernel = std::move(kernel);
}

Channel Channel::deterministic(FiniteSpace domain, std::function<Value(const Value&)> f) {
  return Channel(std::move(domain),
                 [f = std::move(f)](const Value& x) { return Dist::point(f(x)); });
}

Channel Channel::identity(FiniteSpace domain) {
  return Channel(std::move(domain), [](const Value& x) { return Dist::point(x); });
}

const FiniteSpace& Channel::domain() const { return state_->domain; }

Dist Channel::operator()(const Value& x) const {
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->cache.find(x); it != state_->cache.end()) return it->second;
  }
  if (!state_->domain.contains(x)) {
    throw DomainError("input outside the channel's domain");
  }
  // Evaluated outside the lock: kernels may call other channels.
  Dist result = state_->kernel(x);
  std::lock_guard lock(state_->mutex);
  return state_->cache.try_emplace(x, std::move(result)).first->second;
}

std::optional<ChannelMismatch> first_difference(const Channel& lhs, const Channel& rhs) {
  if (!(lhs.domain() == rhs.domain())) {
    const auto& a = lhs.domain();
    const auto& b = rhs.domain();
    for (const auto& x : a) {
      if (!b.contains(x)) return ChannelMismatch{x, std::nullopt, std::nullopt};
    }
    for (const auto& x : b) {
      if (!a.contains(x)) return ChannelMismatch{x, std::nullopt, std::nullopt};
    }
  }
  for (const auto& x : lhs.domain()) {
    Dist l = lhs(x);
    Dist r = rhs(x);
    if (!(l == r)) return ChannelMismatch{x, std::move(l), std::move(r)};
  }
  return std::nullopt;
}

Dist unit(const Value& x) { return Dist::point(x); }

Dist push(const Channel& f, const Dist& omega) {
  DistBuilder out;
  for (const auto& [x, w] : omega.entries()) {
    if (!f.domain().contains(x)) {
      throw DomainError("distribution support escapes the channel's domain");
    }
    for (const auto fx = f(x); const auto& [y, v] : fx.entries()) out.add(y, w * v);
  }
  return out.build();
}

Channel compose(const Channel& g, const Channel& f) {
  return Channel(f.domain(), [g, f](const Value& x) { return push(g, f(x)); });
}

Channel pipeline(std::initializer_list<Channel> stages) {
  if (stages.size() == 0) throw DomainError("empty pipeline");
  auto it = stages.begin();
  Channel result = *it;
  for (++it; it != stages.end(); ++it) result = compose(*it, result);
  return result;
}

Dist flatten(const Dist& nested) {
  DistBuilder out;
  for (const auto& [inner, w] : nested.entries()) {
    for (const auto& [x, v] : inner.dist().entries()) out.add(x, w * v);
  }
  return out.build();
}

Dist map_dist(const std::function<Value(const Value&)>& f, const Dist& omega) {
  DistBuilder out;
  for (const auto& [x, w] : omega.entries()) out.add(f(x), w);
  return out.build();
}

Dist dtensor(const Dist& omega, const Dist& rho) {
  std::vector<Dist::Entry> entries;
  entries.reserve(omega.support_size() * rho.support_size());
  for (const auto& [x, w] : omega.entries()) {
    for (const auto& [y, v] : rho.entries()) entries.emplace_back(Value::pair(x, y), w * v);
  }
  return Dist(std::move(entries));
}

Channel ctensor(const Channel& f, const Channel& g) {
  return Channel(product(f.domain(), g.domain()), [f, g](const Value& xy) {
    return dtensor(f(xy.first()), g(xy.second()));
  });
}

Dist big_tensor(std::span<const Dist> states) {
  Natural cells = 1;
  for (const auto& s : states) cells *= static_cast<unsigned long>(s.support_size());
  check_cells(cells, "big tensor");

  std::vector<std::pair<std::vector<Value>, Rational>> partial{{{}, Rational(1)}};
  for (const auto& s : states) {
    std::vector<std::pair<std::vector<Value>, Rational>> next;
    next.reserve(partial.size() * s.support_size());
    for (const auto& [prefix, w] : partial) {
      for (const auto& [x, v] : s.entries()) {
        auto t = prefix;
        t.push_back(x);
        next.emplace_back(std::move(t), w * v);
      }
    }
    partial = std::move(next);
  }
  std::vector<Dist::Entry> entries;
  entries.reserve(partial.size());
  for (auto& [t, w] : partial) entries.emplace_back(Value::tuple(std::move(t)), std::move(w));
  return Dist(std::move(entries));
}

Dist iid(const Dist& omega, std::size_t k) {
  std::vector<Dist> copies(k, omega);
  return big_tensor(copies);
}

Dist flrn(const Multiset& phi) {
  if (phi.empty()) throw DomainError("frequentist learning of an empty multiset");
  const unsigned long n = phi.size();
  std::vector<Dist::Entry> entries;
  entries.reserve(phi.entries().size());
  for (const auto& [x, m] : phi.entries()) {
    entries.emplace_back(x, make_rational(static_cast<long>(m), n));
  }
  return Dist(std::move(entries));
}

Rational validity(const Dist& omega, const Predicate& p) {
  Rational total = 0;
  for (const auto& [x, w] : omega.entries()) total += w * p(x);
  return total;
}

Dist update(const Dist& omega, const Predicate& p) {
  const Rational v = validity(omega, p);
  if (sgn(v) == 0) throw DomainError("update with zero validity");
  std::vector<Dist::Entry> entries;
  entries.reserve(omega.support_size());
  for (const auto& [x, w] : omega.entries()) entries.emplace_back(x, w * p(x) / v);
  return Dist(std::move(entries));
}

Rational pred_extend_at(const Predicate& p, const Multiset& phi) {
  Rational result = 1;
  for (const auto& [x, n] : phi.entries()) result *= pow(p(x), n);
  return result;
}

Predicate pred_extend(const Predicate& p, std::size_t k) {
  std::vector<Predicate::Entry> entries;
  for (auto& phi : enumerate_multisets(p.domain(), k)) {
    Rational v = pred_extend_at(p, phi);
    entries.emplace_back(Value(std::move(phi)), std::move(v));
  }
  return Predicate(std::move(entries));
}

Predicate conjunction(const Predicate& p, const Predicate& q) {
  std::vector<Predicate::Entry> entries;
  for (const auto& [x, v] : p.entries()) {
    if (q.defined_at(x)) entries.emplace_back(x, v * q(x));
  }
  return Predicate(std::move(entries));
}

bool dist_equal(const Dist& omega, const Dist& rho) { return omega == rho; }

Dist mix(std::span<const std::pair<Rational, Dist>> parts) {
  DistBuilder out;
  for (const auto& [w, d] : parts) {
    for (const auto& [x, v] : d.entries()) out.add(x, w * v);
  }
  return out.build();
}

}  // namespace mulprob
