#include "mulprob/laws.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "mulprob/channels.hpp"
#include "mulprob/errors.hpp"
#include "mulprob/ket.hpp"
#include "mulprob/multiset.hpp"
#include "mulprob/pml.hpp"

namespace mulprob::laws {

namespace {

using Rng = std::mt19937_64;
using Fn = std::function<Value(const Value&)>;
using Stage = std::function<Channel(const FiniteSpace&)>;

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t extra = 0) {
  // FNV-1a over the tag, folded with the seed and a counter.
  std::uint64_t h = 14695981039346656037ull ^ seed;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= extra + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

FiniteSpace named_space(const char* prefix, bool numbered, std::size_t n) {
  std::vector<Value> xs;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(Value::atom(numbered ? prefix + std::to_string(i)
                                      : std::string(1, static_cast<char>('a' + i))));
  }
  return FiniteSpace(std::move(xs));
}

Dist random_dist(const FiniteSpace& space, Rng& rng) {
  std::vector<unsigned long> w(space.size());
  unsigned long total = 0;
  for (auto& x : w) total += (x = below(rng, 5));
  if (total == 0) total = ++w[below(rng, w.size())];
  std::vector<Dist::Entry> entries;
  for (std::size_t i = 0; i < w.size(); ++i) {
    entries.emplace_back(space.elements()[i], make_rational(static_cast<long>(w[i]), total));
  }
  return Dist(std::move(entries));
}

Dist uniform(const FiniteSpace& space) {
  std::vector<Dist::Entry> entries;
  for (const auto& x : space) {
    entries.emplace_back(x, make_rational(1, static_cast<unsigned long>(space.size())));
  }
  return Dist(std::move(entries));
}

FiniteSpace as_space(const std::vector<Dist>& states) {
  std::vector<Value> xs;
  for (const auto& s : states) xs.emplace_back(s);
  return FiniteSpace(std::move(xs));
}

// Union of the supports of c over its domain.
FiniteSpace image(const Channel& c) {
  std::vector<Value> xs;
  for (const auto& x : c.domain()) {
    for (const auto cx = c(x); const auto& [y, w] : cx.entries()) xs.push_back(y);
  }
  return FiniteSpace(std::move(xs));
}

// next . first, with next built on exactly the outputs of first.
Channel then(const Channel& first, const Stage& next) {
  return compose(next(image(first)), first);
}

Channel restrict(const Channel& c, FiniteSpace domain) {
  return Channel(std::move(domain), [c](const Value& x) { return c(x); });
}

Channel fn_channel(const FiniteSpace& domain, Fn f) {
  return Channel::deterministic(domain, std::move(f));
}

// M(f) on multiset values.
Fn lift_fn(Fn f) {
  return [f = std::move(f)](const Value& phi) { return Value(map_elements(f, phi.multiset())); };
}

// All functions between two finite spaces, as lookup tables.
std::vector<Fn> all_functions(const FiniteSpace& from, const FiniteSpace& to) {
  std::vector<Fn> out;
  std::vector<std::size_t> digits(from.size(), 0);
  while (true) {
    auto table = std::make_shared<std::map<Value, Value>>();
    for (std::size_t i = 0; i < from.size(); ++i) {
      table->emplace(from.elements()[i], to.elements()[digits[i]]);
    }
    out.push_back([table](const Value& x) { return table->at(x); });
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == to.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

Value dist_tensor_value(const Value& pair) {
  return Value(dtensor(pair.first().dist(), pair.second().dist()));
}

Value multiset_tensor_value(const Value& pair) {
  return Value(tensor(pair.first().multiset(), pair.second().multiset()));
}

// Records instances and keeps the first disagreement.
class Recorder {
 public:
  void set_parameters(std::string p) { parameters_ = std::move(p); }
  const std::string& parameters() const { return parameters_; }

  void dists(const Value& input, const Dist& lhs, const Dist& rhs) {
    ++instances_;
    if (!witness_ && !(lhs == rhs)) witness_ = Witness{format(input), format(lhs), format(rhs)};
  }

  void rationals(const Value& input, const Rational& lhs, const Rational& rhs) {
    ++instances_;
    if (!witness_ && lhs != rhs) witness_ = Witness{format(input), mulprob::to_string(lhs), mulprob::to_string(rhs)};
  }

  void holds(const Value& input, bool ok, const std::string& detail) {
    ++instances_;
    if (!witness_ && !ok) witness_ = Witness{format(input), detail, ""};
  }

  void channels(const Channel& lhs, const Channel& rhs) {
    instances_ += lhs.domain().size();
    if (witness_) return;
    if (auto m = first_difference(lhs, rhs)) {
      witness_ = Witness{format(m->input), m->lhs ? format(*m->lhs) : "(outside domain)",
                         m->rhs ? format(*m->rhs) : "(outside domain)"};
    }
  }

  void fail(std::string input, std::string detail) {
    if (!witness_) witness_ = Witness{std::move(input), std::move(detail), ""};
  }

  std::size_t instances() const { return instances_; }
  const std::optional<Witness>& witness() const { return witness_; }

 private:
  std::string parameters_;
  std::size_t instances_ = 0;
  std::optional<Witness> witness_;
};

// Everything a law body needs: bounds, pools of states, samplers.
class Context {
 public:
  Context(const Config& config, std::string_view law)
      : config(config), rng(mix_seed(config.seed, law)) {}

  const Config& config;
  Rng rng;
  Recorder rec;

  std::size_t k() const { return config.max_k; }
  std::size_t l() const { return config.max_l; }
  std::size_t n() const { return config.max_n; }
  std::size_t s() const { return config.max_space; }

  Dist mn(const Dist& omega, std::size_t k) const {
    return config.multinomial ? config.multinomial(omega, k) : multinomial(omega, k);
  }

  Channel mn_ch(const FiniteSpace& states, std::size_t k) const {
    auto f = config.multinomial;
    return Channel(states, [f, k](const Value& w) {
      return f ? f(w.dist(), k) : multinomial(w.dist(), k);
    });
  }

  // Point masses, uniform, random: shared by all laws for one space.
  std::vector<Dist> states(const FiniteSpace& space) const {
    return state_pool(space, config.random_states, mix_seed(config.seed, "pool", space.size()));
  }

  // All K-tuples of corner states plus random K-tuples from the pool.
  FiniteSpace sample_tuples(const std::vector<Dist>& pool, std::size_t ncorners,
                            std::size_t k) {
    std::vector<Value> corner_values;
    for (std::size_t i = 0; i < ncorners && i < pool.size(); ++i) corner_values.emplace_back(pool[i]);
    auto exhaustive = power(FiniteSpace(corner_values), k);
    std::vector<Value> xs(exhaustive.begin(), exhaustive.end());
    for (std::size_t r = 0; r < config.random_states; ++r) {
      std::vector<Value> t;
      for (std::size_t i = 0; i < k; ++i) t.emplace_back(pool[below(rng, pool.size())]);
      xs.push_back(Value::tuple(std::move(t)));
    }
    return FiniteSpace(std::move(xs));
  }

  // M[K] of the corner states plus random size-K multisets from the pool.
  FiniteSpace sample_multisets(const std::vector<Dist>& pool, std::size_t ncorners,
                               std::size_t k) {
    std::vector<Value> corner_values;
    for (std::size_t i = 0; i < ncorners && i < pool.size(); ++i) corner_values.emplace_back(pool[i]);
    auto exhaustive = multiset_space(FiniteSpace(corner_values), k);
    std::vector<Value> xs(exhaustive.begin(), exhaustive.end());
    for (std::size_t r = 0; r < config.random_states; ++r) {
      std::vector<Multiset::Entry> entries;
      for (std::size_t i = 0; i < k; ++i) entries.emplace_back(Value(pool[below(rng, pool.size())]), 1);
      xs.emplace_back(Multiset(std::move(entries)));
    }
    return FiniteSpace(std::move(xs));
  }

  // a x b when small, otherwise corner pairs plus random pairs.
  FiniteSpace sample_pairs(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.size() * b.size() <= 400) return product(a, b);
    std::vector<Value> xs;
    for (std::size_t i = 0; i < std::min<std::size_t>(a.size(), 4); ++i) {
      for (std::size_t j = 0; j < std::min<std::size_t>(b.size(), 4); ++j) {
        xs.push_back(Value::pair(a.elements()[i], b.elements()[j]));
      }
    }
    for (std::size_t r = 0; r < 4 * config.random_states; ++r) {
      xs.push_back(Value::pair(a.elements()[below(rng, a.size())],
                               b.elements()[below(rng, b.size())]));
    }
    return FiniteSpace(std::move(xs));
  }

  Channel random_ch(const FiniteSpace& from, const FiniteSpace& to) {
    return random_channel(from, to, rng());
  }

  // Predicate with values drawn from {0, 1/4, 1/3, 1/2, 2/3, 1}.
  Predicate random_predicate(const FiniteSpace& space) {
    static const long num[] = {0, 1, 1, 1, 2, 1};
    static const unsigned long den[] = {1, 4, 3, 2, 3, 1};
    std::vector<Predicate::Entry> entries;
    for (const auto& x : space) {
      const auto i = below(rng, 6);
      entries.emplace_back(x, make_rational(num[i], den[i]));
    }
    return Predicate(std::move(entries));
  }
};

std::string bounds(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, v] : items) {
    os << (first ? "" : " ") << name << "<=" << v;
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------------- channels

void acc_arr_identity(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto d = multiset_space(x, k);
      c.rec.channels(then(arr_channel(d), acc_channel), Channel::identity(d));
    }
  }
}

void arr_acc_permutations(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto t = power(x, k);
      Channel perms(t, [k](const Value& xs) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        const Rational w = Rational(1) / Rational(factorial(k));
        DistBuilder out;
        do {
          std::vector<Value> ys;
          for (auto i : idx) ys.push_back(xs.items()[i]);
          out.add(Value::tuple(std::move(ys)), w);
        } while (std::next_permutation(idx.begin(), idx.end()));
        return out.build();
      });
      c.rec.channels(then(acc_channel(t), arr_channel), perms);
    }
  }
}

void arr_acc_big_tensor(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    const auto pool = c.states(x);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto t = c.sample_tuples(pool, s + 1, k);
      auto lhs = then(then(big_tensor_channel(t), acc_channel), arr_channel);
      auto rhs = then(then(acc_channel(t), arr_channel), big_tensor_channel);
      c.rec.channels(lhs, rhs);
    }
  }
}

void mn_arr_iid(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      c.rec.channels(then(c.mn_ch(sd, k), arr_channel), iid_channel(sd, k));
    }
  }
}

void mn_acc_iid(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      c.rec.channels(then(iid_channel(sd, k), acc_channel), c.mn_ch(sd, k));
    }
  }
}

void mn_draws_combine(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}, {"L", c.l()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    auto copy = fn_channel(sd, [](const Value& w) { return Value::pair(w, w); });
    for (std::size_t k = 0; k <= c.k(); ++k) {
      for (std::size_t l = 0; l <= c.l(); ++l) {
        auto both = ctensor(c.mn_ch(sd, k), c.mn_ch(sd, l));
        auto rhs = then(compose(both, copy), sum_channel);
        c.rec.channels(c.mn_ch(sd, k + l), rhs);
      }
    }
  }
}

void mn_flrn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"1<=K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    Channel id(sd, [](const Value& w) { return w.dist(); });
    for (std::size_t k = 1; k <= c.k(); ++k) {
      c.rec.channels(then(c.mn_ch(sd, k), flrn_channel), id);
    }
  }
}

void dd_mn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      c.rec.channels(then(c.mn_ch(sd, k + 1), dd_channel), c.mn_ch(sd, k));
    }
  }
}

void dd_flrn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"1<=K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (std::size_t k = 1; k <= c.k(); ++k) {
      const auto u = multiset_space(space_x(s), k + 1);
      c.rec.channels(then(dd_channel(u), flrn_channel), flrn_channel(u));
    }
  }
}

void hg_dd_iterate(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}, {"L", c.l()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (std::size_t k = 0; k <= c.k(); ++k) {
      for (std::size_t l = 0; l <= c.l(); ++l) {
        const auto u = multiset_space(space_x(s), k + l);
        Channel dds = Channel::identity(u);
        for (std::size_t i = 0; i < l; ++i) dds = then(dds, dd_channel);
        c.rec.channels(hg_channel(u, k), dds);
      }
    }
  }
}

void hg_flrn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"1<=K<=N", c.n()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (std::size_t n = 1; n <= c.n(); ++n) {
      const auto u = multiset_space(space_x(s), n);
      for (std::size_t k = 1; k <= n; ++k) {
        c.rec.channels(then(hg_channel(u, k), flrn_channel), flrn_channel(u));
      }
    }
  }
}

void hg_compose(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K+L+M", c.n()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (std::size_t n = 0; n <= c.n(); ++n) {
      const auto u = multiset_space(space_x(s), n);
      for (std::size_t kl = 0; kl <= n; ++kl) {
        for (std::size_t k = 0; k <= kl; ++k) {
          auto lhs = then(hg_channel(u, kl), [k](const FiniteSpace& d) { return hg_channel(d, k); });
          c.rec.channels(lhs, hg_channel(u, k));
        }
      }
    }
  }
}

void hg_mn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}, {"L", c.l()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sd = as_space(c.states(space_x(s)));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      for (std::size_t l = 0; l <= c.l(); ++l) {
        auto lhs = then(c.mn_ch(sd, k + l), [k](const FiniteSpace& d) { return hg_channel(d, k); });
        c.rec.channels(lhs, c.mn_ch(sd, k));
      }
    }
  }
}

void zip_iid(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto sx = as_space(c.states(space_x(s)));
    const auto sy = as_space(c.states(space_y(s)));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      auto lhs = then(ctensor(iid_channel(sx, k), iid_channel(sy, k)), zip_channel);
      auto rhs = then(fn_channel(product(sx, sy), dist_tensor_value),
                      [k](const FiniteSpace& d) { return iid_channel(d, k); });
      c.rec.channels(lhs, rhs);
    }
  }
}

void zip_big_tensor(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto px = c.states(space_x(s));
    const auto py = c.states(space_y(s));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto tx = c.sample_tuples(px, s + 1, k);
      const auto ty = c.sample_tuples(py, s + 1, k);
      const auto pairs = c.sample_pairs(tx, ty);
      auto lhs = then(restrict(ctensor(big_tensor_channel(tx), big_tensor_channel(ty)), pairs),
                      zip_channel);
      auto tensors = [](const FiniteSpace& d) {
        return fn_channel(d, [](const Value& t) {
          std::vector<Value> ys;
          for (const auto& p : t.items()) ys.push_back(dist_tensor_value(p));
          return Value::tuple(std::move(ys));
        });
      };
      auto rhs = then(then(then(Channel::identity(pairs), zip_channel), tensors),
                      big_tensor_channel);
      c.rec.channels(lhs, rhs);
    }
  }
}

// ------------------------------------------------------------------ mzip

void mzip_natural(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  const auto x = space_x(c.s());
  const auto y = space_y(c.s());
  const auto fs = all_functions(x, space_x(c.s()));
  const auto gs = all_functions(y, space_z(c.s()));
  for (std::size_t k = 0; k <= c.k(); ++k) {
    const auto d = product(multiset_space(x, k), multiset_space(y, k));
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        Fn fg = [f, g](const Value& p) { return Value::pair(f(p.first()), g(p.second())); };
        auto lhs = then(mzip_channel(d), [fg](const FiniteSpace& e) { return fn_channel(e, lift_fn(fg)); });
        auto mf = lift_fn(f);
        auto mg = lift_fn(g);
        auto rhs = then(fn_channel(d, [mf, mg](const Value& p) {
                          return Value::pair(mf(p.first()), mg(p.second()));
                        }),
                        mzip_channel);
        c.rec.channels(lhs, rhs);
      }
    }
  }
}

void mzip_unit(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  const auto y = space_y(c.s());
  for (std::size_t k = 0; k <= c.k(); ++k) {
    for (const auto& phi : enumerate_multisets(space_x(c.s()), k)) {
      for (const auto& yv : y) {
        const Multiset ky{{yv, k}};
        const Multiset one{{yv, 1}};
        c.rec.dists(Value::pair(Value(phi), Value(ky)), mzip(phi, ky),
                    Dist::point(Value(tensor(phi, one))));
      }
    }
  }
}

void mzip_assoc(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|,|Z|", c.s()}, {"K", c.k()}}));
  const auto x = space_x(c.s());
  const auto y = space_y(c.s());
  const auto z = space_z(c.s());
  Fn reassoc = [](const Value& p) {
    return Value::pair(p.first().first(), Value::pair(p.first().second(), p.second()));
  };
  for (std::size_t k = 0; k <= c.k(); ++k) {
    for (const auto& phi : enumerate_multisets(x, k)) {
      for (const auto& psi : enumerate_multisets(y, k)) {
        for (const auto& chi : enumerate_multisets(z, k)) {
          DistBuilder lhs;
          for (const auto z = mzip(phi, psi); const auto& [u, w] : z.entries()) {
            for (const auto z2 = mzip(u.multiset(), chi); const auto& [v, w2] : z2.entries()) {
              lhs.add(Value(map_elements(reassoc, v.multiset())), w * w2);
            }
          }
          DistBuilder rhs;
          for (const auto z = mzip(psi, chi); const auto& [u, w] : z.entries()) {
            for (const auto z2 = mzip(phi, u.multiset()); const auto& [v, w2] : z2.entries()) rhs.add(v, w * w2);
          }
          c.rec.dists(Value::tuple({Value(phi), Value(psi), Value(chi)}), lhs.build(),
                      rhs.build());
        }
      }
    }
  }
}

void mzip_projections(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  Fn p1 = [](const Value& p) { return p.first(); };
  Fn p2 = [](const Value& p) { return p.second(); };
  for (std::size_t k = 0; k <= c.k(); ++k) {
    for (const auto& phi : enumerate_multisets(space_x(c.s()), k)) {
      for (const auto& psi : enumerate_multisets(space_y(c.s()), k)) {
        const auto z = mzip(phi, psi);
        const auto input = Value::pair(Value(phi), Value(psi));
        c.rec.dists(input, map_dist(lift_fn(p1), z), Dist::point(Value(phi)));
        c.rec.dists(input, map_dist(lift_fn(p2), z), Dist::point(Value(psi)));
      }
    }
  }
}

void mzip_arr(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  for (std::size_t k = 0; k <= c.k(); ++k) {
    const auto mx = multiset_space(space_x(c.s()), k);
    const auto my = multiset_space(space_y(c.s()), k);
    auto lhs = then(mzip_channel(product(mx, my)), arr_channel);
    auto rhs = then(ctensor(arr_channel(mx), arr_channel(my)), zip_channel);
    c.rec.channels(lhs, rhs);
  }
}

void mzip_dd(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  for (std::size_t k = 0; k <= c.k(); ++k) {
    const auto mx = multiset_space(space_x(c.s()), k + 1);
    const auto my = multiset_space(space_y(c.s()), k + 1);
    auto lhs = then(mzip_channel(product(mx, my)), dd_channel);
    auto rhs = then(ctensor(dd_channel(mx), dd_channel(my)), mzip_channel);
    c.rec.channels(lhs, rhs);
  }
}

void mzip_flrn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"1<=K", c.k()}}));
  for (std::size_t k = 1; k <= c.k(); ++k) {
    const auto d = product(multiset_space(space_x(c.s()), k), multiset_space(space_y(c.s()), k));
    Channel rhs(d, [](const Value& p) {
      return flrn(tensor(p.first().multiset(), p.second().multiset()));
    });
    c.rec.channels(then(mzip_channel(d), flrn_channel), rhs);
  }
}

void mzip_mn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  const auto sx = as_space(c.states(space_x(c.s())));
  const auto sy = as_space(c.states(space_y(c.s())));
  const auto pairs = c.sample_pairs(sx, sy);
  for (std::size_t k = 0; k <= c.k(); ++k) {
    auto lhs = then(restrict(ctensor(c.mn_ch(sx, k), c.mn_ch(sy, k)), pairs), mzip_channel);
    auto rhs = then(fn_channel(pairs, dist_tensor_value),
                    [&c, k](const FiniteSpace& d) { return c.mn_ch(d, k); });
    c.rec.channels(lhs, rhs);
  }
}

void mzip_hg(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K<=N", c.n()}}));
  for (std::size_t n = 0; n <= c.n(); ++n) {
    const auto mx = multiset_space(space_x(c.s()), n);
    const auto my = multiset_space(space_y(c.s()), n);
    for (std::size_t k = 0; k <= n; ++k) {
      auto lhs = then(ctensor(hg_channel(mx, k), hg_channel(my, k)), mzip_channel);
      auto rhs = then(mzip_channel(product(mx, my)),
                      [k](const FiniteSpace& d) { return hg_channel(d, k); });
      c.rec.channels(lhs, rhs);
    }
  }
}

void mzip_diagonal(Context& c) {
  // Counterexamples need K >= 2 and two elements; search there whatever the bounds.
  const std::size_t top = std::max<std::size_t>(2, c.k());
  c.rec.set_parameters("|X|=2 2<=K<=" + std::to_string(top));
  Fn diag = [](const Value& x) { return Value::pair(x, x); };
  for (std::size_t k = 2; k <= top; ++k) {
    for (const auto& phi : enumerate_multisets(space_x(2), k)) {
      c.rec.dists(Value(phi), mzip(phi, phi), Dist::point(Value(map_elements(diag, phi))));
    }
  }
}

void mn_tensor(Context& c) {
  c.rec.set_parameters("X=Y={a,b} K=1 L=2 uniform");
  const auto x = FiniteSpace::atoms({"a", "b"});
  const auto omega = uniform(x);
  const auto lhs = map_dist(multiset_tensor_value, dtensor(c.mn(omega, 1), c.mn(omega, 2)));
  const auto rhs = c.mn(dtensor(omega, omega), 2);
  c.rec.dists(Value(omega), lhs, rhs);
}

// ------------------------------------------------------------------- pml

void pml_definitions(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.n()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 0; k <= c.n(); ++k) {
      for (const auto& v : c.sample_multisets(pool, s + 1, k)) {
        const auto& psi = v.multiset();
        const auto reference = pml_def2(psi);
        c.rec.dists(v, pml_def1(psi), reference);
        c.rec.dists(v, pml_def4(psi), reference);
        std::vector<Dist> states;
        for (const auto& [w, m] : psi.entries()) states.insert(states.begin(), m, w.dist());
        c.rec.holds(v, pml_def3_check(states), "acc triangle fails");
      }
    }
  }
}

void pml_acc(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto t = c.sample_tuples(pool, s + 1, k);
      c.rec.channels(then(acc_channel(t), pml_channel), then(big_tensor_channel(t), acc_channel));
    }
  }
}

void pml_arr(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto m = c.sample_multisets(pool, s + 1, k);
      c.rec.channels(then(pml_channel(m), arr_channel), then(arr_channel(m), big_tensor_channel));
    }
  }
}

void pml_flrn(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"1<=K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 1; k <= c.k(); ++k) {
      const auto m = c.sample_multisets(pool, s + 1, k);
      Channel rhs(m, [](const Value& psi) { return flatten(flrn(psi.multiset())); });
      c.rec.channels(then(pml_channel(m), flrn_channel), rhs);
    }
  }
}

void pml_dd(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto m = c.sample_multisets(pool, s + 1, k + 1);
      c.rec.channels(then(pml_channel(m), dd_channel), then(dd_channel(m), pml_channel));
    }
  }
}

void pml_hg(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K<=N", c.n()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t n = 0; n <= c.n(); ++n) {
      const auto m = c.sample_multisets(pool, s + 1, n);
      for (std::size_t k = 0; k <= n; ++k) {
        auto hg = [k](const FiniteSpace& d) { return hg_channel(d, k); };
        c.rec.channels(then(pml_channel(m), hg), then(hg_channel(m, k), pml_channel));
      }
    }
  }
}

void pml_sum(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}, {"L", c.l()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      for (std::size_t l = 0; l <= c.l(); ++l) {
        const auto a = c.sample_multisets(pool, s + 1, k);
        const auto b = c.sample_multisets(pool, s + 1, l);
        const auto pairs = c.sample_pairs(a, b);
        auto lhs = then(sum_channel(pairs), pml_channel);
        auto rhs = then(restrict(ctensor(pml_channel(a), pml_channel(b)), pairs), sum_channel);
        c.rec.channels(lhs, rhs);
      }
    }
  }
}

void pml_unit(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  Fn eta = [](const Value& x) { return Value(unit(x)); };
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto d = multiset_space(space_x(s), k);
      Channel lhs(d, [eta](const Value& phi) { return pml(map_elements(eta, phi.multiset())); });
      c.rec.channels(lhs, Channel::identity(d));
    }
  }
}

// Second-order states: distributions over a pool of states.
std::vector<Dist> nested_pool(Context& c, const std::vector<Dist>& pool, std::size_t count) {
  std::vector<Dist> out;
  out.push_back(Dist::point(Value(pool.front())));
  out.push_back(Dist({{Value(pool[0]), make_rational(1, 2)}, {Value(pool.back()), make_rational(1, 2)}}));
  while (out.size() < count) {
    DistBuilder b;
    const auto parts = 2 + below(c.rng, 2);
    unsigned long total = 0;
    std::vector<std::pair<Value, unsigned long>> picks;
    for (std::size_t i = 0; i < parts; ++i) {
      const unsigned long w = 1 + below(c.rng, 3);
      total += w;
      picks.emplace_back(Value(pool[below(c.rng, pool.size())]), w);
    }
    for (const auto& [v, w] : picks) b.add(v, make_rational(static_cast<long>(w), total));
    out.push_back(b.build());
  }
  return out;
}

void pml_multiplication(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto nested = nested_pool(c, c.states(space_x(s)), 6);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      const auto m = c.sample_multisets(nested, 2, k);
      Channel lhs(m, [](const Value& psi) {
        return pml(map_elements([](const Value& o) { return Value(flatten(o.dist())); },
                                psi.multiset()));
      });
      c.rec.channels(lhs, then(pml_channel(m), pml_channel));
    }
  }
}

void pml_m_unit(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}}));
  Fn single = [](const Value& x) { return Value(Multiset{{x, 1}}); };
  for (std::size_t s = 1; s <= c.s(); ++s) {
    for (const auto& omega : c.states(space_x(s))) {
      c.rec.dists(Value(omega), pml(Multiset{{Value(omega), 1}}), map_dist(single, omega));
    }
  }
}

void pml_m_multiplication(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"total size", 3}}));
  Fn mu = [](const Value& v) { return Value(flatten_multiset(v.multiset())); };
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto pool = c.states(space_x(s));
    std::vector<Value> inner;
    for (std::size_t k = 0; k <= 2; ++k) {
      for (const auto& v : c.sample_multisets(pool, 2, k)) inner.push_back(v);
    }
    std::shuffle(inner.begin(), inner.end(), c.rng);
    inner.resize(std::min<std::size_t>(inner.size(), 8));
    const FiniteSpace inner_space(inner);
    for (std::size_t outer = 0; outer <= 2; ++outer) {
      for (const auto& theta : enumerate_multisets(inner_space, outer)) {
        const auto flat = flatten_multiset(theta);
        if (flat.size() > 3) continue;
        const auto inner_pml = map_elements([](const Value& psi) { return Value(pml(psi.multiset())); }, theta);
        c.rec.dists(Value(theta), pml(flat), map_dist(mu, pml(inner_pml)));
      }
    }
  }
}

// ------------------------------------------------------------ liftings

void lift_identity(Context& c) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      c.rec.channels(lifted_map(Channel::identity(x), k), Channel::identity(multiset_space(x, k)));
    }
  }
}

void lift_composition(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|,|Z|", c.s()}, {"K", c.k()}}));
  const auto x = space_x(c.s());
  const auto y = space_y(c.s());
  const auto z = space_z(c.s());
  for (std::size_t trial = 0; trial < 4; ++trial) {
    const auto f = c.random_ch(x, y);
    const auto g = c.random_ch(y, z);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      c.rec.channels(lifted_map(compose(g, f), k), compose(lifted_map(g, k), lifted_map(f, k)));
    }
  }
}

void lift_mzip(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  const auto x = space_x(c.s());
  const auto y = space_y(c.s());
  for (std::size_t trial = 0; trial < 4; ++trial) {
    const auto f = c.random_ch(x, space_z(c.s()));
    const auto g = c.random_ch(y, space_x(c.s()));
    const auto fg = ctensor(f, g);
    for (std::size_t k = 0; k <= c.k(); ++k) {
      auto lhs = then(ctensor(lifted_map(f, k), lifted_map(g, k)), mzip_channel);
      auto rhs = then(mzip_channel(product(multiset_space(x, k), multiset_space(y, k))),
                      [fg](const FiniteSpace& d) { return lifted_map(fg, d); });
      c.rec.channels(lhs, rhs);
    }
  }
}

void lift_sum(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}, {"L", c.l()}}));
  const auto x = space_x(c.s());
  for (std::size_t trial = 0; trial < 4; ++trial) {
    const auto f = c.random_ch(x, space_y(c.s()));
    for (std::size_t k = 0; k <= c.k(); ++k) {
      for (std::size_t l = 0; l <= c.l(); ++l) {
        const auto d = product(multiset_space(x, k), multiset_space(x, l));
        auto lhs = then(sum_channel(d), [f](const FiniteSpace& e) { return lifted_map(f, e); });
        auto rhs = then(ctensor(lifted_map(f, k), lifted_map(f, l)), sum_channel);
        c.rec.channels(lhs, rhs);
      }
    }
  }
}

void pml_mzip(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  const auto px = c.states(space_x(c.s()));
  const auto py = c.states(space_y(c.s()));
  Fn otimes = lift_fn(dist_tensor_value);
  for (std::size_t k = 0; k <= c.k(); ++k) {
    const auto a = c.sample_multisets(px, c.s() + 1, k);
    const auto b = c.sample_multisets(py, c.s() + 1, k);
    const auto pairs = c.sample_pairs(a, b);
    auto lhs = then(restrict(ctensor(pml_channel(a), pml_channel(b)), pairs), mzip_channel);
    auto rhs = then(then(mzip_channel(pairs),
                         [otimes](const FiniteSpace& d) { return fn_channel(d, otimes); }),
                    pml_channel);
    c.rec.channels(lhs, rhs);
  }
}

// Naturality in Kl(D) along random channels f: X ~> Y.
template <typename Body>
void over_random_channels(Context& c, Body body) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    for (std::size_t trial = 0; trial < 3; ++trial) {
      const auto f = c.random_ch(x, space_y(c.s()));
      for (std::size_t k = 0; k <= c.k(); ++k) body(x, f, k);
    }
  }
}

void arr_natural(Context& c) {
  over_random_channels(c, [&](const FiniteSpace& x, const Channel& f, std::size_t k) {
    auto lhs = then(lifted_map(f, k), arr_channel);
    auto rhs = then(arr_channel(multiset_space(x, k)),
                    [f](const FiniteSpace& d) { return power_map(f, d); });
    c.rec.channels(lhs, rhs);
  });
}

void acc_natural(Context& c) {
  over_random_channels(c, [&](const FiniteSpace& x, const Channel& f, std::size_t k) {
    const auto t = power(x, k);
    auto lhs = then(power_map(f, t), acc_channel);
    auto rhs = then(acc_channel(t), [f](const FiniteSpace& d) { return lifted_map(f, d); });
    c.rec.channels(lhs, rhs);
  });
}

void dd_natural(Context& c) {
  over_random_channels(c, [&](const FiniteSpace& x, const Channel& f, std::size_t k) {
    const auto u = multiset_space(x, k + 1);
    auto lhs = then(lifted_map(f, u), dd_channel);
    auto rhs = then(dd_channel(u), [f](const FiniteSpace& d) { return lifted_map(f, d); });
    c.rec.channels(lhs, rhs);
  });
}

void mn_natural(Context& c) {
  over_random_channels(c, [&](const FiniteSpace& x, const Channel& f, std::size_t k) {
    const auto sd = as_space(c.states(x));
    // Lifting of f to D(X) in Kl(D): omega |-> 1|f >> omega>.
    auto df = fn_channel(sd, [f](const Value& w) { return Value(push(f, w.dist())); });
    auto lhs = then(df, [&c, k](const FiniteSpace& d) { return c.mn_ch(d, k); });
    auto rhs = then(c.mn_ch(sd, k), [f](const FiniteSpace& d) { return lifted_map(f, d); });
    c.rec.channels(lhs, rhs);
  });
}

void hg_natural(Context& c) {
  over_random_channels(c, [&](const FiniteSpace& x, const Channel& f, std::size_t k) {
    for (std::size_t l = k; l <= c.n(); ++l) {
      const auto u = multiset_space(x, l);
      auto hg = [k](const FiniteSpace& d) { return hg_channel(d, k); };
      auto lhs = then(lifted_map(f, u), hg);
      auto rhs = then(hg_channel(u, k), [f](const FiniteSpace& d) { return lifted_map(f, d); });
      c.rec.channels(lhs, rhs);
    }
  });
}

void hg_function_natural(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"K<=N", c.n()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    for (const auto& f : all_functions(x, space_y(c.s()))) {
      const auto mf = lift_fn(f);
      for (std::size_t n = 0; n <= c.n(); ++n) {
        const auto u = multiset_space(x, n);
        for (std::size_t k = 0; k <= n; ++k) {
          auto hg = [k](const FiniteSpace& d) { return hg_channel(d, k); };
          auto lhs = then(hg_channel(u, k), [mf](const FiniteSpace& d) { return fn_channel(d, mf); });
          auto rhs = then(fn_channel(u, mf), hg);
          c.rec.channels(lhs, rhs);
        }
      }
    }
  }
}

void pml_tensor(Context& c) {
  c.rec.set_parameters("phi=2|3/4 a+1/4 b> psi=1|2/3 z0+1/3 z1>");
  const Dist omega{{atom("a"), make_rational(3, 4)}, {atom("b"), make_rational(1, 4)}};
  const Dist rho{{atom("z0"), make_rational(2, 3)}, {atom("z1"), make_rational(1, 3)}};
  const Multiset phi{{Value(omega), 2}};
  const Multiset psi{{Value(rho), 1}};
  const auto lhs = pml(map_elements(dist_tensor_value, tensor(phi, psi)));
  const auto rhs = map_dist(multiset_tensor_value, dtensor(pml(phi), pml(psi)));
  c.rec.dists(Value::pair(Value(phi), Value(psi)), lhs, rhs);
}

// ------------------------------------------------------------- sampling

void sampling(Context& c) {
  c.rec.set_parameters(bounds({{"|X|,|Y|", c.s()}, {"1<=K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    const auto sd = as_space(c.states(x));
    for (std::size_t trial = 0; trial < 3; ++trial) {
      const auto ch = c.random_ch(x, space_y(c.s()));
      Channel rhs(sd, [ch](const Value& w) { return push(ch, w.dist()); });
      for (std::size_t k = 1; k <= c.k(); ++k) {
        auto lhs = then(then(c.mn_ch(sd, k), [ch](const FiniteSpace& d) { return lifted_map(ch, d); }),
                        flrn_channel);
        c.rec.channels(lhs, rhs);
      }
    }
  }
}

template <typename Body>
void over_updates(Context& c, Body body) {
  c.rec.set_parameters(bounds({{"|X|", c.s()}, {"K", c.k()}}));
  for (std::size_t s = 1; s <= c.s(); ++s) {
    const auto x = space_x(s);
    const auto pool = c.states(x);
    for (std::size_t trial = 0; trial < 4; ++trial) {
      const auto p = c.random_predicate(x);
      for (std::size_t k = 0; k <= c.k(); ++k) body(x, pool, p, k);
    }
  }
}

void update_mn_validity(Context& c) {
  over_updates(c, [&](const FiniteSpace&, const std::vector<Dist>& pool, const Predicate& p,
                      std::size_t k) {
    const auto pk = pred_extend(p, k);
    for (const auto& omega : pool) {
      c.rec.rationals(Value(omega), validity(c.mn(omega, k), pk), pow(validity(omega, p), k));
    }
  });
}

void update_mn(Context& c) {
  over_updates(c, [&](const FiniteSpace&, const std::vector<Dist>& pool, const Predicate& p,
                      std::size_t k) {
    const auto pk = pred_extend(p, k);
    for (const auto& omega : pool) {
      if (sgn(validity(omega, p)) == 0) continue;
      c.rec.dists(Value(omega), update(c.mn(omega, k), pk), c.mn(update(omega, p), k));
    }
  });
}

void update_pml_validity(Context& c) {
  over_updates(c, [&](const FiniteSpace&, const std::vector<Dist>& pool, const Predicate& p,
                      std::size_t k) {
    const auto pk = pred_extend(p, k);
    for (const auto& v : c.sample_multisets(pool, 2, k)) {
      Rational expected = 1;
      for (const auto& [w, n] : v.multiset().entries()) expected *= pow(validity(w.dist(), p), n);
      c.rec.rationals(v, validity(pml(v.multiset()), pk), expected);
    }
  });
}

void update_pml(Context& c) {
  over_updates(c, [&](const FiniteSpace&, const std::vector<Dist>& pool, const Predicate& p,
                      std::size_t k) {
    const auto pk = pred_extend(p, k);
    for (const auto& v : c.sample_multisets(pool, 2, k)) {
      std::vector<Multiset::Entry> updated;
      bool positive = true;
      for (const auto& [w, n] : v.multiset().entries()) {
        if (sgn(validity(w.dist(), p)) == 0) {
          positive = false;
          break;
        }
        updated.emplace_back(Value(update(w.dist(), p)), n);
      }
      if (!positive) continue;
      c.rec.dists(v, update(pml(v.multiset()), pk), pml(Multiset(std::move(updated))));
    }
  });
}

// -------------------------------------------------------------- registry

struct Law {
  LawInfo info;
  void (*run)(Context&);
};

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {{"acc-arr", "acc . arr = id on M[K](X)"}, acc_arr_identity},
      {{"arr-acc", "arr . acc = uniform mixture of the K! permutations on X^K"},
       arr_acc_permutations},
      {{"arr-acc-tensor", "arr . acc commutes with the big tensor on D(X)^K"}, arr_acc_big_tensor},
      {{"mn-arr", "arr . mn[K] = iid[K]"}, mn_arr_iid},
      {{"mn-acc", "acc . iid[K] = mn[K]"}, mn_acc_iid},
      {{"mn-sum", "mn[K+L] = (+) . (mn[K] (x) mn[L]) . copy"}, mn_draws_combine},
      {{"mn-flrn", "Flrn . mn[K] = id for K >= 1"}, mn_flrn},
      {{"dd-mn", "DD . mn[K+1] = mn[K]"}, dd_mn},
      {{"dd-flrn", "Flrn . DD = Flrn on M[K+1](X), K >= 1"}, dd_flrn},
      {{"hg-dd", "hg[K] = DD^L on M[K+L](X)"}, hg_dd_iterate},
      {{"hg-function-natural", "M[K](f) . hg[K] = hg[K] . M[N](f) for functions f"},
       hg_function_natural},
      {{"hg-flrn", "Flrn . hg[K] = Flrn on M[N](X), 1 <= K <= N"}, hg_flrn},
      {{"hg-hg", "hg[K] . hg[K+L] = hg[K]"}, hg_compose},
      {{"hg-mn", "hg[K] . mn[K+L] = mn[K]"}, hg_mn},
      {{"zip-iid", "zip . (iid[K] (x) iid[K]) = iid[K] . (x)"}, zip_iid},
      {{"zip-tensor", "zip . (big tensor (x) big tensor) = big tensor . (x)^K . zip"},
       zip_big_tensor},
      {{"mzip-natural", "mzip . (M[K](f) x M[K](g)) = M[K](f x g) . mzip"}, mzip_natural},
      {{"mzip-unit", "mzip(phi, K|y>) = 1|phi (x) 1|y>>"}, mzip_unit},
      {{"mzip-assoc", "mzip is associative up to reassociation of pairs"}, mzip_assoc},
      {{"mzip-projections", "M[K](pi_i) . mzip = pi_i"}, mzip_projections},
      {{"mzip-arr", "arr . mzip = zip . (arr (x) arr)"}, mzip_arr},
      {{"mzip-dd", "DD . mzip = mzip . (DD (x) DD)"}, mzip_dd},
      {{"mzip-flrn", "Flrn . mzip = Flrn . (x)"}, mzip_flrn},
      {{"mzip-mn", "mzip . (mn[K] (x) mn[K]) = mn[K] . (x)"}, mzip_mn},
      {{"mzip-hg", "mzip . (hg[K] (x) hg[K]) = hg[K] . mzip"}, mzip_hg},
      {{"mzip-diagonal", "mzip . diag = M[K](diag) (fails)", true}, mzip_diagonal},
      {{"mn-tensor", "(x) . (mn[K] (x) mn[L]) = mn[K*L] . (x) (fails)", true}, mn_tensor},
      {{"pml-definitions", "the four definitions of pml agree"}, pml_definitions},
      {{"pml-acc", "pml . acc = acc . big tensor"}, pml_acc},
      {{"pml-arr", "arr . pml = big tensor . arr"}, pml_arr},
      {{"pml-flrn", "Flrn . pml = flatten . Flrn, K >= 1"}, pml_flrn},
      {{"pml-dd", "DD . pml = pml . DD"}, pml_dd},
      {{"pml-hg", "hg[K] . pml = pml . hg[K]"}, pml_hg},
      {{"pml-sum", "pml . (+) = (+) . (pml (x) pml)"}, pml_sum},
      {{"pml-unit", "pml . M[K](eta) = eta"}, pml_unit},
      {{"pml-flatten", "pml . M[K](flatten) = flatten . D(pml) . pml"}, pml_multiplication},
      {{"pml-m-unit", "pml(1|omega>) = D(eta)(omega)"}, pml_m_unit},
      {{"pml-m-flatten", "pml . flatten = D(flatten) . pml . M(pml)"}, pml_m_multiplication},
      {{"pml-mzip", "mzip . (pml (x) pml) = pml . M[K]((x)) . mzip"}, pml_mzip},
      {{"pml-tensor", "pml . M((x)) . (x) = D((x)) . (pml (x) pml) (fails)", true}, pml_tensor},
      {{"lift-identity", "M[K](id) = id"}, lift_identity},
      {{"lift-compose", "M[K](g . f) = M[K](g) . M[K](f)"}, lift_composition},
      {{"lift-mzip", "mzip . (M[K](f) (x) M[K](g)) = M[K](f (x) g) . mzip"}, lift_mzip},
      {{"lift-sum", "M[K+L](f) . (+) = (+) . (M[K](f) (x) M[L](f))"}, lift_sum},
      {{"arr-natural", "arr . M[K](f) = f^K . arr"}, arr_natural},
      {{"acc-natural", "acc . f^K = M[K](f) . acc"}, acc_natural},
      {{"dd-natural", "DD . M[K+1](f) = M[K](f) . DD"}, dd_natural},
      {{"mn-natural", "mn[K] . D(f) = M[K](f) . mn[K]"}, mn_natural},
      {{"hg-natural", "hg[K] . M[L](f) = M[K](f) . hg[K]"}, hg_natural},
      {{"sampling", "Flrn . M[K](c) . mn[K] = c >> -, K >= 1"}, sampling},
      {{"update-mn-validity", "mn[K](omega) |= p-bar = (omega |= p)^K"}, update_mn_validity},
      {{"update-mn", "mn[K](omega)|p-bar = mn[K](omega|p)"}, update_mn},
      {{"update-pml-validity", "pml(Psi) |= p-bar = prod_i (omega_i |= p)^n_i"},
       update_pml_validity},
      {{"update-pml", "pml(Psi)|p-bar = pml(sum_i n_i|omega_i|p>)"}, update_pml},
  };
  return laws;
}

LawReport execute(const Law& law, const Config& config) {
  Context ctx(config, law.info.name);
  LawReport report;
  report.name = law.info.name;
  report.description = law.info.description;
  report.negative = law.info.negative;
  try {
    law.run(ctx);
  } catch (const std::exception& e) {
    ctx.rec.fail("(exception)", e.what());
    report.parameters = ctx.rec.parameters();
    report.instances = ctx.rec.instances();
    report.witness = ctx.rec.witness();
    report.verdict = Verdict::fail;
    return report;
  }
  report.parameters = ctx.rec.parameters();
  report.instances = ctx.rec.instances();
  report.witness = ctx.rec.witness();
  const bool held = !report.witness.has_value();
  if (law.info.negative) {
    report.verdict = held ? Verdict::unexpected_pass : Verdict::expected_fail;
  } else {
    report.verdict = held ? Verdict::pass : Verdict::fail;
  }
  return report;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::expected_fail:
      return "XFAIL";
    case Verdict::unexpected_pass:
      return "XPASS";
  }
  return "?";
}

FiniteSpace space_x(std::size_t n) { return named_space("", false, n); }
FiniteSpace space_y(std::size_t n) { return named_space("z", true, n); }
FiniteSpace space_z(std::size_t n) { return named_space("w", true, n); }

std::vector<Dist> state_pool(const FiniteSpace& space, std::size_t count, std::uint64_t seed) {
  std::vector<Dist> out;
  for (const auto& x : space) out.push_back(Dist::point(x));
  out.push_back(uniform(space));
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_dist(space, rng));
  return out;
}

Channel random_channel(const FiniteSpace& domain, const FiniteSpace& codomain,
                       std::uint64_t seed) {
  Rng rng(seed);
  auto table = std::make_shared<std::map<Value, Dist>>();
  for (const auto& x : domain) table->emplace(x, random_dist(codomain, rng));
  return Channel(domain, [table](const Value& x) { return table->at(x); });
}

const std::vector<LawInfo>& catalogue() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& law : registry()) out.push_back(law.info);
    return out;
  }();
  return infos;
}

std::vector<LawReport> run_laws(const Config& config) {
  std::vector<LawReport> out;
  for (const auto& law : registry()) out.push_back(execute(law, config));
  return out;
}

LawReport run_law(std::string_view name, const Config& config) {
  for (const auto& law : registry()) {
    if (law.info.name == name) return execute(law, config);
  }
  throw DomainError("unknown law '" + std::string(name) + "'");
}

std::string format_report(const LawReport& report) {
  std::ostringstream os;
  os << to_string(report.verdict) << "  " << report.name << "  [" << report.parameters
     << "]  instances=" << report.instances << "  " << report.description << "\n";
  if (report.witness && (report.negative || !report.as_expected())) {
    os << "    input: " << report.witness->input << "\n";
    os << "    lhs:   " << report.witness->lhs << "\n";
    if (!report.witness->rhs.empty()) os << "    rhs:   " << report.witness->rhs << "\n";
  }
  return os.str();
}

}  // namespace mulprob::laws
