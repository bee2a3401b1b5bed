#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>

#include "mulprob/channels.hpp"
#include "mulprob/errors.hpp"
#include "mulprob/ket.hpp"
#include "mulprob/laws.hpp"
#include "mulprob/multiset.hpp"
#include "mulprob/pml.hpp"

namespace mulprob::cli {

namespace {

struct Options {
  std::optional<std::size_t> k_flag;
  std::size_t times = 1;
  std::size_t l = 3;
  std::size_t n = 4;
  std::size_t space = 2;
  std::size_t states = 20;
  std::uint64_t seed = 1;
  std::string pred;
  std::string channel;
  std::string law;
  bool list = false;
  std::string first;
  std::string second;
};

Channel channel_from_table(const ChannelTable& rows) {
  std::vector<Value> domain;
  for (const auto& row : rows) domain.push_back(row.first);
  auto table = std::make_shared<ChannelTable>(rows);
  return Channel(FiniteSpace(std::move(domain)), [table](const Value& x) {
    for (const auto& [key, d] : *table) {
      if (key == x) return d;
    }
    throw DomainError("channel undefined at " + format(x));
  });
}

std::string verdict(bool equal) { return equal ? "equal" : "DIFFERENT"; }

// Flrn >> (pml . M[K](c) . mn[K])(omega) against c >> omega, plus the update
// identities when a predicate is given. Returns true when every check holds.
bool sample_check(const Options& o, std::ostream& out) {
  const Dist omega = parse_dist(o.first);
  const FiniteSpace x = omega.support();
  const Channel c = o.channel.empty()
                        ? laws::random_channel(x, laws::space_y(2), o.seed)
                        : channel_from_table(parse_channel(o.channel));
  const std::size_t k = o.k_flag.value_or(3);
  if (k == 0) throw DomainError("sample-check needs K >= 1");

  const Dist draws = push(lifted_map(c, k), multinomial(omega, k));
  const Dist sampled =
      flatten(map_dist([](const Value& psi) { return Value(flrn(psi.multiset())); }, draws));
  const Dist direct = push(c, omega);
  bool all = sampled == direct;
  out << "sampled: " << format(sampled) << "\n";
  out << "direct:  " << format(direct) << "\n";
  out << "sampling: " << verdict(sampled == direct) << "\n";

  if (!o.pred.empty()) {
    const Predicate p = parse_predicate(o.pred);
    const Predicate pk = pred_extend(p, k);
    const Dist mn = multinomial(omega, k);
    const Rational lhs_v = validity(mn, pk);
    const Rational rhs_v = pow(validity(omega, p), k);
    out << "mn validity: " << to_string(lhs_v) << " vs " << to_string(rhs_v) << " "
        << verdict(lhs_v == rhs_v) << "\n";
    all = all && lhs_v == rhs_v;
    if (sgn(rhs_v) != 0) {
      const Dist lhs_u = update(mn, pk);
      const Dist rhs_u = multinomial(update(omega, p), k);
      out << "mn update: " << verdict(lhs_u == rhs_u) << "\n";
      all = all && lhs_u == rhs_u;
    }
    const Multiset psi = multiset_of_dists({{omega, k}});
    const Dist pm = pml(psi);
    const Rational lhs_pv = validity(pm, pk);
    out << "pml validity: " << to_string(lhs_pv) << " vs " << to_string(rhs_v) << " "
        << verdict(lhs_pv == rhs_v) << "\n";
    all = all && lhs_pv == rhs_v;
    if (sgn(rhs_v) != 0) {
      const Dist lhs_pu = update(pm, pk);
      const Dist rhs_pu = pml(multiset_of_dists({{update(omega, p), k}}));
      out << "pml update: " << verdict(lhs_pu == rhs_pu) << "\n";
      all = all && lhs_pu == rhs_pu;
    }
  }
  return all;
}

int run_laws_command(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& info : laws::catalogue()) {
      out << info.name << (info.negative ? "  (expected to fail)" : "") << "  " << info.description
          << "\n";
    }
    return ok;
  }
  laws::Config config;
  config.max_space = o.space;
  config.max_k = o.k_flag.value_or(3);
  config.max_l = o.l;
  config.max_n = o.n;
  config.random_states = o.states;
  config.seed = o.seed;
  std::vector<laws::LawReport> reports;
  if (o.law.empty()) {
    reports = laws::run_laws(config);
  } else {
    reports.push_back(laws::run_law(o.law, config));
  }
  std::size_t passed = 0, expected = 0, unexpected = 0;
  for (const auto& r : reports) {
    out << laws::format_report(r);
    if (r.verdict == laws::Verdict::pass) ++passed;
    if (r.verdict == laws::Verdict::expected_fail) ++expected;
    if (!r.as_expected()) ++unexpected;
  }
  out << reports.size() << " laws: " << passed << " passed, " << expected
      << " failed as expected, " << unexpected << " unexpected\n";
  return unexpected == 0 ? ok : domain_error;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiset and distribution calculus", "mulprob"};
  app.require_subcommand(1);
  Options o;

  auto add_k = [&](CLI::App* sub, const char* what) {
    sub->add_option_function<std::size_t>(
           "--k", [&](const std::size_t& v) { o.k_flag = v; }, what)
        ->check(CLI::NonNegativeNumber);
  };
  auto add_inputs = [&](CLI::App* sub, std::size_t count, const char* what) {
    sub->add_option("input", o.first, what)->required();
    if (count == 2) sub->add_option("other", o.second, what)->required();
  };

  std::function<int()> action;
  auto command = [&](const char* name, const char* help, std::size_t inputs, const char* what,
                     std::function<int()> body) {
    auto* sub = app.add_subcommand(name, help);
    add_inputs(sub, inputs, what);
    sub->callback([&action, body] { action = body; });
    return sub;
  };
  auto print = [&](const Dist& d) {
    out << format(d) << "\n";
    return ok;
  };

  auto* mn = command("mn", "multinomial draws mn[K](omega)", 1, "distribution", [&] {
    return print(multinomial(parse_dist(o.first), o.k_flag.value_or(0)));
  });
  add_k(mn, "draw size");
  mn->get_option("--k")->required();

  auto* hg = command("hg", "hypergeometric draws hg[K](urn)", 1, "multiset", [&] {
    return print(hypergeometric(parse_multiset(o.first), o.k_flag.value_or(0)));
  });
  add_k(hg, "draw size");
  hg->get_option("--k")->required();

  auto* dd = command("dd", "draw-and-delete, applied N times (default 1)", 1, "multiset", [&] {
    Dist d = Dist::point(Value(parse_multiset(o.first)));
    for (std::size_t i = 0; i < o.times; ++i) {
      DistBuilder next;
      for (const auto& [phi, w] : d.entries()) {
        for (const auto step = draw_delete(phi.multiset()); const auto& [psi, v] : step.entries()) {
          next.add(psi, w * v);
        }
      }
      d = next.build();
    }
    return print(d);
  });
  dd->add_option("--n", o.times, "number of draws")->check(CLI::NonNegativeNumber);

  command("arr", "uniform arrangements of a multiset", 1, "multiset",
          [&] { return print(arrange(parse_multiset(o.first))); });
  command("acc", "accumulate a tuple into a multiset", 1, "tuple", [&] {
    const Value t = parse_value(o.first);
    if (!t.is_tuple()) throw ParseError("expected a tuple", 0);
    out << format(acc(t)) << "\n";
    return ok;
  });
  command("flrn", "frequentist learning of a multiset", 1, "multiset",
          [&] { return print(flrn(parse_multiset(o.first))); });
  command("mzip", "multizip of two equal-size multisets", 2, "multisets", [&] {
    return print(mzip(parse_multiset(o.first), parse_multiset(o.second)));
  });
  command("pml", "parallel multinomial law of a multiset of distributions", 1,
          "multiset of distributions", [&] {
            const Multiset psi = parse_multiset(o.first);
            require_dists(psi);
            return print(pml(psi));
          });

  // With --k, act on mn[K](omega) with the extended predicate.
  auto predicate_command = [&](const char* name, const char* help, bool is_update) {
    auto* sub = command(name, help, 1, "distribution", [&, is_update] {
      Dist omega = parse_dist(o.first);
      Predicate p = parse_predicate(o.pred);
      if (o.k_flag) {
        omega = multinomial(omega, *o.k_flag);
        p = pred_extend(p, *o.k_flag);
      }
      if (is_update) return print(update(omega, p));
      out << to_string(validity(omega, p)) << "\n";
      return ok;
    });
    sub->add_option("--pred", o.pred, "predicate, e.g. (a:1/2, b:1)")->required();
    add_k(sub, "lift to mn[K] and the extended predicate");
  };
  predicate_command("update", "conditioning omega|p", true);
  predicate_command("validity", "validity omega |= p", false);

  auto* sc = command("sample-check", "check exact sampling semantics on one state", 1,
                     "distribution", [&] { return sample_check(o, out) ? ok : domain_error; });
  add_k(sc, "draw size (default 3)");
  sc->add_option("--channel", o.channel, "channel table, e.g. {a: <1/1 z0>, b: <1/2 z0, 1/2 z1>}");
  sc->add_option("--pred", o.pred, "predicate for the update identities");
  sc->add_option("--seed", o.seed, "seed for the random channel");

  auto* lw = app.add_subcommand("laws", "run the law catalogue");
  lw->callback([&] { action = [&] { return run_laws_command(o, out); }; });
  add_k(lw, "bound on K (default 3)");
  lw->add_option("--l", o.l, "bound on L")->check(CLI::NonNegativeNumber);
  lw->add_option("--n", o.n, "bound on N")->check(CLI::NonNegativeNumber);
  lw->add_option("--space", o.space, "bound on space sizes")->check(CLI::PositiveNumber);
  lw->add_option("--states", o.states, "random distributions per pool");
  lw->add_option("--seed", o.seed, "seed");
  lw->add_option("--law", o.law, "run a single law");
  lw->add_flag("--list", o.list, "list the catalogue");

  std::vector<const char*> argv{"mulprob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
}

}  // namespace mulprob::cli
