#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so it can be driven from tests.
//
// Exit status: 0 success, 1 a check reported failure, 2 usage, parse or
// parameter error.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fcwreath/fcwreath.hpp"

namespace fcwreath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct ParamFlags {
  std::string preset = "paper";
  std::vector<std::int64_t> d_affine, k_affine, d_list, k_list;

  GroupParams resolve() const {
    const bool custom_d = !d_affine.empty() || !d_list.empty();
    const bool custom_k = !k_affine.empty() || !k_list.empty();
    if (!custom_d && !custom_k) {
      if (preset != "paper") throw ParamError("unknown preset '" + preset + "'");
      return GroupParams::paper();
    }
    if (!d_affine.empty() && !d_list.empty()) throw ParamError("give either --d-affine or --d-list");
    if (!k_affine.empty() && !k_list.empty()) throw ParamError("give either --k-affine or --k-list");
    if (!custom_d) throw ParamError("--k-affine/--k-list needs --d-affine or --d-list");
    for (const auto* v : {&d_affine, &k_affine})
      if (!v->empty() && v->size() != 2) throw ParamError("affine rules take two integers: slope,offset");

    const SeqRule d = d_affine.empty() ? SeqRule::list(d_list) : SeqRule::affine(d_affine[0], d_affine[1]);
    SeqRule k = SeqRule::affine(1, 0);
    if (!k_affine.empty()) {
      k = SeqRule::affine(k_affine[0], k_affine[1]);
    } else if (!k_list.empty()) {
      k = SeqRule::list(k_list);
    } else if (d.is_affine()) {
      // Default k_n = 2 d_n.
      k = SeqRule::affine(checked_mul(2, d.slope()), checked_mul(2, d.offset()));
    } else {
      std::vector<std::int64_t> doubled;
      for (auto v : d.values()) doubled.push_back(checked_mul(2, v));
      k = SeqRule::list(std::move(doubled));
    }
    return GroupParams(d, k, "custom");
  }
};

inline void write_fc(std::ostream& out, const std::optional<FCDecomposition>& fc) {
  if (!fc) {
    out << "not-a-member\n";
    return;
  }
  out << "member z=" << fc->z << '\n';
  for (const auto& [n, coords] : fc->layers)
    out << "layer " << n << ": " << to_string(LayerElement(coords, 0)) << '\n';
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problem, orders, FC-center and checks for the groups G = <s, t>", "fcwreath"};
  app.require_subcommand(1);
  app.fallthrough();

  ParamFlags pf;
  unsigned threads = 1;
  app.add_option("--preset", pf.preset, "Parameter preset (paper: d_n = n+1, k_n = 2n+2)");
  app.add_option("--d-affine", pf.d_affine, "d_n = a*n + b, given as a,b")->delimiter(',')->expected(2);
  app.add_option("--k-affine", pf.k_affine, "k_n = c*n + e, given as c,e")->delimiter(',')->expected(2);
  app.add_option("--d-list", pf.d_list, "Explicit d_1,d_2,...")->delimiter(',')->expected(1, 1 << 20);
  app.add_option("--k-list", pf.k_list, "Explicit k_1,k_2,... (default 2 d_n)")->delimiter(',')->expected(1, 1 << 20);
  app.add_option("--threads", threads, "Worker threads")->envname("FCWREATH_THREADS")->check(CLI::Range(1u, 256u));

  std::string word_text;
  auto add_word_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", word_text, "Word expression, e.g. \"[s, s_1] t^-2\"")->required();
    return sub;
  };
  auto* eval_cmd = add_word_cmd("eval", "Reduced word, normal form, projections and order");
  auto* identity_cmd = add_word_cmd("identity", "Decide whether the word is trivial in G");
  auto* order_cmd = add_word_cmd("order", "Order of the element: 1, 2 or infinite");
  auto* project_cmd = add_word_cmd("project", "Projection to the layer group H_n");
  std::int64_t layer = 1;
  project_cmd->add_option("--layer", layer, "Layer index n")->required()->check(CLI::PositiveNumber);
  auto* quotient_cmd = add_word_cmd("quotient", "Image in C2 wr Z");
  auto* fc_cmd = add_word_cmd("fc", "FC-center membership and coordinates");

  auto* verify_cmd = app.add_subcommand("verify", "Run the structural checks");
  std::string check = "all";
  std::optional<std::int64_t> n_max, i_max;
  verify_cmd->add_option("--check", check)->check(CLI::IsMember({"basis", "center", "quotient", "all"}));
  verify_cmd->add_option("--n-max", n_max, "Largest layer (default 12 for basis, 20 for center)");
  verify_cmd->add_option("--i-max", i_max, "Largest index i (default 12 for basis, 10 for quotient)");

  auto* torsion_cmd = app.add_subcommand("torsion-search", "Exhaustive search for elements of order 2");
  std::int64_t max_len = 10;
  torsion_cmd->add_option("--max-len", max_len)->check(CLI::PositiveNumber);

  auto* walk_cmd = app.add_subcommand("walk", "Return probabilities of the simple random walk");
  std::vector<std::int64_t> steps;
  bool exact = false;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string target = "G";
  walk_cmd->add_option("--steps", steps, "Even step counts, comma separated")->required()->delimiter(',');
  walk_cmd->add_flag("--exact", exact, "Exact enumeration (steps <= 12)");
  walk_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  walk_cmd->add_option("--seed", seed);
  walk_cmd->add_option("--target", target)->check(CLI::IsMember({"G", "Q"}));

  std::vector<std::string> argv_store{"fcwreath"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const GroupParams gp = pf.resolve();
    if (app.got_subcommand(eval_cmd)) {
      const Word w = parse_word(word_text);
      out << "word: " << to_string(w) << '\n';
      out << "normal_form: " << to_string(normal_form(w)) << '\n';
      out << "pi0: " << pi0(w) << '\n';
      out << "quotient: " << to_string(quotient_image(w)) << '\n';
      out << "identity: " << (is_identity(w, gp) ? "true" : "false") << '\n';
      out << "order: " << to_string(order(w, gp)) << '\n';
    } else if (app.got_subcommand(identity_cmd)) {
      out << (is_identity(parse_word(word_text), gp) ? "true" : "false") << '\n';
    } else if (app.got_subcommand(order_cmd)) {
      out << to_string(order(parse_word(word_text), gp)) << '\n';
    } else if (app.got_subcommand(project_cmd)) {
      out << to_string(project_word(gp.layer(layer), parse_word(word_text))) << '\n';
    } else if (app.got_subcommand(quotient_cmd)) {
      out << to_string(quotient_image(parse_word(word_text))) << '\n';
    } else if (app.got_subcommand(fc_cmd)) {
      write_fc(out, fc_membership(parse_word(word_text), gp));
    } else if (app.got_subcommand(verify_cmd)) {
      std::vector<Report> reports;
      if (check == "basis" || check == "all") reports.push_back(check_basis_lemma(gp, n_max.value_or(12), i_max.value_or(12)));
      if (check == "center" || check == "all") reports.push_back(check_center(gp, n_max.value_or(20)));
      if (check == "quotient" || check == "all") reports.push_back(check_quotient_relations(gp, i_max.value_or(10)));
      bool ok = true;
      for (const auto& r : reports) {
        write_report(out, r);
        ok = ok && r.pass();
      }
      return ok ? kExitOk : kExitCheckFailed;
    } else if (app.got_subcommand(torsion_cmd)) {
      TorsionSearchOptions opt;
      opt.max_len = max_len;
      opt.threads = threads;
      const Report r = torsion_search(gp, opt);
      write_report(out, r);
      return r.pass() ? kExitOk : kExitCheckFailed;
    } else if (app.got_subcommand(walk_cmd)) {
      const WalkTarget tgt = target == "Q" ? WalkTarget::Q : WalkTarget::G;
      for (const auto st : steps) {
        WalkConfig cfg;
        cfg.steps = st;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.target = tgt;
        cfg.shards = threads;
        cfg.validate();
        if (exact) {
          out << st << '\t' << exact_return_prob(cfg, gp, threads).str() << '\n';
        } else {
          const Estimate e = mc_return_prob(cfg, gp);
          std::ostringstream row;
          row << st << '\t' << std::setprecision(10) << e.estimate << '\t' << e.std_error << '\n';
          out << row.str();
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fcwreath::cli
