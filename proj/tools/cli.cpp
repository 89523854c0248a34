#include "cli.hpp"

#include <bit>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lazyfinger/lazyfinger.hpp"

namespace lazyfinger::cli {

namespace {

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& out_path, const std::string& contents, std::ostream& out) {
  if (out_path.empty()) {
    out << contents;
  } else {
    io::save(out_path, contents);
  }
}

std::string seed_required(const std::string& what) {
  return what + " is randomized and requires --seed";
}

// Exactly one of --seq / --freq, turned into a frequency model.
struct StatsSource {
  std::string seq;
  std::string freq;

  void add_to(CLI::App* app) {
    app->add_option("--seq", seq, "sequence file");
    app->add_option("--freq", freq, "frequency file");
  }

  SearchStats load() const {
    if (seq.empty() == freq.empty()) throw UsageError("give exactly one of --seq or --freq");
    if (!seq.empty()) return frequencies_from_sequence(io::load_sequence(seq));
    return io::load_frequencies(freq);
  }
};

std::size_t default_successor_capacity(std::size_t n) {
  return std::max<std::size_t>(1, std::min<std::size_t>(n, std::bit_width(n - 1)));
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << '\t' << value << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal static search trees under lazy-finger search", "lftool"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a search sequence");
  std::string gen_kind, gen_matrix, gen_out;
  std::size_t gen_n = 0;
  std::optional<std::size_t> gen_m, gen_k;
  std::optional<std::uint64_t> gen_seed;
  double gen_concentration = kDefaultConcentration;
  gen->add_option("--kind", gen_kind, "sequential|bitrev|rounds|markov|uniform")->required();
  gen->add_option("--n", gen_n, "key universe size")->required();
  gen->add_option("--m", gen_m, "sequence length (default n)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--k", gen_k, "rounds: picks per round (default ceil(lg n))");
  gen->add_option("--concentration", gen_concentration, "markov: Dirichlet concentration");
  gen->add_option("--matrix", gen_matrix, "markov: transition matrix file");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "entropy report of a sequence");
  StatsSource stats_src;
  stats_src.add_to(stats);

  // freq
  auto* freq = app.add_subcommand("freq", "extract the frequency model of a sequence");
  std::string freq_seq, freq_out;
  freq->add_option("--seq", freq_seq, "sequence file")->required();
  freq->add_option("--out", freq_out, "output file (default stdout)");

  // opt
  auto* opt = app.add_subcommand("opt", "compute an optimal tree");
  std::string opt_method, opt_out;
  StatsSource opt_src;
  opt->add_option("--method", opt_method, "lazy|root")->required()->check(CLI::IsMember({"lazy", "root"}));
  opt_src.add_to(opt);
  opt->add_option("--out", opt_out, "tree output file");

  // build
  auto* build = app.add_subcommand("build", "build a tree by a construction rule");
  std::string build_kind, build_weights, build_out;
  std::optional<std::size_t> build_n;
  std::optional<std::uint64_t> build_seed;
  StatsSource build_src;
  build->add_option("--kind", build_kind, "balanced|mehlhorn|treap")
      ->required()
      ->check(CLI::IsMember({"balanced", "mehlhorn", "treap"}));
  build->add_option("--n", build_n, "balanced: key count");
  build->add_option("--weights", build_weights, "weights file");
  build_src.add_to(build);
  build->add_option("--seed", build_seed, "treap: seed");
  build->add_option("--out", build_out, "tree output file (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "cost of a tree on a sequence");
  std::string eval_tree, eval_method;
  StatsSource eval_src;
  eval->add_option("--tree", eval_tree, "tree file")->required();
  eval_src.add_to(eval);
  eval->add_option("--method", eval_method, "lazy|root")->required()->check(CLI::IsMember({"lazy", "root"}));

  // bound
  auto* bound = app.add_subcommand("bound", "weighted dynamic finger bound");
  std::string bound_weights, bound_tree, bound_seq;
  bound->add_option("--weights", bound_weights, "weights file");
  bound->add_option("--tree", bound_tree, "tree file (uses 4^-depth weights)");
  bound->add_option("--seq", bound_seq, "sequence file")->required();

  // weights
  auto* weights = app.add_subcommand("weights", "4^-depth weights of a tree");
  std::string weights_tree, weights_out;
  weights->add_option("--tree", weights_tree, "tree file")->required();
  weights->add_option("--out", weights_out, "output file (default stdout)");

  // multitree
  auto* multi = app.add_subcommand("multitree", "multiple-trees structure");
  std::size_t multi_d = 0;
  std::string multi_seq, multi_freq, multi_dump;
  multi->add_option("--d", multi_d, "successor capacity per key")->required();
  multi->add_option("--seq", multi_seq, "sequence to run (and build from unless --freq)");
  multi->add_option("--freq", multi_freq, "frequency file to build from");
  multi->add_option("--dump", multi_dump, "write the structure to this file");

  // compare
  auto* compare = app.add_subcommand("compare", "sweep every strategy over one sequence");
  std::string compare_seq;
  std::optional<std::uint64_t> compare_seed;
  std::optional<std::size_t> compare_d;
  compare->add_option("--seq", compare_seq, "sequence file")->required();
  compare->add_option("--seed", compare_seed, "seed for the treap strategy");
  compare->add_option("--d", compare_d, "multitree capacity (default ceil(lg n))");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lftool: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      GeneratorSpec spec;
      spec.kind = parse_sequence_kind(gen_kind);
      spec.n = gen_n;
      spec.m = gen_m.value_or(gen_n);
      spec.k = gen_k;
      spec.concentration = gen_concentration;
      const bool randomized = spec.kind == SequenceKind::kRounds ||
                              spec.kind == SequenceKind::kMarkov || spec.kind == SequenceKind::kUniform;
      if (randomized && !gen_seed) throw UsageError(seed_required(gen_kind));
      spec.seed = gen_seed.value_or(0);
      if (!gen_matrix.empty()) {
        if (spec.kind != SequenceKind::kMarkov) throw UsageError("--matrix applies to --kind markov only");
        spec.matrix = io::load_matrix(gen_matrix);
      }
      emit(gen_out, io::to_string(generate(spec)), out);
    } else if (stats->parsed()) {
      const SearchStats s = stats_src.load();
      if (s.length() == 0) throw FormatError("empty sequence: entropy needs m >= 1");
      kv(out, "n", std::to_string(s.universe()));
      kv(out, "m", std::to_string(s.length()));
      kv(out, "H", format_fixed6(entropy(s)));
      kv(out, "H_c", s.length() >= 2 ? format_fixed6(conditional_entropy(s)) : "n/a");
    } else if (freq->parsed()) {
      emit(freq_out, io::to_string(frequencies_from_sequence(io::load_sequence(freq_seq))), out);
    } else if (opt->parsed()) {
      const SearchStats s = opt_src.load();
      const OptResult r = opt_method == "lazy" ? optimal_lazy_dp(s) : optimal_root_dp(s);
      if (!opt_out.empty()) io::save(opt_out, io::to_string(r.tree));
      kv(out, "method", opt_method);
      kv(out, "n", std::to_string(s.universe()));
      kv(out, "cost", std::to_string(r.cost));
    } else if (build->parsed()) {
      std::optional<StaticTree> tree;
      if (build_kind == "balanced") {
        if (!build_n) throw UsageError("build --kind balanced needs --n");
        tree = build_balanced(*build_n);
      } else if (build_kind == "mehlhorn") {
        if (!build_weights.empty()) {
          tree = mehlhorn_build(io::load_weights(build_weights));
        } else {
          const SearchStats s = build_src.load();
          const auto counts = s.searches().subspan(1);
          tree = mehlhorn_build(std::vector<double>(counts.begin(), counts.end()));
        }
      } else {
        if (build_weights.empty()) throw UsageError("build --kind treap needs --weights");
        if (!build_seed) throw UsageError(seed_required("treap"));
        tree = treap_build(io::load_weights(build_weights), *build_seed);
      }
      emit(build_out, io::to_string(*tree), out);
    } else if (eval->parsed()) {
      const StaticTree t = io::load_tree(eval_tree);
      CostReport report;
      if (!eval_src.seq.empty() && eval_src.freq.empty()) {
        const SearchSequence x = io::load_sequence(eval_src.seq);
        report = eval_method == "lazy" ? run_lazy_finger(t, x) : run_root_finger(t, x);
      } else {
        const SearchStats s = eval_src.load();
        if (s.universe() != t.size()) throw InputError("universe mismatch between tree and frequencies");
        report.searches = s.length();
        if (eval_method == "lazy") {
          report.transition_cost = cost_from_frequencies(t, s);
          report.initial_descent = s.first() ? t.depth(*s.first()) : 0;
        } else {
          for (Key a = 1; a <= t.size(); ++a) report.transition_cost += s.searches(a) * t.depth(a);
        }
        report.total_with_root_start = report.transition_cost + report.initial_descent;
      }
      out << report.render();
    } else if (bound->parsed()) {
      if (bound_weights.empty() == bound_tree.empty()) throw UsageError("give exactly one of --weights or --tree");
      const WeightVector w =
          bound_weights.empty() ? weights_from_tree(io::load_tree(bound_tree)) : io::load_weights(bound_weights);
      const SearchSequence x = io::load_sequence(bound_seq);
      if (x.empty()) throw FormatError("empty sequence: df_bound needs m >= 1");
      kv(out, "df_bound", format_fixed6(df_bound(w, x)));
    } else if (weights->parsed()) {
      emit(weights_out, io::to_string(weights_from_tree(io::load_tree(weights_tree))), out);
    } else if (multi->parsed()) {
      if (multi_seq.empty() && multi_freq.empty()) throw UsageError("multitree needs --seq or --freq");
      std::optional<SearchSequence> x;
      if (!multi_seq.empty()) x = io::load_sequence(multi_seq);
      const SearchStats s = multi_freq.empty() ? frequencies_from_sequence(*x) : io::load_frequencies(multi_freq);
      const MultiTree mt = build_multitree(s, multi_d);
      if (!multi_dump.empty()) {
        std::ostringstream dump;
        io::write_multitree(dump, mt);
        io::save(multi_dump, dump.str());
      }
      kv(out, "n", std::to_string(mt.size()));
      kv(out, "d", std::to_string(mt.capacity()));
      kv(out, "node_count", std::to_string(mt.node_count()));
      if (x) {
        const Cost total = run_multitree(mt, *x);
        const SearchStats run_stats = frequencies_from_sequence(*x);
        kv(out, "comparisons", std::to_string(total));
        kv(out, "per_search", format_ratio6(total, x->size()));
        kv(out, "H_c", x->size() >= 2 ? format_fixed6(conditional_entropy(run_stats)) : "n/a");
      }
    } else if (compare->parsed()) {
      if (!compare_seed) throw UsageError(seed_required("compare (treap-lazy strategy)"));
      const SearchSequence x = io::load_sequence(compare_seq);
      if (x.empty()) throw FormatError("empty sequence: compare needs m >= 1");
      const SearchStats s = frequencies_from_sequence(x);
      const std::size_t n = s.universe();
      const std::size_t m = x.size();
      const std::string h = format_fixed6(entropy(s));
      const std::string hc = m >= 2 ? format_fixed6(conditional_entropy(s)) : "n/a";
      auto df = [&x](const StaticTree& t) { return format_fixed6(df_bound(weights_from_tree(t), x)); };

      out << "strategy\ttotal\tper_search\tnotes\n";
      auto row = [&](const std::string& name, Cost total, const std::string& notes) {
        out << name << '\t' << total << '\t' << format_ratio6(total, m) << '\t' << notes << '\n';
      };

      const StaticTree balanced = build_balanced(n);
      row("balanced-lazy", run_lazy_finger(balanced, x).transition_cost, "df_bound=" + df(balanced));

      const OptResult lazy = optimal_lazy_dp(s);
      row("opt-lazy", lazy.cost, "df_bound=" + df(lazy.tree) + ";H_c=" + hc);

      const OptResult root = optimal_root_dp(s);
      row("opt-root", root.cost, "H=" + h);

      const auto counts = s.searches().subspan(1);
      const StaticTree mehlhorn = mehlhorn_build(std::vector<double>(counts.begin(), counts.end()));
      row("mehlhorn-root", run_root_finger(mehlhorn, x).transition_cost, "H=" + h);

      const StaticTree treap = treap_build(weights_from_tree(lazy.tree), *compare_seed);
      row("treap-lazy", run_lazy_finger(treap, x).transition_cost,
          "weights=opt-lazy;seed=" + std::to_string(*compare_seed));

      const std::size_t d = compare_d.value_or(default_successor_capacity(n));
      const MultiTree mt = build_multitree(s, d);
      row("multitree", run_multitree(mt, x), "unit=comparisons;d=" + std::to_string(d) + ";H_c=" + hc);
    }
  } catch (const UsageError& e) {
    err << "lftool: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "lftool: malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const InputError& e) {
    err << "lftool: " << e.what() << '\n';
    return kInfeasible;
  }
  return kOk;
}

}  // namespace lazyfinger::cli
