#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "pierce/body.hpp"
#include "pierce/common.hpp"
#include "pierce/covering.hpp"
#include "pierce/gen.hpp"
#include "pierce/io.hpp"
#include "pierce/oracle.hpp"
#include "pierce/outliers.hpp"
#include "pierce/sampling.hpp"
#include "pierce/tester.hpp"

namespace pierce {

namespace {

using nlohmann::json;

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(json(p.coords));
  return arr;
}

ConvexBody resolve_body(const std::string& spec, int dim_hint) {
  if (!spec.empty() && spec.front() == '{') return parse_body_spec(spec, dim_hint);
  if (spec == "ball") {
    if (dim_hint < 1)
      throw std::invalid_argument(
          "shorthand body \"ball\" needs a dimension from --d or the input file");
    return ConvexBody::ball(dim_hint, 1.0);
  }
  if (spec == "box") {
    if (dim_hint < 1)
      throw std::invalid_argument(
          "shorthand body \"box\" needs a dimension from --d or the input file");
    return ConvexBody::box(std::vector<double>(static_cast<std::size_t>(dim_hint), 1.0));
  }
  throw std::invalid_argument("body spec must be JSON or a shorthand (ball, box)");
}

struct TestFlags {
  std::string body_spec;
  int k = 1;
  double epsilon = 0.1;
  double delta = 1.0 / 3;
  std::uint64_t seed = 0;
  std::string in_path;
  double slack = 0.01;
  long long sample_size = 0;  // cluster only; 0 = formula default
};

void add_test_flags(CLI::App* sub, TestFlags& f, bool with_sample_size) {
  sub->add_option("--body", f.body_spec, "body spec (JSON or shorthand)")->required();
  sub->add_option("--k", f.k, "number of clusters")->required()->check(CLI::PositiveNumber);
  sub->add_option("--epsilon", f.epsilon, "farness parameter")->required();
  sub->add_option("--delta", f.delta, "failure probability")->capture_default_str();
  sub->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  sub->add_option("--in", f.in_path, "input instance file")->required();
  sub->add_option("--slack", f.slack, "covering slack used to compute t")->capture_default_str();
  if (with_sample_size)
    sub->add_option("--sample-size", f.sample_size, "override the cluster sample size");
}

void check_instance(const Instance& inst, const ConvexBody& body) {
  if (inst.points.size() == 0) throw std::invalid_argument("instance has no points");
  if (body.dim() != inst.points.dim)
    throw std::invalid_argument("body dimension " + std::to_string(body.dim()) +
                                " does not match instance dimension " +
                                std::to_string(inst.points.dim));
}

struct TestOutcome {
  Verdict verdict;
  long long t = -1;
};

TestOutcome run_test(const TestFlags& f, const Instance& inst, const ConvexBody& body,
                     std::uint64_t seed) {
  VectorSource src(inst.points);
  TesterParams params;
  params.epsilon = f.epsilon;
  params.delta = f.delta;
  params.seed = seed;
  TestOutcome out;
  if (f.k == 1) {
    out.verdict = test_1_cluster(src, body, params);
  } else {
    out.t = covering_t(body, f.slack).t;
    out.verdict = test_k_cluster(src, body, f.k, params, out.t);
  }
  return out;
}

ClusterReport run_cluster(const TestFlags& f, const Instance& inst, const ConvexBody& body,
                          std::uint64_t seed) {
  VectorSource src(inst.points);
  TesterParams params;
  params.epsilon = f.epsilon;
  params.delta = f.delta;
  params.seed = seed;
  SampleSizeFn hook;
  if (f.sample_size > 0) {
    const long long m = f.sample_size;
    hook = [m](double, int, int, double) { return m; };
  }
  if (f.k == 1) return cluster_1_outliers(src, params, hook);
  const long long t = covering_t(body, f.slack).t;
  return cluster_k_outliers(src, f.k, params, t, hook);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"geometric clusterability testing toolkit"};
  app.require_subcommand(1);

  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  std::string gen_kind, gen_body, gen_out;
  int gen_k = 1, gen_d = 0;
  long long gen_n = 0;
  double gen_eps = 0, gen_spread = 0;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--kind", gen_kind, "instance family")
      ->required()
      ->check(CLI::IsMember({"clusterable", "far", "outliers"}));
  gen_cmd->add_option("--body", gen_body, "body spec (JSON or shorthand)")->required();
  gen_cmd->add_option("--k", gen_k, "number of clusters")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen_n, "point count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--d", gen_d, "dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--epsilon", gen_eps, "farness / outlier fraction");
  gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "output file (.json or CSV)")->required();
  gen_cmd->add_option("--spread", gen_spread, "outlier distance floor (default 3*diameter)");

  auto* test_cmd = app.add_subcommand("test", "run the clusterability tester");
  TestFlags test_flags;
  add_test_flags(test_cmd, test_flags, false);

  auto* cluster_cmd = app.add_subcommand("cluster", "outlier-robust clustering from a sample");
  TestFlags cluster_flags;
  add_test_flags(cluster_cmd, cluster_flags, true);

  auto* verify_cmd = app.add_subcommand("verify", "exact farness via the oracle");
  std::string ver_in, ver_body;
  int ver_k = 1;
  verify_cmd->add_option("--in", ver_in, "input instance file")->required();
  verify_cmd->add_option("--body", ver_body, "body spec (JSON or shorthand)")->required();
  verify_cmd->add_option("--k", ver_k, "number of clusters")->required()->check(CLI::PositiveNumber);

  auto* bench_cmd = app.add_subcommand("bench", "repeat test/cluster over derived seeds");
  TestFlags bench_flags;
  int bench_trials = 0;
  std::string bench_command = "test";
  bench_cmd->add_option("--trials", bench_trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--command", bench_command, "what to repeat")
      ->check(CLI::IsMember({"test", "cluster"}))
      ->capture_default_str();
  add_test_flags(bench_cmd, bench_flags, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) {
      ConvexBody body = resolve_body(gen_body, gen_d);
      if (body.dim() != gen_d) throw std::invalid_argument("body dimension does not match --d");
      Instance inst;
      if (gen_kind == "clusterable") {
        inst = gen_clusterable(body, gen_k, gen_n, gen_d, gen_seed);
      } else if (gen_kind == "far") {
        if (!(gen_eps > 0)) throw std::invalid_argument("gen --kind far needs --epsilon > 0");
        inst = gen_far(body, gen_k, gen_n, gen_d, gen_eps, gen_seed);
      } else {
        const double spread = gen_spread > 0 ? gen_spread : 3 * body.diameter();
        inst = gen_outliers(body, gen_k, gen_n, gen_d, gen_eps, spread, gen_seed);
      }
      save_instance(inst, gen_out);
      const json doc{{"schema", 1}, {"kind", gen_kind}, {"n", gen_n}, {"dim", gen_d},
                     {"out", gen_out}};
      out << doc.dump() << "\n";
      return 0;
    }

    if (test_cmd->parsed()) {
      const TestFlags& f = test_flags;
      const Instance inst = load_instance(f.in_path);
      const ConvexBody body = resolve_body(f.body_spec, inst.points.dim);
      check_instance(inst, body);
      const TestOutcome res = run_test(f, inst, body, f.seed);
      json doc;
      doc["schema"] = 1;
      doc["verdict"] = res.verdict.accept ? "accept" : "reject";
      doc["witness"] = points_json(res.verdict.witness);
      doc["iterations"] = res.verdict.iterations_used;
      doc["guarantee_void"] = res.verdict.guarantee_void;
      if (res.t >= 0) doc["t"] = res.t;
      out << doc.dump(2) << "\n";
      return res.verdict.accept ? 0 : 1;
    }

    if (cluster_cmd->parsed()) {
      const TestFlags& f = cluster_flags;
      const Instance inst = load_instance(f.in_path);
      const ConvexBody body = resolve_body(f.body_spec, inst.points.dim);
      if (body.kind() != BodyKind::kBall)
        throw std::invalid_argument("cluster supports ball bodies only");
      check_instance(inst, body);
      const ClusterReport rep = run_cluster(f, inst, body, f.seed);
      json doc;
      doc["schema"] = 1;
      doc["centers"] = points_json(rep.centers);
      doc["radii"] = rep.radii;
      doc["sample_size"] = rep.sample_size;
      doc["exact"] = rep.exact;
      doc["covered_fraction_estimate"] = rep.covered_fraction_estimate;
      doc["custom_sample_size"] = rep.custom_sample_size;
      out << doc.dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Instance inst = load_instance(ver_in);
      const ConvexBody body = resolve_body(ver_body, inst.points.dim);
      check_instance(inst, body);
      const FarnessResult fr = farness(body, inst.points, ver_k);
      json doc;
      doc["schema"] = 1;
      doc["farness"] = fr.removals;
      doc["exact"] = fr.exact;
      if (inst.truth) {
        if (std::get_if<TruthClusterable>(&*inst.truth)) {
          doc["claimed_farness"] = 0;
        } else if (const auto* far = std::get_if<TruthFar>(&*inst.truth)) {
          doc["claimed_farness"] = far->spike_count;
        } else {
          doc["planted_outliers"] = static_cast<long long>(
              std::get<TruthOutliers>(*inst.truth).outlier_indices.size());
        }
        if (doc.contains("claimed_farness"))
          doc["match"] = doc["claimed_farness"].get<long long>() == fr.removals;
      }
      out << doc.dump(2) << "\n";
      return 0;
    }

    if (bench_cmd->parsed()) {
      const TestFlags& f = bench_flags;
      const Instance inst = load_instance(f.in_path);
      const ConvexBody body = resolve_body(f.body_spec, inst.points.dim);
      check_instance(inst, body);
      if (bench_command == "cluster" && body.kind() != BodyKind::kBall)
        throw std::invalid_argument("cluster supports ball bodies only");

      long long accepts = 0;
      for (int trial = 0; trial < bench_trials; ++trial) {
        const std::uint64_t seed = f.seed + static_cast<std::uint64_t>(trial);
        bool accept;
        if (bench_command == "test") {
          accept = run_test(f, inst, body, seed).verdict.accept;
        } else {
          const ClusterReport rep = run_cluster(f, inst, body, seed);
          accept = rep.covered_fraction_estimate >= 1 - f.epsilon - 1e-12;
        }
        accepts += accept ? 1 : 0;
      }
      const long long rejects = bench_trials - accepts;
      const double p = static_cast<double>(accepts) / bench_trials;
      const double z = 1.959963984540054;  // 95% Wilson interval
      const double nn = bench_trials;
      const double denom = 1 + z * z / nn;
      const double centre = p + z * z / (2 * nn);
      const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn));
      const double lo = std::max(0.0, (centre - half) / denom);
      const double hi = std::min(1.0, (centre + half) / denom);
      char row[256];
      out << "command trials accept reject accept_rate ci_low ci_high\n";
      std::snprintf(row, sizeof row, "%s %d %lld %lld %.6f %.6f %.6f\n", bench_command.c_str(),
                    bench_trials, accepts, rejects, p, lo, hi);
      out << row;
      return 0;
    }

    err << "error: no subcommand given\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pierce
