// Command-line front end: gen, eval, search, scale, compress, sweep, report,
// synth.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dctapprox/codec.hpp"
#include "dctapprox/csv.hpp"
#include "dctapprox/dct_core.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/fast_kernel.hpp"
#include "dctapprox/image.hpp"
#include "dctapprox/jam.hpp"
#include "dctapprox/metrics.hpp"
#include "dctapprox/pareto.hpp"
#include "dctapprox/report.hpp"
#include "dctapprox/transform_io.hpp"

namespace {

using namespace dctapprox;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasible:
      return kExitInfeasible;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kSingular:
    case ErrorKind::kDivision:
      return 1;
    default:
      return kExitUsage;
  }
}

double default_rho() {
  if (const char* env = std::getenv("DCTAPPROX_RHO")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::kParse, std::string("DCTAPPROX_RHO is not a number: ") + env);
  }
  return kDefaultRho;
}

int default_workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Writes to the named file, or stdout for "" / "-".
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  write(out);
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path);
}

struct TransformSelector {
  std::string params;
  std::string file;
  bool dct = false;
  int size = 8;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--params", params, "8 comma-separated parameters, e.g. 0,0,0,1,1,0,0,1");
    auto* f = cmd->add_option("--transform", file, "transform JSON file");
    auto* d = cmd->add_flag("--dct", dct, "use the exact DCT");
    p->excludes(f)->excludes(d);
    f->excludes(d);
    cmd->add_option("--size", size, "block size for --params (8, 16, 32) or --dct")->check(CLI::IsMember({8, 16, 32}));
  }

  Eigen::MatrixXd matrix() const {
    if (dct) return exact_dct_matrix(size);
    if (!file.empty()) return load_transform(file).composed();
    if (params.empty()) throw Error(ErrorKind::kParse, "one of --params, --transform or --dct is required");
    const ParamVector a = parse_params(params);
    return size == 8 ? orthonormal_approx(a).composed() : build_scaled(a, size).transform.composed();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-complexity 8/16/32-point DCT approximations: construction, metrics, search and codec harness"};
  app.require_subcommand(1);

  std::optional<double> rho_flag;
  int workers = 0;
  auto add_rho = [&](CLI::App* cmd) {
    cmd->add_option("--rho", rho_flag, "AR(1) correlation (default 0.95 or $DCTAPPROX_RHO)");
  };
  auto add_workers = [&](CLI::App* cmd) { cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber); };

  // gen
  auto* gen = app.add_subcommand("gen", "emit the orthonormal 8-point transform for a parameter vector as JSON");
  std::string gen_params, gen_out;
  gen->add_option("--params", gen_params, "8 comma-separated parameters")->required();
  gen->add_option("--out", gen_out, "output JSON (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "metrics and complexity for one transform as a CSV row");
  TransformSelector eval_sel;
  eval_sel.add_to(eval);
  std::string eval_out;
  eval->add_option("--out", eval_out, "output CSV (default stdout)");
  add_rho(eval);

  // search
  auto* search = app.add_subcommand("search", "exhaustive search and Pareto front");
  std::string search_out;
  bool no_filter = false;
  search->add_option("--out", search_out, "front CSV (default stdout)");
  search->add_flag("--no-feasibility-filter", no_filter, "also evaluate non-orthogonal candidates");
  add_rho(search);
  add_workers(search);

  // scale
  auto* scale = app.add_subcommand("scale", "double an 8-point seed to 16 or 32 points");
  std::string scale_seed, scale_out;
  int scale_size = 16;
  scale->add_option("--seed", scale_seed, "8 comma-separated parameters")->required();
  scale->add_option("--size", scale_size, "target size")->check(CLI::IsMember({16, 32}));
  scale->add_option("--out", scale_out, "output JSON (default stdout)");

  // compress
  auto* compress = app.add_subcommand("compress", "blockwise transform, zig-zag retention, reconstruction");
  TransformSelector comp_sel;
  comp_sel.add_to(compress);
  std::string comp_in, comp_out, comp_metrics;
  double comp_r = 0.5;
  compress->add_option("--in", comp_in, "input PGM")->required();
  compress->add_option("--r", comp_r, "retained coefficient fraction in (0, 1]")->required();
  compress->add_option("--out", comp_out, "reconstructed PGM");
  compress->add_option("--metrics", comp_metrics, "metrics CSV (default stdout)");
  add_workers(compress);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "PSNR/SSIM/APE curves over a corpus");
  std::string sweep_corpus, sweep_list, sweep_out, sweep_grid, sweep_per_image;
  sweep->add_option("--corpus", sweep_corpus, "directory of PGM images")->required();
  sweep->add_option("--transforms", sweep_list, "JSON list of transforms")->required();
  sweep->add_option("--out", sweep_out, "curves CSV (default stdout)");
  sweep->add_option("--r-grid", sweep_grid, "comma-separated r values (default 0.25:0.02:0.99)");
  sweep->add_option("--per-image", sweep_per_image, "per-image CSV");
  add_workers(sweep);

  // report
  auto* report = app.add_subcommand("report", "render summary tables from a front CSV");
  std::string report_front, report_dir;
  report->add_option("--front", report_front, "front CSV from search")->required();
  report->add_option("--out-dir", report_dir, "output directory")->required();
  add_rho(report);

  // synth
  auto* synth = app.add_subcommand("synth", "write a synthetic AR(1) test image");
  int synth_w = 512, synth_h = 512;
  std::uint64_t synth_seed = 1;
  std::string synth_out;
  synth->add_option("--width", synth_w, "width")->check(CLI::PositiveNumber);
  synth->add_option("--height", synth_h, "height")->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_seed, "random seed");
  synth->add_option("--out", synth_out, "output PGM")->required();
  add_rho(synth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const double rho = rho_flag ? *rho_flag : default_rho();
    const int nworkers = workers > 0 ? workers : default_workers();

    if (*gen) {
      const OrthonormalTransform t = orthonormal_approx(parse_params(gen_params));
      emit(gen_out, [&](std::ostream& o) { o << transform_to_json(t).dump(2) << '\n'; });
    } else if (*eval) {
      const Eigen::MatrixXd c = eval_sel.matrix();
      const SignalModel model(rho, static_cast<int>(c.rows()));
      MetricsReport m = evaluate_matrix(c, model);
      std::string row;
      if (!eval_sel.params.empty()) {
        const ParamVector a = parse_params(eval_sel.params);
        ComplexityCount cc = complexity(a);
        for (int n = 8; n < eval_sel.size; n *= 2) cc = scaled_complexity(cc, n);
        m.additions = cc.additions;
        m.shifts = cc.shifts;
        row = metrics_csv_row(a, m) + "," + to_string(cc.rule);
      } else {
        // No parameter vector or complexity for arbitrary matrices.
        row = ",,,,,,,," + format_sig6(m.epsilon) + "," + format_sig6(m.mse) + "," + format_sig6(m.coding_gain_db) +
              "," + format_sig6(m.efficiency_pct) + ",,," + format_2dp(m.epsilon) + "," + format_2dp(m.mse) + "," +
              format_2dp(m.coding_gain_db) + "," + format_2dp(m.efficiency_pct) + ",";
      }
      emit(eval_out, [&](std::ostream& o) { o << metrics_csv_header() << ",rule\n" << row << '\n'; });
    } else if (*search) {
      SearchOptions opts;
      opts.rho = rho;
      opts.workers = nworkers;
      opts.feasibility_filter = !no_filter;
      const SearchResult result = run_search(opts);
      emit(search_out, [&](std::ostream& o) { write_front_csv(o, result.front); });

      const auto canonical = ranked_canonical(result.front);
      std::cerr << "candidates: " << result.total << "\nfeasible: " << result.feasible
                << "\nevaluated: " << result.evaluated << "\nskipped (undefined metrics): " << result.skipped
                << "\nfront members: " << result.front.size() << "\ncanonical: " << canonical.size() << '\n';
      for (const auto& e : result.front) {
        if (!e.canonical) std::cerr << "tie member (not canonical): " << e.a.to_string() << '\n';
      }
      const KnownComparison cmp = compare_with_known(result.front, SignalModel(rho, 8));
      for (const auto& a : cmp.missing) std::cerr << "known optimal vector missing from front: " << a.to_string() << '\n';
      for (const auto& a : cmp.surplus) std::cerr << "front vector beyond the known optimal set: " << a.to_string() << '\n';
      if (cmp.known_dominated) std::cerr << "warning: a known optimal vector is dominated\n";
    } else if (*scale) {
      const ScaledTransform s = build_scaled(parse_params(scale_seed), scale_size);
      emit(scale_out, [&](std::ostream& o) { o << transform_to_json(s.transform).dump(2) << '\n'; });
      std::cerr << "additions: " << s.complexity.additions << "\nshifts: " << s.complexity.shifts << '\n';
    } else if (*compress) {
      const Eigen::MatrixXd c = comp_sel.matrix();
      const GrayImage img = read_pgm(comp_in);
      const CompressionResult res = compress_image(img, c, RetentionPolicy(comp_r), nworkers);
      if (!comp_out.empty()) write_pgm(comp_out, res.reconstruction);
      emit(comp_metrics, [&](std::ostream& o) {
        o << "image,r,psnr,ssim,mse\n"
          << comp_in << ',' << format_2dp(comp_r) << ',' << format_sig6(res.scores.psnr_db) << ','
          << format_sig6(res.scores.ssim) << ',' << format_sig6(res.scores.mse) << '\n';
      });
    } else if (*sweep) {
      std::ifstream list_in(sweep_list);
      if (!list_in) throw Error(ErrorKind::kIo, "cannot read " + sweep_list);
      nlohmann::json list;
      try {
        list_in >> list;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::kParse, sweep_list + ": " + e.what());
      }
      const auto transforms = parse_sweep_transforms(list, std::filesystem::path(sweep_list).parent_path());
      std::vector<double> grid = default_r_grid();
      if (!sweep_grid.empty()) {
        grid.clear();
        std::istringstream in(sweep_grid);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          try {
            grid.push_back(std::stod(tok));
          } catch (const std::exception&) {
            throw Error(ErrorKind::kParse, "bad r value '" + tok + "'");
          }
        }
      }
      const auto result = run_sweep(load_corpus(sweep_corpus), transforms, grid, nworkers);
      emit(sweep_out, [&](std::ostream& o) { write_sweep_csv(o, result.rows); });
      if (!sweep_per_image.empty()) {
        emit(sweep_per_image, [&](std::ostream& o) { write_per_image_csv(o, result.per_image); });
      }
    } else if (*report) {
      report_tables(report_front, report_dir, rho);
    } else if (*synth) {
      write_pgm(synth_out, synthetic_ar1_image(synth_w, synth_h, rho, synth_seed));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
