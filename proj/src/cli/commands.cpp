#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <spdlog/spdlog.h>

#include "snreorder/matrixio.hpp"
#include "snreorder/ordering.hpp"
#include "snreorder/profile.hpp"

namespace snr::cli {

namespace fs = std::filesystem;

namespace {

// CSV file whose first line is a timestamp; everything after it is a
// deterministic function of the run configuration (timing columns aside).
class CsvFile {
 public:
  CsvFile(const fs::path& path, std::string_view command,
          std::string_view header)
      : out_(path) {
    if (!out_) throw Error("cannot write " + path.string());
    out_ << fmt::format("# snreorder {} {:%Y-%m-%dT%H:%M:%SZ}\n", command,
                        fmt::gmtime(std::chrono::system_clock::to_time_t(
                            std::chrono::system_clock::now())))
         << header << '\n';
    spdlog::debug("writing {}", path.string());
  }

  template <class... Args>
  void row(fmt::format_string<Args...> f, Args&&... args) {
    out_ << fmt::format(f, std::forward<Args>(args)...) << '\n';
  }

 private:
  std::ofstream out_;
};

void ensure_dir(const fs::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
}

Permutation fill_ordering(const RunConfig& c, const SymmetricPattern& a) {
  if (c.mdo && !c.perm.empty()) {
    throw Error("--perm and --mdo are mutually exclusive");
  }
  if (c.mdo) return minimum_degree(a);
  if (c.perm.empty()) return Permutation::identity(a.n);
  Permutation p = read_permutation(c.perm);
  if (p.size() != a.n) {
    throw Error(fmt::format("permutation has {} entries, matrix has n = {}",
                            p.size(), a.n));
  }
  return p;
}

const kernels::KernelSet& kernel_set(const RunConfig& c) {
  if (c.kernels.empty()) return kernels::active_kernels();
  const kernels::KernelSet* k = kernels::find_kernels(c.kernels);
  if (!k) throw Error("kernel variant '" + c.kernels + "' is not available");
  return *k;
}

std::vector<double> random_rhs(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> b(n);
  for (double& v : b) v = dist(rng);
  return b;
}

void write_merge_log(const RunConfig& c, const Analysis& an) {
  CsvFile csv(c.out / "merge_log.csv", "analyze",
              "step,child,parent,cost,cumulative_ratio");
  for (const MergeStep& s : an.merge.log) {
    csv.row("{},{},{},{},{}", s.step, s.child, s.parent, s.cost,
            s.cumulative_ratio);
  }
}

}  // namespace

std::vector<fs::path> input_matrices(const fs::path& input) {
  std::vector<fs::path> out;
  if (fs::is_directory(input)) {
    for (const auto& e : fs::directory_iterator(input)) {
      if (e.is_regular_file() && e.path().extension() == ".mtx") {
        out.push_back(e.path());
      }
    }
    std::sort(out.begin(), out.end());
    if (out.empty()) throw Error("no .mtx files in " + input.string());
  } else {
    out.push_back(input);
  }
  return out;
}

std::vector<std::string> default_compare_methods() {
  return {"ARBnone", "ARBwts", "FARnone", "FARwts", "PR-ndesc", "PR-work"};
}

int cmd_analyze(const RunConfig& c, std::ostream& report) {
  const SymmetricPattern a = read_matrix_market(c.input);
  const Analysis an = analyze(a, fill_ordering(c, a), c.merge_cap);
  ensure_dir(c.out);
  write_merge_log(c, an);

  report << fmt::format("n: {}\n", a.n);
  report << fmt::format("nnz(A): {}\n", an.nnz_a());
  report << fmt::format("nnz(L) fundamental: {}\n", an.merge.base_nnz);
  report << fmt::format("nnz(L): {}\n", an.nnz_l());
  report << fmt::format("supernodes fundamental: {}\n", an.fundamental_count);
  report << fmt::format("supernodes: {}\n", an.partition.count());
  report << fmt::format("merges: {}\n", an.merge.log.size());
  report << fmt::format("storage growth: {}\n", an.merge.storage_growth());
  report << fmt::format("flops fundamental: {}\n", an.merge.base_flops);
  report << fmt::format("flops: {}\n", an.flops());
  report << fmt::format("work growth: {}\n", an.merge.work_growth());
  return 0;
}

int cmd_reorder(const RunConfig& c, std::ostream& report) {
  const SymmetricPattern a = read_matrix_market(c.input);
  const Analysis an = analyze(a, fill_ordering(c, a), c.merge_cap);
  const Permutation within = reorder(an, c.spec);
  const BlockList blocks = block_list(an.partition, an.hadj, within);
  const BlockStats stats = block_stats(an.partition, blocks);

  ensure_dir(c.out);
  {
    std::ofstream perm(c.out / "permutation.txt");
    if (!perm) throw Error("cannot write permutation file");
    write_permutation(perm, an.ordering.then(within), 0);
  }
  CsvFile csv(c.out / "block_stats.csv", "reorder",
              "supernode,first,width,updaters,block_count,weighted_count,"
              "max_block,mean_block");
  for (Index t = 0; t < an.partition.count(); ++t) {
    const TargetStats& s = stats.per_target[t];
    csv.row("{},{},{},{},{},{},{},{}", t, an.partition.begin(t), s.width,
            s.updaters, s.block_count, s.weighted_count, s.max_block,
            s.mean_block);
  }

  report << fmt::format("method: {}\n", c.spec.label());
  report << fmt::format("supernodes: {}\n", an.partition.count());
  report << fmt::format("block count: {}\n", stats.total);
  report << fmt::format("weighted block count: {}\n", stats.weighted_total);
  if (an.partition.count() > 0) {
    const Index last = an.partition.count() - 1;
    report << fmt::format("block count last supernode: {}\n",
               stats.per_target[last].block_count);
  }
  return 0;
}

int cmd_factor(const RunConfig& c, std::ostream& report) {
  const SymmetricPattern a = read_matrix_market(c.input);
  const Analysis an = analyze(a, fill_ordering(c, a), c.merge_cap);
  const Permutation within = reorder(an, c.spec);
  const kernels::KernelSet& k = kernel_set(c);
  const Factorization f = factor(an, within, k);

  const std::vector<double> b = random_rhs(a.n, c.spec.seed);
  const std::vector<double> x = solve(f.storage, b);
  const double residual = relative_residual(f.matrix, x, b);

  ensure_dir(c.out);
  CsvFile csv(c.out / "kernel_trace.csv", "factor",
              "kind,source,target,m,n,k");
  for (const KernelCall& call : f.trace.calls) {
    csv.row("{},{},{},{},{},{}", to_string(call.kind), call.source,
            call.target, call.m, call.n, call.k);
  }

  report << fmt::format("method: {}\n", c.spec.label());
  report << fmt::format("kernels: {}\n", k.name);
  report << fmt::format("nnz(L): {}\n", f.storage.stored_entries());
  for (KernelKind kind : {KernelKind::cdiv_factor, KernelKind::cdiv_solve,
                          KernelKind::syrk, KernelKind::gemm}) {
    report << fmt::format("{} calls: {}\n", to_string(kind),
               f.trace.count(kind));
  }
  report << fmt::format("residual: {:.3e}\n", residual);
  return 0;
}

int cmd_compare(const RunConfig& c, std::ostream& report) {
  const std::vector<fs::path> matrices = input_matrices(c.input);
  std::vector<std::string> labels =
      c.methods.empty() ? default_compare_methods() : c.methods;
  std::vector<MethodSpec> specs;
  for (const std::string& l : labels) {
    auto spec = MethodSpec::from_label(l, c.spec.seed);
    if (!spec) throw Error("unknown method '" + l + "'");
    specs.push_back(*spec);
  }
  const kernels::KernelSet& k = kernel_set(c);
  const int reps = c.reps % 2 == 0 ? c.reps + 1 : c.reps;

  ensure_dir(c.out);
  CsvFile table(c.out / "comparison.csv", "compare",
                "matrix,method,n,nnz_l,objective,weighted_objective,"
                "reorder_peak_bytes,reorder_seconds,factor_seconds,"
                "factor_overhead_seconds,residual");

  // [problem][method]
  std::vector<std::vector<double>> fac, facover, space;
  for (const fs::path& path : matrices) {
    spdlog::debug("compare {}", path.filename().string());
    const SymmetricPattern a = read_matrix_market(path);
    const Analysis an = analyze(a, fill_ordering(c, a), c.merge_cap);
    const std::vector<double> b = random_rhs(a.n, c.spec.seed);
    auto& fac_row = fac.emplace_back();
    auto& over_row = facover.emplace_back();
    auto& space_row = space.emplace_back();
    for (const MethodSpec& spec : specs) {
      Permutation within;
      mem::Meter meter;
      {
        mem::MeterScope scope(meter);
        within = reorder(an, spec);
      }
      const double t_reorder =
          median_seconds(reps, [&] { within = reorder(an, spec); });
      const BlockStats stats =
          block_stats(an.partition, block_list(an.partition, an.hadj, within));
      Factorization f = factor(an, within, k);
      const double t_factor =
          median_seconds(reps, [&] { f = factor(an, within, k); });
      const std::vector<double> x = solve(f.storage, b);
      const double residual = relative_residual(f.matrix, x, b);

      table.row("{},{},{},{},{},{},{},{},{},{},{:.3e}",
                path.filename().string(), spec.label(), a.n, an.nnz_l(),
                stats.total, stats.weighted_total, meter.peak(), t_reorder,
                t_factor, t_factor + t_reorder, residual);
      fac_row.push_back(t_factor);
      over_row.push_back(t_factor + t_reorder);
      space_row.push_back(static_cast<double>(meter.peak()));
    }
  }

  CsvFile time_csv(c.out / "profile_time.csv", "compare",
                   "variant,method,tau,fraction");
  for (auto [variant, data] :
       {std::pair{"fac", &fac}, std::pair{"facover", &facover}}) {
    for (const ProfilePoint& p : performance_profile(labels, *data)) {
      time_csv.row("{},{},{},{}", variant, p.method, p.tau, p.fraction);
    }
  }
  // Methods that reorder nothing use no working storage, which would make
  // every other ratio unbounded; they are left out of the space profile.
  std::vector<std::string> space_labels;
  std::vector<std::size_t> keep;
  for (std::size_t m = 0; m < specs.size(); ++m) {
    if (specs[m].method == Method::none) continue;
    space_labels.push_back(labels[m]);
    keep.push_back(m);
  }
  CsvFile space_csv(c.out / "profile_space.csv", "compare",
                    "method,tau,log2_tau,fraction");
  if (!keep.empty()) {
    std::vector<std::vector<double>> kept;
    for (const auto& row : space) {
      auto& r = kept.emplace_back();
      for (std::size_t m : keep) r.push_back(row[m]);
    }
    for (const ProfilePoint& p : performance_profile(space_labels, kept)) {
      space_csv.row("{},{},{},{}", p.method, p.tau, std::log2(p.tau),
                    p.fraction);
    }
  }

  report << fmt::format("matrices: {}\n", matrices.size());
  report << fmt::format("methods: {}\n", fmt::join(labels, ","));
  report << fmt::format("repetitions: {}\n", reps);
  return 0;
}

}  // namespace snr::cli
