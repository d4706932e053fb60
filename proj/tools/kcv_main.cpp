#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kcv/errors.hpp"
#include "kcv/verifier.hpp"

using namespace kcv;

namespace {

struct Args {
  std::string type;
  int rank = 0;
  int m = 0;
  std::string twist = "none";
  bool modified = false;
  std::string report;
  std::string cache;
  int jobs = 1;
  std::size_t max_order = kDefaultCap;
  bool timing = false;
};

void add_common(CLI::App* c, Args& a) {
  c->add_option("--type", a.type, "A, B, D, F4 or I2")->required()->check(CLI::IsMember({"A", "B", "D", "F4", "I2"}));
  c->add_option("--rank", a.rank, "rank")->required();
  c->add_option("--m", a.m, "I2 only: the dihedral parameter");
  c->add_option("--twist", a.twist, "automorphism")->check(CLI::IsMember({"none", "diagram", "w0"}));
  c->add_option("--report", a.report, "write the JSON report here");
  c->add_option("--cache", a.cache, "KL cache directory (default $KCV_CACHE_DIR)");
  c->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  c->add_option("--max-order", a.max_order, "refuse groups larger than this");
  c->add_flag("--timing", a.timing, "record wall time in the report");
}

int run(const Args& a, bool properties) {
  Series s = parse_series(a.type);
  int k = a.rank;
  if (s == Series::I2) {
    if (a.m <= 0) throw UnsupportedType("I2 needs --m");
    if (a.rank != 2) throw UnsupportedType("I2 has rank 2");
    k = a.m;
  }
  VerifyOptions opt;
  opt.cache_dir = a.cache;
  opt.jobs = a.jobs;
  opt.max_order = a.max_order;
  opt.timing = a.timing;
  VerificationReport r;
  if (properties) {
    r = verify_properties(s, k, a.twist, opt);
  } else if (a.modified) {
    if (s != Series::B) throw UnsupportedType("--modified needs --type B");
    r = verify_modified_Bn(k, opt);
  } else {
    r = verify_kottwitz(s, k, a.twist, opt);
  }
  std::string text = r.dump();
  if (a.report.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.report, std::ios::binary);
    f << text;
    if (!f) throw Error("cannot write " + a.report);
  }
  std::cerr << r.mode << " " << r.to_json()["group"]["name"].get<std::string>() << ": " << r.records.size()
            << " records, " << r.checks.size() << " checks, " << r.mismatches << " mismatches"
            << (r.cache_hit ? " (cache hit)" : "") << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kottwitz character verifier"};
  app.require_subcommand(1);
  Args va, pa;
  auto* verify = app.add_subcommand("verify", "compare both sides over classes x cells");
  add_common(verify, va);
  verify->add_flag("--modified", va.modified, "B_n: modified module against L-cells");
  auto* props = app.add_subcommand("properties", "run the invariant suites");
  add_common(props, pa);
  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return run(va, false);
    return run(pa, true);
  } catch (const std::exception& e) {
    std::cerr << "kcv: " << e.what() << "\n";
    return 2;
  }
}
