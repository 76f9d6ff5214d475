#include "msv/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "CLI11.hpp"
#include "msv/classify.hpp"
#include "msv/crosscheck.hpp"
#include "msv/report.hpp"

namespace msv {

namespace {

struct ClassifyArgs {
  std::string perm;
  std::string methods = "all";
  bool json = false;
  bool text = false;
  bool faces = false;
  bool diagrams = false;
  bool timings = false;
};

struct ScanArgs {
  int n = 0;
  std::string filter = "all";
  unsigned jobs = 1;
  bool summary = false;
  bool json = false;
  std::string methods = "all";
};

struct RenderArgs {
  std::string perm;
  std::string what = "rothe";
};

struct CrosscheckArgs {
  int n = 0;
  bool deep = false;
  std::string fault = "none";
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const Permutation p = parse_permutation(a.perm);
  const MethodSet methods = MethodSet::parse(a.methods);
  const Classification c = classify(p, methods);
  const ReportOptions options{a.diagrams, a.faces, a.timings};
  if (a.text) {
    out << report_text(c, options);
  } else {
    out << report_json(c, options).dump(2) << "\n";
  }
  if (!c.toric) return kExitNotToric;
  return c.consistent ? kExitOk : kExitVerificationFailed;
}

struct ScanRow {
  std::string line;
  bool toric = false;
  bool trivial = false;
  bool consistent = true;
  std::optional<bool> rigid;
};

bool matches(const ScanRow& r, const std::string& filter) {
  if (filter == "toric") return r.toric;
  if (filter == "rigid") return r.rigid == true;
  if (filter == "nonrigid") return r.rigid == false;
  if (filter == "disagreement") return !r.consistent;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<ScanRow> classify_all(const std::vector<Permutation>& perms, const MethodSet& methods,
                                  unsigned jobs) {
  std::vector<ScanRow> rows(perms.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned worker) {
    try {
      for (std::size_t i = next++; i < perms.size(); i = next++) {
        const Classification c = classify(perms[i], methods);
        ScanRow& r = rows[i];
        r.line = report_json(c).dump();
        r.toric = c.toric;
        r.trivial = c.trivial;
        r.consistent = c.consistent;
        r.rigid = c.rigid;
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const MethodSet methods = MethodSet::parse(a.methods);
  const std::vector<Permutation> perms = all_permutations(a.n);
  const std::vector<ScanRow> rows = classify_all(perms, methods, std::max(1u, a.jobs));

  std::size_t toric = 0, trivial = 0, rigid = 0, nonrigid = 0, undecided = 0, disagree = 0, matching = 0;
  for (const ScanRow& r : rows) {
    if (matches(r, a.filter)) {
      ++matching;
      if (!a.summary) out << r.line << "\n";
    }
    if (!r.consistent) ++disagree;
    if (!r.toric) continue;
    ++toric;
    if (r.trivial) ++trivial;
    if (r.rigid == true) ++rigid;
    else if (r.rigid == false) ++nonrigid;
    else ++undecided;
  }
  if (a.summary) {
    Json s;
    s["n"] = a.n;
    s["permutations"] = rows.size();
    s["toric"] = toric;
    s["non_toric"] = rows.size() - toric;
    s["trivial"] = trivial;
    s["rigid"] = rigid;
    s["non_rigid"] = nonrigid;
    s["undecided"] = undecided;
    s["disagreement"] = disagree;
    s["filter"] = a.filter;
    s["matching"] = matching;
    if (a.json) {
      out << s.dump() << "\n";
    } else {
      for (const auto& [k, v] : s.items()) {
        out << k << std::string(14 - std::min<std::size_t>(13, k.size()), ' ')
            << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
  return disagree == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const Permutation p = parse_permutation(a.perm);
  if (a.what == "rothe") out << render_rothe(p);
  else if (a.what == "regions") out << render_regions(p);
  else out << render_graph_dot(p);
  return kExitOk;
}

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out) {
  CrosscheckOptions options;
  options.n = a.n;
  options.deep = a.deep;
  options.hooks = hooks_with_fault(parse_fault(a.fault));
  const CrosscheckReport r = run_crosscheck(options);
  out << "S_" << a.n << ": " << r.permutations << " permutations, " << r.toric << " toric, " << r.components
      << " components";
  if (a.deep) out << ", " << r.face_queries << " face queries";
  out << "\n";
  if (!r.ok) {
    out << "FAIL: " << r.failure;
    return kExitVerificationFailed;
  }
  out << "ok\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rothe diagrams, edge cones and rigidity of toric matrix Schubert varieties", "msv"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "classify one permutation");
  classify_cmd->add_option("perm", ca.perm, "one-line notation, e.g. \"[2,4,1,3]\"")->required();
  classify_cmd->add_option("--methods", ca.methods, "graph,corollary,oracle or all")->capture_default_str();
  auto* json_flag = classify_cmd->add_flag("--json", ca.json, "JSON report (default)");
  classify_cmd->add_flag("--text", ca.text, "plain-text report")->excludes(json_flag);
  classify_cmd->add_flag("--faces", ca.faces, "include every 3-face");
  classify_cmd->add_flag("--diagrams", ca.diagrams, "include ASCII diagrams");
  classify_cmd->add_flag("--timings", ca.timings, "include per-phase wall times");

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "classify every permutation of S_n");
  scan_cmd->add_option("--n", sa.n, "permutation size")->required()->check(CLI::Range(2, 8));
  scan_cmd->add_option("--filter", sa.filter, "which reports to print")
      ->check(CLI::IsMember({"all", "toric", "rigid", "nonrigid", "disagreement"}))
      ->capture_default_str();
  scan_cmd->add_option("--jobs", sa.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  scan_cmd->add_option("--methods", sa.methods, "graph,corollary,oracle or all")->capture_default_str();
  scan_cmd->add_flag("--summary", sa.summary, "print category counts instead of reports");
  scan_cmd->add_flag("--json", sa.json, "summary as one JSON line");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "draw a diagram or G^π");
  render_cmd->add_option("--perm", ra.perm, "one-line notation")->required();
  render_cmd->add_option("--what", ra.what, "rothe, regions or graph-dot")
      ->check(CLI::IsMember({"rothe", "regions", "graph-dot"}))
      ->capture_default_str();

  CrosscheckArgs xa;
  auto* cross_cmd = app.add_subcommand("crosscheck", "check every toric permutation of S_n against the oracle");
  cross_cmd->add_option("--n", xa.n, "permutation size")->required()->check(CLI::Range(1, 7));
  cross_cmd->add_flag("--deep", xa.deep, "also check every face query with |S| <= 3");
  cross_cmd->add_option("--inject-fault", xa.fault)
      ->check(CLI::IsMember({"none", "ray-sign", "corollary-off-by-one"}))
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, out);
    if (*scan_cmd) return cmd_scan(sa, out);
    if (*render_cmd) return cmd_render(ra, out);
    return cmd_crosscheck(xa, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace msv
