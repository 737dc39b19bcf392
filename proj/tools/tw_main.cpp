#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tw/bounds.hpp"
#include "tw/constructions.hpp"
#include "tw/enumerate.hpp"
#include "tw/error.hpp"
#include "tw/fopt.hpp"
#include "tw/report.hpp"
#include "tw/terminal_wiener.hpp"
#include "tw/tree_io.hpp"
#include "tw/verify.hpp"
#include "tw/version.hpp"

using Json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw tw::Error(tw::ErrorCode::ParseError, "not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw tw::Error(tw::ErrorCode::ParseError, "empty integer list");
  return out;
}

std::string vec_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int run_compute(const std::string& path, const std::string& method) {
  tw::Tree t = tw::read_tree_file(path);
  const auto m = tw::metrics(t);
  Json out;
  out["n"] = t.order();
  out["leaves"] = m.leaf_count;
  out["diameter"] = m.diameter;
  out["max_degree"] = m.max_degree;
  std::optional<std::int64_t> pairwise, edgecut;
  if (method == "pairwise" || method == "both") pairwise = tw::tw_pairwise(t);
  if (method == "edgecut" || method == "both") edgecut = tw::tw_edgecut(t);
  if (pairwise) out["pairwise"] = *pairwise;
  if (edgecut) out["edgecut"] = *edgecut;
  int rc = 0;
  if (pairwise && edgecut) {
    out["agree"] = *pairwise == *edgecut;
    rc = *pairwise == *edgecut ? 0 : 1;
  }
  std::cout << out.dump(2) << "\n";
  return rc;
}

int run_bounds(int n, std::optional<int> d, std::optional<int> l, std::optional<int> max_degree) {
  Json out;
  out["n"] = n;
  if (d) {
    const auto lb = tw::leaf_bounds(n, *d);
    out["d"] = *d;
    out["l0"] = lb.l0;
    out["l_max"] = lb.l_max;
    out["lower_bound_by_diameter"] = tw::lower_bound_by_diameter(n, *d);
    const auto ub = tw::upper_bound_by_diameter(n, *d);
    out["upper_bound_by_diameter"] = ub.value;
    out["upper_bound_asserted_valid"] = ub.asserted_valid;
  }
  if (l) {
    out["l"] = *l;
    out["lower_bound_by_leaves"] = tw::lower_bound_by_leaves(n, *l);
  }
  if (max_degree) {
    if (*max_degree != 3) throw tw::Error(tw::ErrorCode::BadArg, "closed forms exist only for max degree 3");
    const auto m = tw::delta3_max(n);
    out["max_degree"] = 3;
    out["max_tw"] = m.value;
    out["p"] = m.p;
    out["residue"] = m.residue;
    out["optimal_spine"] = tw::delta3_optimal_backbone(n).x;
  }
  if (n >= 3) {
    const auto g = tw::g_max(n);
    out["g_max"] = g.value;
    out["g_argmax"] = g.argmax;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

void write_or_print(const tw::Tree& t, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << tw::format_tree(t);
  } else {
    tw::write_tree_file(t, out_path);
  }
}

int run_fmax(const std::string& weights, const std::string& method) {
  tw::WeightMultiset w(parse_int_list(weights));
  Json out;
  out["weights"] = std::vector<int>(w.weights().begin(), w.weights().end());
  auto describe = [](const tw::FMaxResult& r) {
    Json j;
    j["value"] = r.value;
    Json arr = Json::array();
    for (const auto& y : r.argmax) {
      Json item;
      item["arrangement"] = y;
      if (y.size() >= 4) {
        auto c = tw::certify_valley(y);
        item["valley_certified"] = c.has_value();
        if (c) item["t"] = c->t;
      }
      arr.push_back(item);
    }
    j["argmax"] = arr;
    return j;
  };
  std::optional<tw::FMaxResult> brute, valley;
  if (method == "brute" || method == "both") brute = tw::f_max_bruteforce(w);
  if (method == "valley" || method == "both") valley = tw::f_max_valley(w);
  if (brute) out["brute"] = describe(*brute);
  if (valley) out["valley"] = describe(*valley);
  int rc = 0;
  if (brute && valley) {
    out["agree"] = brute->value == valley->value;
    rc = brute->value == valley->value ? 0 : 1;
  }
  std::cout << out.dump(2) << "\n";
  return rc;
}

int run_enumerate(const tw::EnumFilter& filter, bool count_only, const std::string& emit_dir, int cap) {
  if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
  std::uint64_t count = 0;
  const tw::TreeVisitor visit = [&](const tw::Tree& t) {
    ++count;
    if (!emit_dir.empty()) {
      std::ostringstream name;
      name << "tree_" << count << ".txt";
      tw::write_tree_file(t, std::filesystem::path(emit_dir) / name.str());
    } else if (!count_only) {
      std::cout << tw::canonical_code(t).str() << "\n";
    }
  };
  // diameters 4 and 5 have direct generators that reach past the generic cap
  if (filter.diameter == 4 || filter.diameter == 5) {
    const auto keep = [&](const tw::Tree& t) {
      if (filter.accepts(t)) visit(t);
    };
    if (filter.diameter == 4) {
      tw::for_each_diameter4_tree(filter.n, keep);
    } else {
      tw::for_each_diameter5_tree(filter.n, keep);
    }
  } else {
    tw::for_each_matching(filter, visit, {}, cap);
  }
  if (count_only) {
    std::cout << count << "\n";
  } else {
    std::cout << "count " << count << "\n";
  }
  return 0;
}

int run_verify(const std::string& check, const tw::VerifyOptions& options, const std::string& report_path,
               const std::string& csv_path) {
  std::vector<tw::VerificationReport> reports;
  if (check == "all") {
    reports = tw::verify_all(options);
  } else {
    reports.push_back(tw::verify_theorem(check, options));
  }
  for (const auto& r : reports) {
    std::cout << r.check_id << " " << tw::to_string(r.status) << " range=" << r.range << " rows=" << r.rows.size()
              << " scanned=" << r.scanned << " counterexamples=" << r.counterexamples.size();
    if (r.wall_ms) std::cout << " wall_ms=" << *r.wall_ms;
    std::cout << "\n";
  }
  if (!report_path.empty()) tw::emit_reports(reports, tw::ReportFormat::Json, report_path);
  if (!csv_path.empty()) tw::emit_reports(reports, tw::ReportFormat::Csv, csv_path);
  return tw::exit_code(reports);
}

bool is_usage_error(tw::ErrorCode c) {
  using tw::ErrorCode;
  return c == ErrorCode::UnknownCheck || c == ErrorCode::RangeTooLarge || c == ErrorCode::BadArg ||
         c == ErrorCode::ParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terminal Wiener index of trees: evaluation, bounds, constructions and exhaustive checks"};
  app.set_version_flag("--version", std::string(tw::kVersion));
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "TW of a tree file");
  std::string tree_path, method = "both";
  compute->add_option("file", tree_path, "tree file")->required();
  compute->add_option("--method", method, "pairwise|edgecut|both")
      ->check(CLI::IsMember({"pairwise", "edgecut", "both"}));

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound values as JSON");
  int b_n = 0;
  std::optional<int> b_d, b_l, b_delta;
  bounds->add_option("--n", b_n, "order")->required();
  bounds->add_option("--d", b_d, "diameter");
  bounds->add_option("--l", b_l, "leaf count");
  bounds->add_option("--max-degree", b_delta, "maximum degree (3)");

  // construct
  auto* construct = app.add_subcommand("construct", "build an extremal tree");
  std::string family, out_path, spine;
  int c_n = 0, c_d = 0, c_id = 0;
  std::optional<int> c_pos;
  construct->add_option("family", family, "starlike|broom|caterpillar|fig1|delta3")
      ->required()
      ->check(CLI::IsMember({"starlike", "broom", "caterpillar", "fig1", "delta3"}));
  construct->add_option("--n", c_n, "order");
  construct->add_option("--d", c_d, "diameter");
  construct->add_option("--pos", c_pos, "broom: spine position of the extra pendant");
  construct->add_option("--spine", spine, "caterpillar: spine vector, e.g. 1,0,1");
  construct->add_option("--id", c_id, "fig1: 1..4");
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  // fmax
  auto* fmax = app.add_subcommand("fmax", "maximize F over arrangements of a multiset");
  std::string weights, f_method = "both";
  fmax->add_option("--weights", weights, "comma-separated weights")->required();
  fmax->add_option("--method", f_method, "brute|valley|both")->check(CLI::IsMember({"brute", "valley", "both"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list unlabeled trees");
  tw::EnumFilter filter;
  bool count_only = false;
  std::string emit_dir;
  int cap = tw::kEnumerationCap;
  enumerate->add_option("--n", filter.n, "order")->required();
  enumerate->add_option("--d", filter.diameter, "diameter");
  enumerate->add_option("--max-degree", filter.max_degree, "maximum degree");
  enumerate->add_option("--leaves", filter.leaf_count, "leaf count");
  enumerate->add_flag("--caterpillar", filter.caterpillar_only, "caterpillars only");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--emit", emit_dir, "write one tree file per tree into this directory");
  enumerate->add_option("--cap", cap, "largest order accepted");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive theorem checks");
  std::string check, report_path, csv_path, cache_dir;
  std::optional<int> n_max, jobs;
  std::optional<std::uint64_t> fault_seed;
  bool timing = false;
  verify->add_option("check", check, "check id or 'all'")->required();
  verify->add_option("--n-max", n_max, "upper end of the range");
  verify->add_option("--jobs", jobs, "worker threads (default $TW_JOBS or 1)");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--csv", csv_path, "write the CSV rows here");
  verify->add_option("--cache", cache_dir, "reuse reports stored in this directory");
  verify->add_flag("--timing", timing, "record wall time in the report");
  verify->add_option("--inject-fault", fault_seed, "corrupt one TW value chosen by this seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*compute) return run_compute(tree_path, method);
    if (*bounds) return run_bounds(b_n, b_d, b_l, b_delta);
    if (*construct) {
      std::optional<tw::Tree> t;
      if (family == "starlike") t = tw::construct_starlike(c_n, c_d);
      if (family == "broom") t = tw::construct_double_broom(c_n, c_d, c_pos);
      if (family == "caterpillar") t = tw::construct_caterpillar({parse_int_list(spine)});
      if (family == "fig1") t = tw::construct_fig1(c_id);
      if (family == "delta3") t = tw::construct_delta3_optimal(c_n);
      write_or_print(*t, out_path);
      return 0;
    }
    if (*fmax) return run_fmax(weights, f_method);
    if (*enumerate) return run_enumerate(filter, count_only, emit_dir, cap);
    if (*verify) {
      tw::VerifyOptions options;
      options.n_max = n_max;
      if (jobs) {
        options.jobs = *jobs;
      } else if (const char* env = std::getenv("TW_JOBS")) {
        try {
          options.jobs = std::stoi(env);
        } catch (const std::exception&) {
          std::cerr << "TW_JOBS is not an integer: " << env << "\n";
          return kUsageError;
        }
      }
      if (options.jobs < 1) {
        std::cerr << "jobs must be positive\n";
        return kUsageError;
      }
      options.fault_seed = fault_seed;
      options.timing = timing;
      if (!cache_dir.empty()) options.cache_dir = cache_dir;
      return run_verify(check, options, report_path, csv_path);
    }
  } catch (const tw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kUsageError : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
