#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/json_io.hpp"
#include "xmodcat/scenario.hpp"

namespace fs = std::filesystem;
using namespace xmodcat;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string report_text(const io::Json& j) { return j.dump(2) + "\n"; }

int run_file(const std::string& path, const std::string& expected_kind, const std::string& json_out,
             const RunOptions& opts) {
  std::string text;
  try {
    text = slurp(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  ScenarioOutcome out = run_scenario_text(text, opts);
  if (!expected_kind.empty() && out.exit_code != 2 && out.report["kind"] != expected_kind) {
    out.exit_code = 2;
    out.text = "scenario kind " + out.report["kind"].dump() + " does not match subcommand " + expected_kind + "\n";
  }
  std::cout << out.text;
  if (!json_out.empty()) {
    std::ofstream o(json_out, std::ios::binary);
    if (!o) {
      std::cerr << "cannot write " << json_out << "\n";
      return 2;
    }
    o << report_text(out.report);
  }
  return out.exit_code;
}

// First differing line of two texts, 1-based.
std::size_t first_diff_line(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  for (std::size_t n = 1;; ++n) {
    const bool ga = static_cast<bool>(std::getline(sa, la));
    const bool gb = static_cast<bool>(std::getline(sb, lb));
    if (!ga && !gb) return 0;
    if (ga != gb || la != lb) return n;
  }
}

int run_corpus(const std::string& dir, bool update, const RunOptions& opts) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const fs::path golden = fs::path(dir) / "golden";
  if (update) fs::create_directories(golden);
  int mismatches = 0;
  for (const auto& f : files) {
    const ScenarioOutcome out = run_scenario_text(slurp(f), opts);
    const std::string got = report_text(out.report);
    const fs::path g = golden / f.filename();
    if (update) {
      std::ofstream(g, std::ios::binary) << got;
      std::cout << "updated " << f.filename().string() << " (exit " << out.exit_code << ")\n";
      continue;
    }
    if (!fs::exists(g)) {
      std::cout << "MISSING " << f.filename().string() << ": no golden report\n";
      ++mismatches;
      continue;
    }
    const std::size_t line = first_diff_line(slurp(g), got);
    if (line == 0) {
      std::cout << "match " << f.filename().string() << "\n";
    } else {
      std::cout << "DIFF " << f.filename().string() << ": first difference at line " << line << "\n";
      ++mismatches;
    }
  }
  std::cout << files.size() - mismatches << "/" << files.size() << " golden reports match\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xmodcat: braided Gamma-crossed modules, graded categorical groups and their cohomology"};
  app.require_subcommand(1);
  std::string json_out;
  std::uint64_t guard = 0;
  int threads = 0;
  int code = 0;

  auto options = [&]() {
    RunOptions o;
    if (guard > 0) o.guard = guard;
    if (threads > 0) o.threads = threads;
    return o;
  };

  std::string scenario_path;
  for (const char* kind : kScenarioKinds) {
    auto* sub = app.add_subcommand(kind, std::string("run a '") + kind + "' scenario file");
    sub->add_option("scenario", scenario_path, "scenario JSON file")->required();
    sub->add_option("--json", json_out, "write the JSON report to this path");
    sub->add_option("--guard", guard, "enumeration guard");
    sub->add_option("--threads", threads, "OpenMP threads");
    sub->callback([&, kind]() { code = run_file(scenario_path, kind, json_out, options()); });
  }
  auto* run = app.add_subcommand("run", "run a scenario file of any kind");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--json", json_out, "write the JSON report to this path");
  run->add_option("--guard", guard, "enumeration guard");
  run->add_option("--threads", threads, "OpenMP threads");
  run->callback([&]() { code = run_file(scenario_path, "", json_out, options()); });

  std::string corpus_dir;
  bool update = false;
  auto* corpus = app.add_subcommand("corpus", "run every scenario in a directory against its golden report");
  corpus->add_option("path", corpus_dir, "corpus directory")->required();
  corpus->add_flag("--update", update, "rewrite the golden reports");
  corpus->add_option("--guard", guard, "enumeration guard");
  corpus->add_option("--threads", threads, "OpenMP threads");
  corpus->callback([&]() { code = run_corpus(corpus_dir, update, options()); });

  std::string module_name;
  auto* catalog = app.add_subcommand("catalog", "list built-in modules, or print one as JSON");
  catalog->add_option("name", module_name, "module name");
  catalog->callback([&]() {
    if (module_name.empty()) {
      for (const auto& m : catalog_modules()) std::cout << m.name << "\n";
      return;
    }
    try {
      std::cout << io::to_json(*catalog_module(module_name)).dump() << "\n";
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      code = 2;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
