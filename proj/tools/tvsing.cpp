#include "tvs/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace tvs;

namespace {

constexpr int kExitProper = 2;
constexpr int kExitParse = 3;

struct ParseFailure {
  std::string message;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseFailure{p.string() + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputDocument load(const fs::path& p) {
  try {
    InputDocument doc = parse_input(read_file(p));
    if (doc.name.empty()) doc.name = p.filename().string();
    return doc;
  } catch (const Error& e) {
    throw ParseFailure{p.string() + ": " + e.what()};
  }
}

std::vector<fs::path> expand(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& s : inputs) {
    fs::path p(s);
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

const PolyhedralDivisor& divisor_of(const InputDocument& doc, std::optional<PolyhedralDivisor>& storage) {
  if (doc.divisor) return *doc.divisor;
  if (doc.admissible) {
    storage = construct_divisor(*doc.admissible);
    return *storage;
  }
  throw Error(ErrorKind::DegenerateInput, "document carries no divisor");
}

const AdmissibleData& admissible_of(const InputDocument& doc) {
  if (!doc.admissible) throw Error(ErrorKind::DegenerateInput, "expected an admissible-data document");
  return *doc.admissible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tvsing: singularities of complexity-one T-varieties"};
  app.require_subcommand(1);

  std::string report_kind = "text";
  std::vector<std::string> only;
  std::string kdiv;
  std::size_t budget = 1000000;
  bool no_timing = false;
  std::vector<std::string> inputs;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the singularity criteria on divisor documents");
  analyze_cmd->add_option("inputs", inputs, "Input files or directories")->required();
  analyze_cmd->add_option("--report", report_kind, "Report format")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--only", only, "Comma-separated criteria")->delimiter(',');
  analyze_cmd->add_option("--kdiv", kdiv, "Canonical divisor representative, e.g. \"-[0] - [inf]\"");
  analyze_cmd->add_option("--budget", budget, "Lattice points per cell in the rationality check");
  analyze_cmd->add_flag("--no-timing", no_timing, "Omit timing fields");

  std::string file;
  auto* construct_cmd = app.add_subcommand("construct", "Build the factorial divisor of admissible data");
  construct_cmd->add_option("input", file, "Admissible-data document")->required();

  std::string present_kind = "text";
  auto* present_cmd = app.add_subcommand("present", "Print the ring presentation of admissible data");
  present_cmd->add_option("input", file, "Admissible-data document")->required();
  present_cmd->add_option("--report", present_kind, "Output format")->check(CLI::IsMember({"json", "text"}));

  int dmax = 30;
  std::vector<long> weight;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Compare graded dimensions of A[D] and the presentation");
  hilbert_cmd->add_option("input", file, "Admissible-data document")->required();
  hilbert_cmd->add_option("--dmax", dmax, "Largest degree compared")->check(CLI::NonNegativeNumber);
  hilbert_cmd->add_option("--weight", weight, "Grading vector in the interior of the tail")->delimiter(',');

  auto* charts_cmd = app.add_subcommand("charts", "Emit chart cones and the bicone");
  charts_cmd->add_option("input", file, "Divisor or admissible-data document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      AnalyzeOptions opts;
      opts.budget = budget;
      opts.timing = !no_timing;
      for (const auto& c : only) {
        const auto& all = criteria();
        if (std::find(all.begin(), all.end(), c) == all.end()) {
          std::cerr << "unknown criterion: " << c << "\n";
          return kExitParse;
        }
        opts.only.insert(c);
      }
      if (!kdiv.empty()) {
        try {
          opts.kdiv = parse_qdivisor(kdiv);
        } catch (const Error& e) {
          std::cerr << "--kdiv: " << e.what() << "\n";
          return kExitParse;
        }
      }
      int code = 0;
      Json batch = Json::array();
      for (const auto& p : expand(inputs)) {
        Report r;
        try {
          r = analyze(load(p), opts);
        } catch (const ParseFailure& f) {
          std::cerr << f.message << "\n";
          code = std::max(code, kExitParse);
          continue;
        } catch (const Error& e) {
          std::cerr << p.string() << ": " << e.what() << "\n";
          code = std::max(code, kExitParse);
          continue;
        }
        code = std::max(code, r.exit_code);
        if (report_kind == "json") batch.push_back(to_json(r));
        else std::cout << to_text(r);
      }
      if (report_kind == "json") std::cout << canonical_dump(batch.size() == 1 ? batch[0] : batch);
      return code;
    }
    InputDocument doc = load(file);
    if (*construct_cmd) {
      std::cout << canonical_dump(to_json(construct_divisor(admissible_of(doc))));
    } else if (*present_cmd) {
      Presentation p = presentation(admissible_of(doc));
      if (present_kind == "json") std::cout << canonical_dump(to_json(p));
      else std::cout << to_string(p) << "\n";
    } else if (*hilbert_cmd) {
      const AdmissibleData& z = admissible_of(doc);
      PolyhedralDivisor d = construct_divisor(z);
      IntVec w(d.rank(), Int(0));
      if (weight.empty()) {
        for (const auto& g : d.tail().generators())
          for (std::size_t i = 0; i < w.size(); ++i) w[i] += g[i];
      } else {
        if (weight.size() != w.size()) throw Error(ErrorKind::ShapeError, "--weight needs " + std::to_string(w.size()) + " entries");
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = weight[i];
      }
      HilbertComparison h = hilbert_compare(d, presentation(z), w, dmax);
      Json out = {{"match", h.match}, {"weight", to_json(w)}, {"dmax", dmax}};
      Json a = Json::array(), b = Json::array();
      for (const auto& x : h.divisor_side) a.push_back(to_json(Rat(x)));
      for (const auto& x : h.presentation_side) b.push_back(to_json(Rat(x)));
      out["divisor_side"] = a;
      out["presentation_side"] = b;
      if (h.first_mismatch) out["first_mismatch"] = to_json(Rat(*h.first_mismatch));
      std::cout << canonical_dump(out);
      return h.match ? 0 : 1;
    } else if (*charts_cmd) {
      std::optional<PolyhedralDivisor> storage;
      std::cout << canonical_dump(charts(divisor_of(doc, storage)));
    }
  } catch (const ParseFailure& f) {
    std::cerr << f.message << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::NotProper ? kExitProper : 1;
  }
  return 0;
}
