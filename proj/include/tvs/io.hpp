#pragma once

#include "tvs/divclass.hpp"
#include "tvs/pdiv.hpp"
#include "tvs/ufdgen.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tvs {

using Json = nlohmann::json;

constexpr int kFormatVersion = 1;

struct InputDocument {
  enum class Kind { Divisor, Admissible, Numerical } kind = Kind::Divisor;
  std::string name;
  std::optional<PolyhedralDivisor> divisor;
  std::optional<AdmissibleData> admissible;
  std::optional<NumericalInputs> numerical;
};

/// Parses a format-1 document. Syntax errors report line and column, validation
/// errors the JSON pointer of the offending value.
InputDocument parse_input(const std::string& text);

/// "2[0] - [1] - 2/3[inf]"; bare "[p]" has coefficient 1.
QDivisor parse_qdivisor(const std::string& text);

Json to_json(const Rat& x);
Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const QDivisor& d);
Json to_json(const PolyhedralDivisor& d);
Json to_json(const AdmissibleData& z);
Json to_json(const Presentation& p);

struct ReportEntry {
  std::string criterion;
  std::string verdict;
  std::string statement;  // the criterion the verdict rests on
  Json detail = Json::object();
  std::optional<double> time_ms;
};

struct Report {
  std::string input;
  std::vector<ReportEntry> entries;
  int exit_code = 0;

  const ReportEntry* find(const std::string& criterion) const;
};

struct AnalyzeOptions {
  std::set<std::string> only;  // empty selects everything
  std::optional<QDivisor> kdiv;
  std::size_t budget = 1000000;
  bool timing = true;
};

/// All criterion names in evaluation order.
const std::vector<std::string>& criteria();

Report analyze(const InputDocument& doc, const AnalyzeOptions& opts = {});

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Chart cones delta_z per point and, over P^1, the bicone of the two-point normal form.
Json charts(const PolyhedralDivisor& d);

}  // namespace tvs
