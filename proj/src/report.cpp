#include "tvs/io.hpp"

#include "tvs/singcheck.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace tvs {

namespace {

struct CriterionInfo {
  std::string name;
  std::string statement;
};

const std::vector<CriterionInfo>& criterion_table() {
  static const std::vector<CriterionInfo> t{
      {"construction", "factorial-construction"},
      {"presentation", "trinomial-presentation"},
      {"isolated_factorial", "isolated-factorial-classification"},
      {"monster_system", "canonical-class-system"},
      {"proper", "properness"},
      {"smooth", "smoothness-criterion"},
      {"isolated", "facet-criterion"},
      {"class_group", "class-group-presentation"},
      {"factoriality", "factoriality-determinant"},
      {"gorenstein", "canonical-class-system"},
      {"discrepancies", "discrepancy-formula"},
      {"log_terminal", "boundary-sum-criterion"},
      {"rational", "floor-degree-criterion"},
      {"cm", "cohen-macaulay-criteria"},
      {"canonical", "ade-classification"},
      {"elliptic", "elliptic-criterion"},
  };
  return t;
}

std::string statement_of(const std::string& name) {
  for (const auto& c : criterion_table())
    if (c.name == name) return c.statement;
  return "";
}

Json verdict_detail(const Verdict& v) {
  Json d = {{"reason", v.reason}};
  if (v.witness_u) d["witness_u"] = to_json(*v.witness_u);
  if (v.witness_value) d["witness_value"] = to_json(*v.witness_value);
  return d;
}

Json gorenstein_detail(const GorensteinSolution& s) {
  Json d;
  d["q_gorenstein"] = s.q_gorenstein;
  if (s.q_gorenstein) {
    d["u"] = to_json(s.u);
    Json a = Json::object();
    for (std::size_t i = 0; i < s.points.size(); ++i) a[s.points[i]] = to_json(s.a[i]);
    d["a"] = a;
    d["index"] = to_json(Rat(s.index));
    d["principality_decided"] = s.principality_decided;
  } else {
    d["certificate"] = to_json(s.certificate);
  }
  return d;
}

std::string gorenstein_verdict(const GorensteinSolution& s) {
  return s.q_gorenstein ? "index " + to_string(s.index) : "not Q-Gorenstein";
}

class Runner {
 public:
  Runner(Report& r, const AnalyzeOptions& o) : report_(r), opts_(o) {}

  bool selected(const std::string& name) const { return opts_.only.empty() || opts_.only.count(name) > 0; }

  // Runs f unless deselected; errors become an "error" entry.
  void run(const std::string& name, const std::function<void(ReportEntry&)>& f) {
    if (!selected(name)) return;
    ReportEntry e;
    e.criterion = name;
    e.statement = statement_of(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
      f(e);
    } catch (const Error& err) {
      e.verdict = "error";
      e.detail = {{"error", err.what()}, {"kind", to_string(err.kind())}};
    } catch (const std::exception& err) {
      e.verdict = "error";
      e.detail = {{"error", err.what()}, {"kind", "InternalError"}};
    }
    if (opts_.timing)
      e.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.entries.push_back(std::move(e));
  }

 private:
  Report& report_;
  const AnalyzeOptions& opts_;
};

void analyze_divisor(const PolyhedralDivisor& d, Runner& run, Report& report, const AnalyzeOptions& opts) {
  Properness pr = is_proper(d);
  {
    ReportEntry e;
    e.criterion = "proper";
    e.statement = statement_of("proper");
    e.verdict = pr.status == ProperStatus::Proper      ? "yes"
                : pr.status == ProperStatus::NotProper ? "no"
                                                       : "inconclusive";
    if (pr.witness) e.detail["witness_u"] = to_json(*pr.witness);
    if (opts.timing) e.time_ms = 0.0;
    report.entries.push_back(e);
  }
  if (pr.status == ProperStatus::NotProper) {
    report.exit_code = 2;
    return;
  }
  RationalOptions ro;
  ro.budget = opts.budget;
  run.run("smooth", [&](ReportEntry& e) {
    Verdict v = check_smooth(d);
    e.verdict = to_string(v.status);
    e.detail = verdict_detail(v);
  });
  run.run("isolated", [&](ReportEntry& e) {
    Verdict v = check_isolated(d);
    e.verdict = to_string(v.status);
    e.detail = verdict_detail(v);
  });
  run.run("class_group", [&](ReportEntry& e) {
    ClassGroup g = class_group(d);
    e.verdict = to_string(g);
    Json tors = Json::array();
    for (const auto& t : g.torsion) tors.push_back(to_json(Rat(t)));
    e.detail = {{"torsion", tors},
                {"free_rank", g.free_rank},
                {"q_factorial", g.q_factorial},
                {"count_formula", g.count_formula}};
  });
  run.run("factoriality", [&](ReportEntry& e) {
    FactorialityResult f = factoriality_det(d);
    e.verdict = f.factorial ? "yes" : "no";
    e.detail = {{"square", f.square}, {"rows", f.rows}, {"cols", f.cols}};
    if (f.det) e.detail["det"] = to_json(Rat(*f.det));
  });
  std::optional<GorensteinSolution> sol;
  auto solve = [&]() -> const GorensteinSolution& {
    if (!sol) sol = gorenstein_solve(d);
    return *sol;
  };
  run.run("gorenstein", [&](ReportEntry& e) {
    const GorensteinSolution& s = solve();
    e.verdict = gorenstein_verdict(s);
    e.detail = gorenstein_detail(s);
  });
  run.run("discrepancies", [&](ReportEntry& e) {
    DiscrepancyReport r = discrepancies(d, solve());
    Json vs = Json::array(), rs = Json::array();
    for (const auto& v : r.vertices)
      vs.push_back({{"point", v.point}, {"vertex", to_json(v.vertex)}, {"value", to_json(v.value)},
                    {"exceptional", v.exceptional}});
    for (const auto& x : r.rays)
      rs.push_back({{"ray", to_json(x.ray)}, {"value", to_json(x.value)}, {"exceptional", x.exceptional}});
    e.verdict = "minimum " + to_string(r.minimum());
    e.detail = {{"vertices", vs}, {"rays", rs}, {"minimum", to_json(r.minimum())}};
  });
  run.run("log_terminal", [&](ReportEntry& e) {
    Verdict v = check_log_terminal(d);
    e.verdict = to_string(v.status);
    e.detail = verdict_detail(v);
  });
  run.run("rational", [&](ReportEntry& e) {
    Verdict v = check_rational(d, ro);
    e.verdict = to_string(v.status);
    e.detail = verdict_detail(v);
  });
  run.run("cm", [&](ReportEntry& e) {
    CmVerdict v = check_cm(d, ro);
    e.verdict = to_string(v.status());
    const char* kind = v.kind == CmVerdict::Kind::Yes           ? "yes"
                       : v.kind == CmVerdict::Kind::IffRational ? "iff-rational"
                                                                : "inconclusive";
    e.detail = {{"kind", kind}, {"reason", v.reason}};
    if (v.kind == CmVerdict::Kind::IffRational) e.detail["rational"] = verdict_detail(v.resolved);
  });
  if (d.rank() != 1) return;
  run.run("canonical", [&](ReportEntry& e) {
    CanonicalClass c = classify_canonical(d);
    e.verdict = c.label();
    e.detail = {{"reason", c.reason}};
  });
  run.run("elliptic", [&](ReportEntry& e) {
    EllipticResult r = check_elliptic(d);
    e.verdict = r.kind == EllipticResult::Kind::Elliptic      ? "elliptic"
                : r.kind == EllipticResult::Kind::NotElliptic ? "not elliptic"
                                                              : "unsupported base";
    e.detail = {{"reason", r.reason}};
    if (r.kind == EllipticResult::Kind::Elliptic) {
      e.detail["minimal"] = r.minimal;
      e.detail["index"] = to_json(Rat(r.index));
    }
    if (r.witness_u != 0) e.detail["witness_u"] = to_json(Rat(r.witness_u));
  });
}

}  // namespace

const ReportEntry* Report::find(const std::string& criterion) const {
  for (const auto& e : entries)
    if (e.criterion == criterion) return &e;
  return nullptr;
}

const std::vector<std::string>& criteria() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : criterion_table()) v.push_back(c.name);
    return v;
  }();
  return names;
}

Report analyze(const InputDocument& doc, const AnalyzeOptions& opts) {
  Report report;
  report.input = doc.name;
  Runner run(report, opts);
  switch (doc.kind) {
    case InputDocument::Kind::Divisor: {
      PolyhedralDivisor d = opts.kdiv ? doc.divisor->with_canonical(*opts.kdiv) : *doc.divisor;
      analyze_divisor(d, run, report, opts);
      break;
    }
    case InputDocument::Kind::Admissible: {
      const AdmissibleData& z = *doc.admissible;
      std::optional<PolyhedralDivisor> d;
      run.run("construction", [&](ReportEntry& e) {
        ConstructionResult c = construct(z);
        d = c.divisor;
        e.verdict = "det " + to_string(c.det);
        e.detail = {{"divisor", to_json(c.divisor)}, {"shift", c.shift}, {"det", to_json(Rat(c.det))}};
      });
      run.run("presentation", [&](ReportEntry& e) {
        Presentation p = presentation(z);
        e.verdict = to_string(p);
        e.detail = to_json(p);
      });
      run.run("isolated_factorial", [&](ReportEntry& e) {
        IsolatedClass c = classify_isolated_factorial(z);
        e.verdict = c.label();
        e.detail = {{"reason", c.reason}};
      });
      if (!d) d = construct(z).divisor;
      analyze_divisor(opts.kdiv ? d->with_canonical(*opts.kdiv) : *d, run, report, opts);
      break;
    }
    case InputDocument::Kind::Numerical: {
      const NumericalInputs& in = *doc.numerical;
      run.run("monster_system", [&](ReportEntry& e) {
        MonsterSystem m = monster_system(in);
        e.verdict = std::to_string(m.matrix.rows()) + "x" + std::to_string(m.matrix.cols());
        e.detail = {{"rows", m.matrix.rows()}, {"cols", m.matrix.cols()}, {"class_rows", m.class_rows}};
      });
      run.run("gorenstein", [&](ReportEntry& e) {
        GorensteinSolution s = gorenstein_solve(in);
        e.verdict = gorenstein_verdict(s);
        e.detail = gorenstein_detail(s);
      });
      break;
    }
  }
  return report;
}

Json to_json(const Report& r) {
  Json es = Json::array();
  for (const auto& e : r.entries) {
    Json j = {{"criterion", e.criterion}, {"verdict", e.verdict}, {"statement", e.statement}, {"detail", e.detail}};
    if (e.time_ms) j["time_ms"] = *e.time_ms;
    es.push_back(j);
  }
  return {{"format", kFormatVersion}, {"input", r.input}, {"exit_code", r.exit_code}, {"entries", es}};
}

Report report_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", 0) != kFormatVersion)
    throw Error(ErrorKind::ParseError, "/format: not a format-1 report");
  Report r;
  r.input = j.at("input").get<std::string>();
  r.exit_code = j.at("exit_code").get<int>();
  for (const auto& x : j.at("entries")) {
    ReportEntry e;
    e.criterion = x.at("criterion").get<std::string>();
    e.verdict = x.at("verdict").get<std::string>();
    e.statement = x.at("statement").get<std::string>();
    e.detail = x.at("detail");
    if (x.contains("time_ms")) e.time_ms = x.at("time_ms").get<double>();
    r.entries.push_back(e);
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  if (!r.input.empty()) os << r.input << "\n";
  std::size_t width = 0;
  for (const auto& e : r.entries) width = std::max(width, e.criterion.size());
  for (const auto& e : r.entries) {
    os << "  " << e.criterion << std::string(width - e.criterion.size() + 2, ' ') << e.verdict;
    std::string note;
    if (e.detail.contains("error")) note = e.detail["error"].get<std::string>();
    else if (e.detail.contains("reason") && e.detail["reason"].is_string()) note = e.detail["reason"].get<std::string>();
    if (note.empty() && e.detail.contains("witness_u")) note += (note.empty() ? "" : "; ") + std::string("u = ") + e.detail["witness_u"].dump();
    if (!note.empty()) os << "  (" << note << ")";
    os << "\n";
  }
  return os.str();
}

Json charts(const PolyhedralDivisor& d) {
  auto cone_json = [](const Cone& c) {
    Json g = Json::array();
    for (const auto& x : c.generators()) g.push_back(to_json(x));
    return Json{{"generators", g}, {"regular", is_regular(c)}};
  };
  Json out;
  Json pts = Json::object();
  for (const auto& [p, poly] : d.coefficients()) pts[p] = cone_json(cayley_cone({{poly, {1}}}));
  out["points"] = pts;
  out["tail"] = cone_json(d.tail());
  if (d.base().is_p1()) {
    std::vector<const SigmaPolyhedron*> nontrivial;
    RatVec w(d.rank(), Rat(0));
    for (const auto& [p, poly] : d.coefficients()) {
      if (poly.vertices().size() == 1 && is_integral(poly.vertices()[0])) w = add(w, poly.vertices()[0]);
      else nontrivial.push_back(&poly);
    }
    if (nontrivial.size() <= 2) {
      SigmaPolyhedron trivial = SigmaPolyhedron::tail_only(d.tail());
      const SigmaPolyhedron& y = nontrivial.empty() ? trivial : *nontrivial[0];
      std::vector<RatVec> shifted;
      for (const auto& v : y.vertices()) shifted.push_back(add(v, w));
      SigmaPolyhedron dy(shifted, d.tail());
      const SigmaPolyhedron& dz = nontrivial.size() < 2 ? trivial : *nontrivial[1];
      out["bicone"] = cone_json(cayley_cone({{dy, {1}}, {dz, {-1}}}));
    } else {
      out["bicone"] = nullptr;
    }
  }
  return out;
}

}  // namespace tvs
