#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symconf/collinear_realizer.hpp"
#include "symconf/encoder.hpp"
#include "symconf/localizer.hpp"
#include "symconf/plot.hpp"
#include "symconf/pointset_io.hpp"
#include "symconf/sat_bridge.hpp"
#include "symconf/verify.hpp"

#ifndef SYMCONF_VERSION
#define SYMCONF_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using namespace symconf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNotCertified = 3;
constexpr int kExitUnsat = 10;
constexpr int kExitBudget = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kKnownKeys = {
    "n", "s", "center", "mode", "no_kgon", "imbalance_at_least", "symmetry_breaking", "quadrant", "seed",
    "solver", "timeout", "limit", "enumerate", "realize",
    "localizer.threads", "localizer.topK", "localizer.ptMovements", "localizer.minRadius", "localizer.maxRadius",
    "localizer.resetRadius", "localizer.restartThreshold", "localizer.budgetSeconds", "localizer.maxIterations",
    "collinear.populationFactor", "collinear.fMin", "collinear.fMax", "collinear.crossover",
    "collinear.maxGenerations", "collinear.budgetSeconds", "collinear.bound", "collinear.lineParamBound",
    "collinear.onLineTolerance", "collinear.bandTolerance"};

/// Flat key=value view of a TOML/INI config file; section keys become "section.key".
class Config {
 public:
  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    Config cfg;
    cfg.path_ = path;
    for (const auto& item : CLI::ConfigTOML().from_config(in)) {
      if (item.name == "++" || item.name == "--") continue;
      std::string key;
      for (const auto& p : item.parents) key += p + ".";
      key += item.name;
      if (!kKnownKeys.count(key)) throw UsageError("unknown config key '" + key + "' in " + path);
      std::string value;
      for (std::size_t x = 0; x < item.inputs.size(); ++x) value += (x ? " " : "") + item.inputs[x];
      cfg.values_[key] = value;
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::string& path() const { return path_; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string str(const std::string& key, const std::string& def) const {
    auto it = values_.find(key);
    return it == values_.end() ? def : it->second;
  }
  long long integer(const std::string& key, long long def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    try {
      std::size_t used = 0;
      long long v = std::stoll(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "' expects an integer, got '" + it->second + "'");
    }
  }
  double real(const std::string& key, double def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "' expects a number, got '" + it->second + "'");
    }
  }
  bool boolean(const std::string& key, bool def) const {
    auto it = values_.find(key);
    if (it == values_.end()) return def;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw UsageError("config key '" + key + "' expects true or false, got '" + it->second + "'");
  }

 private:
  std::string path_;
  std::map<std::string, std::string> values_;
};

ProblemSpec specFromConfig(const Config& cfg) {
  if (!cfg.has("n")) throw UsageError("config needs key 'n'");
  ProblemSpec spec;
  try {
    spec.n = static_cast<int>(cfg.integer("n", 0));
    spec.s = static_cast<int>(cfg.integer("s", 1));
    spec.center = cfg.boolean("center", spec.s > 1 && spec.n % spec.s == 1);
    spec.mode = parsePositionMode(cfg.str("mode", "general"));
    if (cfg.has("no_kgon")) spec.noKGon = static_cast<int>(cfg.integer("no_kgon", 0));
    if (cfg.has("imbalance_at_least")) spec.imbalanceAtLeast = static_cast<int>(cfg.integer("imbalance_at_least", 0));
    spec.symmetryBreaking = parseSymmetryBreaking(cfg.str("symmetry_breaking", "none"));
    spec.quadrantClauses = cfg.boolean("quadrant", true);
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

SearchParams searchParamsFromConfig(const Config* cfg, std::uint64_t seed) {
  SearchParams p;
  p.seed = seed;
  if (cfg) {
    p.threads = static_cast<int>(cfg->integer("localizer.threads", p.threads));
    p.topK = static_cast<int>(cfg->integer("localizer.topK", p.topK));
    p.ptMovements = static_cast<int>(cfg->integer("localizer.ptMovements", p.ptMovements));
    p.minRadius = cfg->real("localizer.minRadius", p.minRadius);
    p.maxRadius = cfg->real("localizer.maxRadius", p.maxRadius);
    p.resetRadius = cfg->real("localizer.resetRadius", p.resetRadius);
    p.restartThreshold = cfg->integer("localizer.restartThreshold", p.restartThreshold);
    p.budgetSeconds = cfg->real("localizer.budgetSeconds", p.budgetSeconds);
    p.maxIterations = cfg->integer("localizer.maxIterations", p.maxIterations);
  }
  return p;
}

DEParams deParamsFromConfig(const Config* cfg, std::uint64_t seed) {
  DEParams d;
  d.seed = seed;
  if (cfg) {
    d.populationFactor = static_cast<int>(cfg->integer("collinear.populationFactor", d.populationFactor));
    d.fMin = cfg->real("collinear.fMin", d.fMin);
    d.fMax = cfg->real("collinear.fMax", d.fMax);
    d.crossover = cfg->real("collinear.crossover", d.crossover);
    d.maxGenerations = cfg->integer("collinear.maxGenerations", d.maxGenerations);
    d.budgetSeconds = cfg->real("collinear.budgetSeconds", d.budgetSeconds);
  }
  return d;
}

ObjectiveParams objectiveFromConfig(const Config* cfg) {
  ObjectiveParams o;
  if (cfg) {
    o.bound = cfg->real("collinear.bound", o.bound);
    o.lineParamBound = cfg->real("collinear.lineParamBound", o.lineParamBound);
    o.onLineTolerance = cfg->real("collinear.onLineTolerance", o.onLineTolerance);
    o.bandTolerance = cfg->real("collinear.bandTolerance", o.bandTolerance);
  }
  return o;
}

/// Re-derives the variable table from the description line so models can be
/// decoded; the clauses are taken from the file as written.
CnfFormula loadFormula(const std::string& cnfPath) {
  DimacsFile d = readDimacsFile(cnfPath);
  if (d.problem) {
    CnfFormula f = Encoder(*d.problem).encode();
    if (f.numVars() != d.numVars) throw std::runtime_error(cnfPath + ": variable count does not match its description");
    f.clauses = std::move(d.clauses);
    return f;
  }
  CnfFormula f;
  for (int v = 1; v <= d.numVars; ++v) f.vars.allocate(VarKind::Aux, "x" + std::to_string(v));
  f.clauses = std::move(d.clauses);
  return f;
}

std::string solverOr(const std::string& given, const Config* cfg) {
  if (!given.empty()) return given;
  if (cfg && cfg->has("solver")) return cfg->str("solver", "");
  return defaultSolverCommand();
}

std::optional<SFoldSymmetry> symmetryFor(int n, int s, std::optional<bool> center) {
  if (s <= 1) return std::nullopt;
  try {
    return SFoldSymmetry(n, s, center.value_or(n % s == 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void printBreakdown(const CnfFormula& f, std::ostream& out) {
  out << "variables: " << f.numVars() << '\n' << "clauses: " << f.clauses.size() << '\n';
  for (const auto& b : f.breakdown) out << "  " << b.family << ": " << b.clauses << '\n';
  if (f.triviallyUnsat) out << "trivially unsat: contradictory orientation class\n";
}

StatsReport statsForPoints(const ExactPointSet& pts, const std::optional<SFoldSymmetry>& sym) {
  return computeStats(orientationsOf(pts), sym);
}

// ------------------------------------------------------------ realization

struct RealizeOutcome {
  bool certified = false;
  std::string route;
  double seconds = 0.0;
  std::optional<int> delta;
  std::string detail;
};

/// Routes to the localizer or the collinear realizer and writes
/// <stem>.float.txt, <stem>.exact.txt and <stem>.report.txt on success,
/// <stem>.best.txt (and <stem>.best.exact.txt when available) otherwise.
RealizeOutcome realizeToFiles(const OrientationAssignment& tau, const std::string& stem, const Config* cfg,
                              std::uint64_t seed, const std::optional<SFoldSymmetry>& sym,
                              std::optional<int> targetOverride, std::ostream& log) {
  RealizeOutcome out;
  if (tau.hasCollinearTriple()) {
    out.route = "collinear";
    int target = targetOverride ? *targetOverride
                                : (cfg && cfg->has("imbalance_at_least") ? static_cast<int>(cfg->integer("imbalance_at_least", 0))
                                                                         : minImbalance(tau).delta);
    const auto r = realizeCollinear(tau, target, deParamsFromConfig(cfg, seed), sym, objectiveFromConfig(cfg));
    out.seconds = r.seconds;
    out.delta = r.exactDelta;
    std::ostringstream detail;
    detail << "target " << target << ", exact delta " << r.exactDelta << ", lines exact " << r.exactLines << "/"
           << r.familyLines << ", generations " << r.generations;
    out.detail = detail.str();
    if (r.success) {
      out.certified = true;
      writePointSetFile(stem + ".exact.txt", r.exact);
      writePointSetFile(stem + ".float.txt", toFloat(r.exact));
      StatsReport rep = statsForPoints(r.exact, sym);
      writeText(stem + ".report.txt", formatReport(rep) + "target imbalance: " + std::to_string(target) + "\n");
    } else if (!r.exact.empty()) {
      writePointSetFile(stem + ".best.exact.txt", r.exact);
      writePointSetFile(stem + ".best.txt", toFloat(r.exact));
    }
  } else {
    out.route = "localizer";
    const SearchParams params = searchParamsFromConfig(cfg, seed);
    const auto r = realize(tau, params, sym);
    out.seconds = r.seconds;
    std::ostringstream detail;
    detail << "iterations " << r.iterations << ", restarts " << r.restarts << ", best unsat " << r.bestUnsat
           << ", snap denominator " << r.snapDenominator;
    out.detail = detail.str();
    if (r.success) {
      out.certified = true;
      const ExactPointSet exact = toQuad(r.exact);
      writePointSetFile(stem + ".exact.txt", exact);
      writePointSetFile(stem + ".float.txt", r.points);
      StatsReport rep = statsForPoints(exact, sym);
      rep.certification = certify(r.exact, tau);
      writeText(stem + ".report.txt", formatReport(rep));
      out.delta = rep.imbalance.delta;
    } else if (!r.points.empty()) {
      writePointSetFile(stem + ".best.txt", r.points);
    }
  }
  log << out.route << ": " << (out.certified ? "certified" : "not certified") << " in " << out.seconds << " s ("
      << out.detail << ")\n";
  return out;
}

// ------------------------------------------------------------ subcommands

struct Globals {
  std::uint64_t seed = 1;
  bool seedGiven = false;
};

std::uint64_t effectiveSeed(const Globals& g, const Config* cfg) {
  if (g.seedGiven || !cfg) return g.seed;
  return static_cast<std::uint64_t>(cfg->integer("seed", static_cast<long long>(g.seed)));
}

int cmdEncode(const std::string& configPath, const std::string& stem) {
  const Config cfg = Config::load(configPath);
  const ProblemSpec spec = specFromConfig(cfg);
  const CnfFormula f = Encoder(spec).encode();
  writeFormulaFiles(f, stem);
  std::cout << spec.describe() << '\n';
  printBreakdown(f, std::cout);
  std::cout << "wrote " << stem << ".cnf and " << stem << ".map\n";
  return kExitOk;
}

int cmdSolve(const std::string& cnf, const std::string& solver, double timeout, const std::string& outPath) {
  const CnfFormula f = loadFormula(cnf);
  const SolverResult r = solveExternal(cnf, solverOr(solver, nullptr), timeout);
  std::cout << "status: " << toString(r.status) << " (" << r.wallSeconds << " s)\n";
  if (r.status == SolveStatus::Unsat) return kExitUnsat;
  if (r.status == SolveStatus::Unknown) return kExitBudget;
  if (!satisfiesAll(f.clauses, *r.model)) throw SolverError("solver model violates the formula");
  if (f.classes) {
    const OrientationAssignment tau = decodeModel(*r.model, f);
    if (outPath.empty()) writeAssignment(std::cout, tau);
    else writeAssignmentFile(outPath, tau);
  } else {
    std::ostringstream line;
    line << "v";
    for (int v = 1; v < static_cast<int>(r.model->size()); ++v) line << ' ' << ((*r.model)[v] ? v : -v);
    line << " 0\n";
    if (outPath.empty()) std::cout << line.str();
    else writeText(outPath, line.str());
  }
  return kExitOk;
}

int cmdEnumerate(const std::string& cnf, const std::string& solver, double timeout, std::size_t limit,
                 const std::string& dir) {
  const CnfFormula f = loadFormula(cnf);
  if (!f.classes) throw UsageError("enumeration needs a cnf written by the encode subcommand");
  EnumerationOptions opt;
  opt.solverCmd = solverOr(solver, nullptr);
  opt.timeoutSeconds = timeout;
  opt.limit = limit;
  const EnumerationResult r = enumerateAll(f, opt);
  writeAssignmentDirectory(dir, r.assignments);
  std::cout << "solutions: " << r.assignments.size() << '\n'
            << "complete: " << (r.complete ? "true" : "false") << '\n'
            << "solver calls: " << r.solverCalls << '\n'
            << "seconds: " << r.wallSeconds << '\n';
  if (r.timedOut) return kExitBudget;
  if (r.assignments.empty() && r.complete) return kExitUnsat;
  return kExitOk;
}

int cmdRealize(const Globals& g, const std::string& assignment, const std::string& configPath, const std::string& stem,
               int s, std::optional<bool> center, std::optional<int> target, std::optional<double> budget,
               std::optional<int> threads) {
  Config cfg = configPath.empty() ? Config() : Config::load(configPath);
  if (budget) {
    cfg.set("localizer.budgetSeconds", std::to_string(*budget));
    cfg.set("collinear.budgetSeconds", std::to_string(*budget));
  }
  if (threads) cfg.set("localizer.threads", std::to_string(*threads));
  const OrientationAssignment tau = readAssignmentFile(assignment);
  if (s <= 1 && cfg.has("s")) {
    s = static_cast<int>(cfg.integer("s", 1));
    if (!center && cfg.has("center")) center = cfg.boolean("center", false);
  }
  const auto sym = symmetryFor(tau.n(), s, center);
  const RealizeOutcome o = realizeToFiles(tau, stem, &cfg, effectiveSeed(g, &cfg), sym, target, std::cout);
  if (!o.certified) {
    if (o.delta) std::cout << "best exact delta: " << *o.delta << '\n';
    return kExitBudget;
  }
  std::cout << "wrote " << stem << ".exact.txt, " << stem << ".float.txt, " << stem << ".report.txt\n";
  return kExitOk;
}

int cmdVerify(const std::string& points, const std::string& assignment, int s, std::optional<bool> center,
              bool summary) {
  const ExactPointSet pts = readPointSetFile(points);
  const auto sym = symmetryFor(static_cast<int>(pts.size()), s, center);
  StatsReport rep = statsForPoints(pts, sym);
  if (!assignment.empty()) rep.certification = certify(pts, readAssignmentFile(assignment));
  std::cout << (summary ? formatSummary(rep) : formatReport(rep));
  if (rep.certification && !rep.certification->ok) return kExitNotCertified;
  if (rep.symmetric && !*rep.symmetric) return kExitNotCertified;
  return kExitOk;
}

int cmdStats(const std::string& points, const std::string& assignment, int s, std::optional<bool> center,
             bool summary) {
  if (points.empty() == assignment.empty()) throw UsageError("stats needs exactly one of --points or --assignment");
  StatsReport rep;
  if (!points.empty()) {
    const ExactPointSet pts = readPointSetFile(points);
    rep = statsForPoints(pts, symmetryFor(static_cast<int>(pts.size()), s, center));
  } else {
    const OrientationAssignment tau = readAssignmentFile(assignment);
    rep = computeStats(tau, symmetryFor(tau.n(), s, center));
  }
  std::cout << (summary ? formatSummary(rep) : formatReport(rep));
  return kExitOk;
}

int cmdPlot(const std::string& points, const std::string& assignment, int guides, bool noLabels,
            const std::string& outPath) {
  const ExactPointSet pts = readPointSetFile(points);
  PlotOptions opt;
  opt.labels = !noLabels;
  opt.symmetryGuides = guides;
  if (!assignment.empty()) {
    const OrientationAssignment tau = readAssignmentFile(assignment);
    if (tau.n() != static_cast<int>(pts.size())) throw UsageError("assignment and pointset sizes differ");
    if (tau.hasCollinearTriple()) opt.lines = extractLines(tau).lines;
  }
  writeText(outPath, renderSvg(toFloat(pts), opt));
  std::cout << "wrote " << outPath << '\n';
  return kExitOk;
}

int cmdPipeline(const Globals& g, const std::string& configPath, const std::string& dir) {
  const auto t0 = std::chrono::steady_clock::now();
  auto since = [](std::chrono::steady_clock::time_point a) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - a).count();
  };
  const Config cfg = Config::load(configPath);
  fs::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> manifest;
  auto put = [&](const std::string& k, const auto& v) {
    std::ostringstream s;
    s << v;
    manifest.emplace_back(k, s.str());
  };
  auto flush = [&](int code) {
    put("exit_code", code);
    put("total_seconds", since(t0));
    std::ostringstream text;
    for (const auto& [k, v] : manifest) text << k << "=" << v << '\n';
    writeText((fs::path(dir) / "manifest.txt").string(), text.str());
    return code;
  };

  const std::uint64_t seed = effectiveSeed(g, &cfg);
  const std::string solver = solverOr("", &cfg);
  put("version", SYMCONF_VERSION);
  put("config", fs::absolute(configPath).string());
  for (const auto& [k, v] : cfg.values()) put("config." + k, v);
  put("seed", seed);
  put("solver", solver);
  const SearchParams sp = searchParamsFromConfig(&cfg, seed);
  put("threads", sp.threads);
  put("nondeterministic", sp.threads > 1 ? 1 : 0);

  const ProblemSpec spec = specFromConfig(cfg);
  put("spec", spec.describe());
  auto ts = std::chrono::steady_clock::now();
  const CnfFormula f = Encoder(spec).encode();
  const std::string stem = (fs::path(dir) / "formula").string();
  writeFormulaFiles(f, stem);
  put("encode_variables", f.numVars());
  put("encode_clauses", f.clauses.size());
  for (const auto& b : f.breakdown) put("encode_family." + b.family, b.clauses);
  put("encode_seconds", since(ts));
  std::cout << "encoded " << f.numVars() << " variables, " << f.clauses.size() << " clauses\n";

  std::vector<OrientationAssignment> solutions;
  std::string status = "unknown";
  ts = std::chrono::steady_clock::now();
  const double timeout = cfg.real("timeout", 0.0);
  try {
    if (cfg.boolean("enumerate", false)) {
      EnumerationOptions opt;
      opt.solverCmd = solver;
      opt.timeoutSeconds = timeout;
      opt.limit = static_cast<std::size_t>(cfg.integer("limit", 0));
      const EnumerationResult r = enumerateAll(f, opt);
      solutions = r.assignments;
      put("solve_stage", "enumerate");
      status = r.assignments.empty() ? (r.complete ? "unsat" : "unknown") : "sat";
      put("solve_status", status);
      put("enumerate_count", r.assignments.size());
      put("enumerate_complete", r.complete ? 1 : 0);
      put("enumerate_solver_calls", r.solverCalls);
      if (r.timedOut) put("enumerate_timed_out", 1);
    } else {
      const SolverResult r = solveExternal(stem + ".cnf", solver, timeout);
      put("solve_stage", "solve");
      status = toString(r.status);
      put("solve_status", status);
      if (r.status == SolveStatus::Sat) solutions.push_back(decodeModel(*r.model, f));
    }
  } catch (const std::exception& e) {
    put("solve_status", "error");
    put("solve_error", e.what());
    put("solve_seconds", since(ts));
    std::cerr << "error: " << e.what() << '\n';
    return flush(kExitIo);
  }
  put("solve_seconds", since(ts));
  if (solutions.empty()) {
    std::cout << "no solutions\n";
    return flush(status == "unsat" ? kExitUnsat : kExitBudget);
  }
  writeAssignmentDirectory((fs::path(dir) / "solutions").string(), solutions);
  std::cout << solutions.size() << " solution(s)\n";

  const std::string mode = cfg.str("realize", "first");
  if (mode != "first" && mode != "all" && mode != "none") throw UsageError("realize must be first, all or none");
  const std::size_t count = mode == "none" ? 0 : (mode == "first" ? 1 : solutions.size());
  const auto sym = spec.s > 1 ? std::optional<SFoldSymmetry>(spec.symmetry()) : std::nullopt;
  std::size_t certified = 0;
  for (std::size_t x = 0; x < count; ++x) {
    char name[32];
    std::snprintf(name, sizeof name, "solution_%04zu", x + 1);
    const std::string key = std::string("realize.") + name;
    const std::string rstem = (fs::path(dir) / name).string();
    try {
      const RealizeOutcome o = realizeToFiles(solutions[x], rstem, &cfg, seed, sym, std::nullopt, std::cout);
      put(key + ".route", o.route);
      put(key + ".status", o.certified ? "certified" : "budget_exhausted");
      put(key + ".seconds", o.seconds);
      if (o.delta) put(key + ".delta_min", *o.delta);
      if (o.certified) {
        ++certified;
        const ExactPointSet pts = readPointSetFile(rstem + ".exact.txt");
        const StatsReport rep = statsForPoints(pts, sym);
        if (rep.generalPosition)
          for (int k = 4; k <= 7; ++k) put(key + ".gons_" + std::to_string(k), rep.kGons[static_cast<std::size_t>(k - 4)]);
        PlotOptions po;
        po.symmetryGuides = spec.s > 1 ? spec.s : 0;
        if (solutions[x].hasCollinearTriple()) po.lines = extractLines(solutions[x]).lines;
        writeText(rstem + ".svg", renderSvg(toFloat(pts), po));
      }
    } catch (const std::exception& e) {
      put(key + ".status", "error");
      put(key + ".error", e.what());
    }
  }
  put("realized_attempted", count);
  put("realized_certified", certified);
  return flush(count > 0 && certified == 0 ? kExitBudget : kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric point configurations: SAT encoding, enumeration, realization and certification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SYMCONF_VERSION);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed for realization (overrides the config)")
      ->each([&](const std::string&) { g.seedGiven = true; });

  std::string configPath, stem, cnf, solver, outPath, dir, assignment, points;
  double timeout = 0.0;
  std::size_t limit = 0;
  int s = 1, guides = 0;
  bool centerFlag = false, noCenterFlag = false, summary = false, noLabels = false;
  std::optional<int> target, threads;
  std::optional<double> budget;

  auto addSym = [&](CLI::App* sub) {
    sub->add_option("--s", s, "Rotational symmetry order")->check(CLI::PositiveNumber);
    sub->add_flag("--center", centerFlag, "Last point is the rotation center");
    sub->add_flag("--no-center", noCenterFlag, "No rotation center");
  };

  auto* encode = app.add_subcommand("encode", "Write <stem>.cnf and <stem>.map for a config");
  encode->add_option("--config", configPath, "Config file")->required();
  encode->add_option("--out", stem, "Output stem")->required();

  auto* solve = app.add_subcommand("solve", "Solve a cnf and write the decoded assignment");
  solve->add_option("--cnf", cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
  solve->add_option("--solver", solver, "Solver command (default: $SYMCONF_SOLVER or the bundled solver)");
  solve->add_option("--timeout", timeout, "Seconds; 0 disables");
  solve->add_option("--out", outPath, "Assignment file (stdout when omitted)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all orientation-distinct solutions");
  enumerate->add_option("--cnf", cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--solver", solver, "Solver command");
  enumerate->add_option("--timeout", timeout, "Seconds per solver call; 0 disables");
  enumerate->add_option("--limit", limit, "Stop after this many solutions; 0 means all");
  enumerate->add_option("--out", dir, "Output directory")->required();

  auto* realizeCmd = app.add_subcommand("realize", "Find and certify coordinates for an assignment");
  realizeCmd->add_option("--assignment", assignment, "Assignment file")->required()->check(CLI::ExistingFile);
  realizeCmd->add_option("--config", configPath, "Config file with localizer/collinear sections");
  realizeCmd->add_option("--out", stem, "Output stem")->required();
  realizeCmd->add_option("--target", target, "Imbalance target for collinear assignments");
  realizeCmd->add_option("--budget", budget, "Seconds");
  realizeCmd->add_option("--threads", threads, "Localizer threads");
  addSym(realizeCmd);

  auto* verify = app.add_subcommand("verify", "Certify a pointset against an assignment");
  verify->add_option("--points", points, "Pointset file")->required()->check(CLI::ExistingFile);
  verify->add_option("--assignment", assignment, "Assignment file")->check(CLI::ExistingFile);
  verify->add_flag("--summary", summary, "key=value output");
  addSym(verify);

  auto* stats = app.add_subcommand("stats", "k-gon counts, layers, imbalance and symmetry");
  stats->add_option("--points", points, "Pointset file")->check(CLI::ExistingFile);
  stats->add_option("--assignment", assignment, "Assignment file")->check(CLI::ExistingFile);
  stats->add_flag("--summary", summary, "key=value output");
  addSym(stats);

  auto* plot = app.add_subcommand("plot", "Render a pointset as SVG");
  plot->add_option("--points", points, "Pointset file")->required()->check(CLI::ExistingFile);
  plot->add_option("--assignment", assignment, "Assignment whose collinear triples are drawn as lines")
      ->check(CLI::ExistingFile);
  plot->add_option("--guides", guides, "Number of symmetry guide rays");
  plot->add_flag("--no-labels", noLabels, "Omit point labels");
  plot->add_option("--out", outPath, "SVG file")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Encode, solve or enumerate, realize, verify and plot");
  pipeline->add_option("--config", configPath, "Config file")->required()->check(CLI::ExistingFile);
  pipeline->add_option("--out", dir, "Run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::optional<bool> center =
      centerFlag ? std::optional<bool>(true) : (noCenterFlag ? std::optional<bool>(false) : std::nullopt);
  try {
    if (*encode) return cmdEncode(configPath, stem);
    if (*solve) return cmdSolve(cnf, solver, timeout, outPath);
    if (*enumerate) return cmdEnumerate(cnf, solver, timeout, limit, dir);
    if (*realizeCmd) return cmdRealize(g, assignment, configPath, stem, s, center, target, budget, threads);
    if (*verify) return cmdVerify(points, assignment, s, center, summary);
    if (*stats) return cmdStats(points, assignment, s, center, summary);
    if (*plot) return cmdPlot(points, assignment, guides, noLabels, outPath);
    if (*pipeline) return cmdPipeline(g, configPath, dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
