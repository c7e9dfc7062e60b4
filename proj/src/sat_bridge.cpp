#include "symconf/sat_bridge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#ifndef SYMCONF_DEFAULT_SOLVER
#define SYMCONF_DEFAULT_SOLVER "cadical"
#endif

namespace symconf {

namespace fs = std::filesystem;

std::string toString(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string defaultSolverCommand() {
  if (const char* env = std::getenv("SYMCONF_SOLVER"); env && *env) return env;
  return SYMCONF_DEFAULT_SOLVER " -q";
}

namespace {

std::string shellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::string tempPath(const std::string& suffix) {
  static std::mt19937_64 rng(std::random_device{}());
  const auto dir = fs::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto p = dir / ("symconf_" + std::to_string(::getpid()) + "_" + std::to_string(rng() % 1000000000ULL) + suffix);
    if (!fs::exists(p)) return p.string();
  }
  throw std::runtime_error("cannot create temporary file");
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

struct ProcessOutput {
  std::string out;
  std::string err;
  int exitCode = 0;
  bool timedOut = false;
};

ProcessOutput runShell(const std::string& command, double timeoutSeconds) {
  int outPipe[2], errPipe[2];
  if (pipe(outPipe) != 0 || pipe(errPipe) != 0) throw SolverError("cannot create pipes");
  const pid_t pid = fork();
  if (pid < 0) throw SolverError("fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    dup2(outPipe[1], STDOUT_FILENO);
    dup2(errPipe[1], STDERR_FILENO);
    close(outPipe[0]);
    close(outPipe[1]);
    close(errPipe[0]);
    close(errPipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(outPipe[1]);
  close(errPipe[1]);
  ProcessOutput result;
  const auto start = std::chrono::steady_clock::now();
  pollfd fds[2] = {{outPipe[0], POLLIN, 0}, {errPipe[0], POLLIN, 0}};
  int open = 2;
  char buf[1 << 16];
  while (open > 0) {
    int waitMs = -1;
    if (timeoutSeconds > 0) {
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const double left = timeoutSeconds - elapsed;
      if (left <= 0) {
        result.timedOut = true;
        kill(-pid, SIGKILL);
        break;
      }
      waitMs = static_cast<int>(std::min(left * 1000.0 + 1.0, 1e9));
    }
    const int rc = poll(fds, 2, waitMs);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (auto& p : fds) {
      if (p.fd < 0 || !(p.revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t got = read(p.fd, buf, sizeof buf);
      if (got <= 0) {
        close(p.fd);
        p.fd = -1;
        --open;
        continue;
      }
      (p.fd == outPipe[0] ? result.out : result.err).append(buf, static_cast<std::size_t>(got));
    }
  }
  for (auto& p : fds)
    if (p.fd >= 0) close(p.fd);
  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) result.exitCode = WEXITSTATUS(status);
  else if (WIFSIGNALED(status)) result.exitCode = 128 + WTERMSIG(status);
  return result;
}

}  // namespace

SolverResult solveExternal(const std::string& cnfPath, const std::string& solverCmd, double timeoutSeconds) {
  if (!fs::exists(cnfPath)) throw SolverError("DIMACS file not found: " + cnfPath);
  const std::string cmd = solverCmd.empty() ? defaultSolverCommand() : solverCmd;
  const auto start = std::chrono::steady_clock::now();
  ProcessOutput run = runShell("exec " + cmd + " " + shellQuote(cnfPath), timeoutSeconds);
  SolverResult result;
  result.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.exitCode = run.exitCode;
  result.stderrText = run.err;
  if (run.timedOut) {
    result.status = SolveStatus::Unknown;
    return result;
  }
  std::optional<SolveStatus> status;
  std::vector<int> values;
  std::istringstream lines(run.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      const std::string word = line.substr(2);
      if (word.rfind("SATISFIABLE", 0) == 0) status = SolveStatus::Sat;
      else if (word.rfind("UNSATISFIABLE", 0) == 0) status = SolveStatus::Unsat;
      else if (word.rfind("UNKNOWN", 0) == 0) status = SolveStatus::Unknown;
      else throw SolverError("unparseable solver output");
    } else if (line.rfind("v", 0) == 0) {
      std::istringstream vals(line.substr(1));
      std::string tok;
      while (vals >> tok) {
        try {
          values.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw SolverError("unparseable solver output");
        }
      }
    }
  }
  if (!status) {
    if (run.exitCode != 0 && run.exitCode != 10 && run.exitCode != 20) {
      throw SolverError("solver exited with code " + std::to_string(run.exitCode) + ": " + run.err);
    }
    throw SolverError("unparseable solver output");
  }
  result.status = *status;
  if (result.status == SolveStatus::Sat) {
    int maxVar = 0;
    for (int v : values) maxVar = std::max(maxVar, std::abs(v));
    std::vector<bool> model(static_cast<std::size_t>(maxVar) + 1, false);
    for (int v : values)
      if (v > 0) model[static_cast<std::size_t>(v)] = true;
    result.model = std::move(model);
  }
  return result;
}

SolverResult solveFormula(const CnfFormula& formula, const std::string& solverCmd, double timeoutSeconds) {
  TempFile tmp(tempPath(".cnf"));
  {
    std::ofstream out(tmp.path);
    if (!out) throw SolverError("cannot write " + tmp.path);
    emitDimacs(formula, out);
  }
  SolverResult r = solveExternal(tmp.path, solverCmd, timeoutSeconds);
  if (r.model) r.model->resize(static_cast<std::size_t>(formula.numVars()) + 1, false);
  return r;
}

OrientationAssignment decodeModel(const std::vector<bool>& model, const VarTable& vars,
                                  const LiteralClassTable& classes) {
  std::vector<int> varOfClass(classes.size(), 0);
  for (int id : vars.idsOfKind(VarKind::Orientation)) {
    const int c = vars.info(id).classIndex;
    if (c >= 0 && static_cast<std::size_t>(c) < varOfClass.size()) varOfClass[static_cast<std::size_t>(c)] = id;
  }
  auto value = [&](const ClassRef& ref) {
    const int id = varOfClass.at(static_cast<std::size_t>(ref.classIndex));
    if (id == 0 || static_cast<std::size_t>(id) >= model.size()) throw std::runtime_error("model misses a class variable");
    return model[static_cast<std::size_t>(id)] == (ref.polarity > 0);
  };
  const int n = classes.symmetry().n();
  OrientationAssignment tau(n);
  const bool collinear = classes.semantics() == LiteralSemantics::Collinear;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (!collinear) {
          tau.set(i, j, k, value(classes.lookup(i, j, k, LitKind::A)) ? Orientation::Counterclockwise
                                                                        : Orientation::Clockwise);
          continue;
        }
        const bool a = value(classes.lookup(i, j, k, LitKind::A));
        const bool b = value(classes.lookup(i, j, k, LitKind::B));
        const bool c = value(classes.lookup(i, j, k, LitKind::C));
        if (int(a) + int(b) + int(c) != 1) throw std::runtime_error("inconsistent model");
        tau.set(i, j, k, a ? Orientation::Counterclockwise : (b ? Orientation::Clockwise : Orientation::Collinear));
      }
  return tau;
}

OrientationAssignment decodeModel(const std::vector<bool>& model, const CnfFormula& formula) {
  if (!formula.classes) throw std::invalid_argument("formula has no literal class table");
  return decodeModel(model, formula.vars, *formula.classes);
}

EnumerationResult enumerateAll(const CnfFormula& formula, const EnumerationOptions& options) {
  EnumerationResult result;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    result.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };
  if (formula.triviallyUnsat) {
    result.complete = true;
    return finish();
  }
  std::vector<int> projection = options.projection.empty() ? formula.orientationVars() : options.projection;
  for (int v : projection)
    if (v < 1 || v > formula.numVars()) throw std::invalid_argument("projection variable out of range");

  std::optional<TempFile> owned;
  std::string path = options.workPath;
  if (path.empty()) {
    owned.emplace(tempPath(".cnf"));
    path = owned->path;
  }
  // The header is padded so it can be rewritten in place as clauses are appended.
  constexpr std::size_t kHeaderWidth = 48;
  auto header = [&](std::size_t clauses) {
    std::string h = "p cnf " + std::to_string(formula.numVars()) + " " + std::to_string(clauses);
    h.resize(kHeaderWidth - 1, ' ');
    return h + "\n";
  };
  std::size_t clauseCount = formula.clauses.size();
  std::streamoff headerPos = 0;
  {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw SolverError("cannot write " + path);
    if (formula.problem) out << "c symconf " << formula.problem->describe() << '\n';
    headerPos = out.tellp();
    out << header(clauseCount);
    for (const auto& clause : formula.clauses) {
      for (int lit : clause) out << lit << ' ';
      out << "0\n";
    }
    if (!out) throw SolverError("I/O failure writing " + path);
  }
  std::vector<Clause> blocking;
  while (options.limit == 0 || result.projections.size() < options.limit) {
    SolverResult r = solveExternal(path, options.solverCmd, options.timeoutSeconds);
    ++result.solverCalls;
    if (r.status == SolveStatus::Unsat) {
      result.complete = true;
      break;
    }
    if (r.status == SolveStatus::Unknown) {
      result.timedOut = true;
      break;
    }
    std::vector<bool> model = std::move(*r.model);
    model.resize(static_cast<std::size_t>(formula.numVars()) + 1, false);
    if (!satisfiesAll(formula.clauses, model) || !satisfiesAll(blocking, model)) {
      throw SolverError("solver returned a model that violates the formula");
    }
    std::vector<bool> proj;
    Clause block;
    for (int v : projection) {
      const bool val = model[static_cast<std::size_t>(v)];
      proj.push_back(val);
      block.push_back(val ? -v : v);
    }
    if (formula.classes) result.assignments.push_back(decodeModel(model, formula));
    result.projections.push_back(std::move(proj));
    if (block.empty()) {
      // Projection is empty: a single class of models.
      result.complete = true;
      break;
    }
    {
      std::ofstream out(path, std::ios::app);
      for (int lit : block) out << lit << ' ';
      out << "0\n";
    }
    blocking.push_back(std::move(block));
    ++clauseCount;
    {
      std::fstream io(path, std::ios::in | std::ios::out);
      io.seekp(headerPos);
      io << header(clauseCount);
    }
  }
  return finish();
}

void writeAssignmentDirectory(const std::string& dir, const std::vector<OrientationAssignment>& assignments) {
  fs::create_directories(dir);
  std::ofstream index(fs::path(dir) / "index.lst");
  if (!index) throw std::runtime_error("cannot write " + (fs::path(dir) / "index.lst").string());
  for (std::size_t x = 0; x < assignments.size(); ++x) {
    char name[32];
    std::snprintf(name, sizeof name, "solution_%04zu.txt", x + 1);
    writeAssignmentFile((fs::path(dir) / name).string(), assignments[x]);
    index << name << '\n';
  }
}

std::vector<OrientationAssignment> readAssignmentDirectory(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<OrientationAssignment> out;
  for (const auto& f : files) out.push_back(readAssignmentFile(f.string()));
  return out;
}

}  // namespace symconf
