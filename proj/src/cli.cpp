#include "sbp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sbp/error.hpp"
#include "sbp/report.hpp"
#include "sbp/verify.hpp"

namespace sbp::cli {

namespace {

using nlohmann::ordered_json;

struct Flags {
  std::string group;
  std::string codomain;
  std::string function;
  std::optional<int> fieldE;
  std::optional<int> alpha;
  bool inverse = false;
  bool json = false;
  std::string out;
  int workers = 1;
  // search
  bool noNormalize = false;
  bool noPrune = false;
  bool noFiberLimit = false;
  std::optional<int> maxResults;
  bool allowLarge = false;
  bool classify = false;
  bool orbits = false;
  bool noTiming = false;
  // export-dot
  bool colorComponents = false;
  // verify-paper
  bool skipE5 = false;
  bool injectFault = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void addSource(CLI::App* cmd, Flags& flags, bool allowField) {
  auto* group = cmd->add_option("--group", flags.group, "domain group, e.g. 6 or 2x2");
  cmd->add_option("--codomain", flags.codomain, "codomain group (defaults to --group)")->needs(group);
  cmd->add_option("--function", flags.function, "table text b_0,...,b_{k-1} or @file")->needs(group);
  if (!allowField) return;
  auto* e = cmd->add_option("--field-e", flags.fieldE, "use GF(2^e) tables")->excludes(group);
  cmd->add_option("--alpha", flags.alpha, "gold exponent x^(2^alpha+1)")->needs(e);
  cmd->add_flag("--inverse", flags.inverse, "use x^(2^e-2)")->needs(e);
}

void addOutput(CLI::App* cmd, Flags& flags) {
  cmd->add_flag("--json", flags.json, "machine-readable output");
  cmd->add_option("--out", flags.out, "write output to a file instead of stdout");
}

std::string readFunctionText(const std::string& spec) {
  if (spec.empty() || spec.front() != '@') return spec;
  std::ifstream in(spec.substr(1));
  if (!in) throw UsageError("--function: cannot read file '" + spec.substr(1) + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FuncTable resolveFunction(const Flags& flags) {
  if (flags.fieldE) {
    if (flags.inverse && flags.alpha) throw UsageError("--alpha and --inverse are mutually exclusive");
    if (flags.inverse) return inverseTable(*flags.fieldE);
    if (!flags.alpha) throw UsageError("--field-e needs --alpha or --inverse");
    return goldTable(*flags.fieldE, *flags.alpha);
  }
  if (flags.group.empty()) throw UsageError("--group and --function (or --field-e) are required");
  if (flags.function.empty()) throw UsageError("--function is required with --group");
  Group g = Group::parse(flags.group);
  Group h = flags.codomain.empty() ? g : Group::parse(flags.codomain);
  try {
    return parseTable(readFunctionText(flags.function), g, h);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--function: ") + e.what());
  }
}

std::string joined(const ElementSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out.empty() ? "-" : out;
}

int doCheck(const Flags& flags, std::ostream& out) {
  FuncTable f = resolveFunction(flags);
  auto verdict = isSemiPlanar(f);
  if (flags.json) {
    out << toJson(verdict, f).dump(2) << '\n';
  } else if (verdict.isSemiPlanar) {
    out << "semi-planar over " << f.domain().name() << '\n';
  } else {
    out << "not semi-planar: a=" << verdict.witness->a << " y=" << verdict.witness->y
        << " count=" << verdict.witness->count << '\n';
  }
  return verdict.isSemiPlanar ? kExitOk : kExitNegative;
}

int doBuild(const Flags& flags, std::ostream& out) {
  FuncTable f = resolveFunction(flags);
  const bool semiPlanar = isSemiPlanar(f).isSemiPlanar;
  Structure s(f);
  auto report = verifyAxioms(s, flags.workers);
  if (flags.json) {
    out << toJson(report).dump(2) << '\n';
  } else {
    out << "v=" << report.v << " k=" << report.k << " components=" << report.components << '\n';
    if (report.isSemiBiplane) {
      out << "sbp(" << report.v << "," << report.k << "), connected\n";
    } else if (report.failure) {
      out << "not a semi-biplane: " << (report.failure->kind == PairFailure::Kind::Points ? "points " : "lines ")
          << report.failure->first << " and " << report.failure->second << " share " << report.failure->count << '\n';
    } else {
      out << report.components << " components";
      if (report.components == 2) out << ", each sbp(" << report.v / 2 << "," << report.k << ")";
      out << '\n';
    }
  }
  return semiPlanar ? kExitOk : kExitNegative;
}

int doClassify(const Flags& flags, std::ostream& out, std::ostream& err) {
  FuncTable f = resolveFunction(flags);
  if (!isSemiPlanar(f).isSemiPlanar) {
    err << "function is not semi-planar\n";
    return kExitNegative;
  }
  Structure s(f);
  auto report = classifySplit(s, components(s), f);
  if (flags.json) {
    out << toJson(report).dump(2) << '\n';
  } else {
    out << "kind: " << to_string(report.kind) << "\nB: " << joined(report.B) << "\nA: " << joined(report.A)
        << "\ng: " << (report.g ? std::to_string(*report.g) : "-") << "\nh: "
        << (report.h ? std::to_string(*report.h) : "-") << '\n';
  }
  return kExitOk;
}

int doSearch(const Flags& flags, std::ostream& out) {
  if (flags.group.empty()) throw UsageError("--group is required");
  Group g = Group::parse(flags.group);
  Group h = flags.codomain.empty() ? g : Group::parse(flags.codomain);
  SearchOptions opts;
  opts.fixZeroAtZero = !flags.noNormalize;
  opts.usePruning = !flags.noPrune;
  opts.useFiberLimit = !flags.noFiberLimit;
  opts.maxResults = flags.maxResults;
  opts.workers = flags.workers;
  opts.allowLarge = flags.allowLarge;
  auto result = exhaustiveSearch(g, h, opts);

  std::vector<FuncTable> listed = result.found;
  if (flags.orbits) listed = orbitReduce(result.found, g, h);
  std::vector<std::string> kinds;
  if (flags.classify) {
    for (const auto& f : listed) {
      Structure s(f);
      kinds.emplace_back(to_string(classifySplit(s, components(s), f).kind));
    }
  }

  if (flags.json) {
    auto doc = toJson(result, g, opts.fixZeroAtZero, !flags.noTiming);
    if (flags.orbits) {
      auto reps = ordered_json::array();
      for (const auto& f : listed) reps.push_back(formatTable(f));
      doc["orbits"] = std::move(reps);
    }
    if (flags.classify) doc["kinds"] = kinds;
    out << doc.dump(2) << '\n';
  } else {
    out << "group " << g.name() << (opts.fixZeroAtZero ? " (f(0)=0)" : "") << ": visited "
        << result.totalCandidatesVisited << ", found " << result.count << '\n';
    for (std::size_t i = 0; i < listed.size(); ++i) {
      out << formatTable(listed[i]);
      if (flags.classify) out << ' ' << kinds[i];
      out << '\n';
    }
  }
  return kExitOk;
}

int doVerifyPaper(const Flags& flags, std::ostream& out) {
  VerifyOptions opts;
  opts.workers = std::max(2, flags.workers);
  opts.includeE5 = !flags.skipE5;
  opts.injectFault = flags.injectFault;
  auto checks = verifyPaperResults(opts);
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (flags.json) {
    out << toJson(checks).dump(2) << '\n';
  } else {
    for (const auto& c : checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.title << " -- " << c.detail << '\n';
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kExitOk : kExitNegative;
}

int doExportDot(const Flags& flags, std::ostream& out) {
  Structure s(resolveFunction(flags));
  if (flags.colorComponents) {
    auto partition = components(s);
    out << exportDot(s, &partition);
  } else {
    out << exportDot(s);
  }
  return kExitOk;
}

int doTable(const Flags& flags, bool inverse, std::ostream& out) {
  if (!flags.fieldE) throw UsageError("--field-e is required");
  if (!inverse && !flags.alpha) throw UsageError("--alpha is required");
  FuncTable f = inverse ? inverseTable(*flags.fieldE) : goldTable(*flags.fieldE, *flags.alpha);
  out << formatTable(f) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-biplanes from semi-planar functions"};
  app.require_subcommand(1);
  Flags flags;

  auto* check = app.add_subcommand("check", "test a table for semi-planarity");
  addSource(check, flags, false);
  addOutput(check, flags);

  auto* build = app.add_subcommand("build", "build S(G,H;f) and verify the semi-biplane axioms");
  addSource(build, flags, true);
  addOutput(build, flags);
  build->add_option("--workers", flags.workers, "parallel workers")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "classify a split structure");
  addSource(classify, flags, true);
  addOutput(classify, flags);

  auto* search = app.add_subcommand("search", "exhaustive search for semi-planar functions");
  search->add_option("--group", flags.group, "group, e.g. 6 or 2x2")->required();
  search->add_option("--codomain", flags.codomain, "codomain group (defaults to --group)");
  search->add_flag("--no-normalize", flags.noNormalize, "do not fix f(0)=0");
  search->add_flag("--no-prune", flags.noPrune, "disable difference-count pruning");
  search->add_flag("--no-fiber-limit", flags.noFiberLimit, "disable fiber-limit pruning");
  search->add_option("--max-results", flags.maxResults, "truncate the listed results")->check(CLI::NonNegativeNumber);
  search->add_option("--workers", flags.workers, "parallel workers")->check(CLI::PositiveNumber);
  search->add_flag("--allow-large", flags.allowLarge, "lift the order-8 search budget");
  search->add_flag("--classify", flags.classify, "classify every listed table");
  search->add_flag("--orbits", flags.orbits, "list one representative per equivalence class");
  search->add_flag("--no-timing", flags.noTiming, "write elapsed_ms as 0");
  addOutput(search, flags);

  auto* verify = app.add_subcommand("verify-paper", "run every structural check");
  verify->add_option("--workers", flags.workers, "worker count for the determinism check")->check(CLI::PositiveNumber);
  verify->add_flag("--skip-e5", flags.skipE5, "skip the GF(32) construction");
  verify->add_flag("--inject-fault", flags.injectFault)->group("");
  addOutput(verify, flags);

  auto* dot = app.add_subcommand("export-dot", "write the incidence graph in DOT format");
  addSource(dot, flags, true);
  dot->add_flag("--components", flags.colorComponents, "color by component");
  dot->add_option("--out", flags.out, "write output to a file instead of stdout");

  auto* gold = app.add_subcommand("gold", "print the table of x^(2^alpha+1) over GF(2^e)");
  gold->add_option("--field-e", flags.fieldE)->required();
  gold->add_option("--alpha", flags.alpha)->required();
  gold->add_option("--out", flags.out, "write output to a file instead of stdout");

  auto* inverse = app.add_subcommand("inverse", "print the table of x^(2^e-2) over GF(2^e)");
  inverse->add_option("--field-e", flags.fieldE)->required();
  inverse->add_option("--out", flags.out, "write output to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*check) status = doCheck(flags, buffer);
    else if (*build) status = doBuild(flags, buffer);
    else if (*classify) status = doClassify(flags, buffer, err);
    else if (*search) status = doSearch(flags, buffer);
    else if (*verify) status = doVerifyPaper(flags, buffer);
    else if (*dot) status = doExportDot(flags, buffer);
    else if (*gold) status = doTable(flags, false, buffer);
    else if (*inverse) status = doTable(flags, true, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidGroup ||
                       e.kind() == ErrorKind::InvalidParameter || e.kind() == ErrorKind::UnsupportedDegree ||
                       e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::SearchBudget ||
                       e.kind() == ErrorKind::UnsupportedGroup;
    return usage ? kExitUsage : kExitNegative;
  }

  if (flags.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) {
      err << "usage error: --out: cannot write '" << flags.out << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace sbp::cli
