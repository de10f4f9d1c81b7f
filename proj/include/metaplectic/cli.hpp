#pragma once

// Command dispatch for the metasplit tool.  Argument parsing lives in the
// tool; everything here takes a RunConfig and writes to the given streams so
// it can be driven from tests.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "metaplectic/blockform.hpp"
#include "metaplectic/cocycle.hpp"
#include "metaplectic/cosets.hpp"
#include "metaplectic/io.hpp"
#include "metaplectic/sl3group.hpp"
#include "metaplectic/splitting.hpp"
#include "metaplectic/verify.hpp"

namespace metaplectic {

enum class Format { json, csv, text };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  return std::nullopt;
}

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;  // matrix literals or file paths; suite names
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  long bound = 0;  // 0: suite default
  std::optional<Format> format;
  std::string a1, a2;
  unsigned workers = 0;
  int max_word = 12;
};

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2 };

namespace detail {

inline std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

inline const std::string& single_input(const RunConfig& cfg, std::size_t want = 1) {
  if (cfg.inputs.size() != want) {
    throw PreconditionError(cfg.command + " expects " + std::to_string(want) +
                            " matrix argument(s)");
  }
  return cfg.inputs.front();
}

inline void emit(std::ostream& out, Format f, const nlohmann::json& j) {
  if (f == Format::json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

inline nlohmann::json describe(const Mat3& g) {
  nlohmann::json j;
  j["matrix"] = to_json(g);
  const Plucker<Int> q = plucker(g);
  j["plucker_primed"] = to_json(q);
  j["cell"] = to_string(cell_of(q));
  if (in_gamma14(g)) j["scaled"] = to_json(scaled_from_primed(q));
  return j;
}

inline nlohmann::json block_json(const BlockParams& bp) {
  auto blk = [](const Int& a, const Int& b, const Int& c, const Int& d) {
    return nlohmann::json::array({nlohmann::json::array({to_json(a), to_json(b)}),
                                  nlohmann::json::array({to_json(c), to_json(d)})});
  };
  return nlohmann::json::array({blk(bp.a1, bp.b1, bp.c1, bp.d1),
                                blk(bp.a2, bp.b2, bp.c2, bp.d2),
                                blk(bp.a3, bp.b3, bp.c3, bp.d3)});
}

inline int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.a1.empty() || cfg.a2.empty()) {
    throw PreconditionError("enumerate needs --a1 and --a2");
  }
  Int a1, a2;
  if (a1.set_str(cfg.a1, 10) != 0 || a2.set_str(cfg.a2, 10) != 0) {
    throw PreconditionError("--a1/--a2 must be integers");
  }
  const auto reps = enumerate_S(a1, a2);
  const Format f = cfg.format.value_or(Format::csv);
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CosetRep& r : reps) {
      arr.push_back({{"scaled", to_json(r.coords)},
                     {"s", split_coords(r.coords).value()}});
    }
    out << arr.dump() << "\n";
    return kSuccess;
  }
  const char sep = f == Format::csv ? ',' : ' ';
  if (f == Format::csv) out << "A1,B1,C1,A2,B2,C2,s\n";
  for (const CosetRep& r : reps) {
    const ScaledPlucker& p = r.coords;
    out << p.A1 << sep << p.B1 << sep << p.C1 << sep << p.A2 << sep << p.B2 << sep
        << p.C2 << sep << split_coords(p).value() << "\n";
  }
  return kSuccess;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> suites = cfg.inputs;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = suite_names();
  }
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.trials = cfg.trials;
  vc.bound = cfg.bound;
  vc.workers = cfg.workers;
  vc.max_word = cfg.max_word;
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const std::string& name : suites) {
    const Report r = run_suite(name, vc);
    ok = ok && r.ok();
    if (cfg.format == Format::json) {
      nlohmann::json fails = nlohmann::json::array();
      for (const Failure& f : r.failures) {
        fails.push_back({{"index", f.index}, {"witness", f.witness}});
      }
      reports.push_back({{"suite", r.suite},
                         {"cases", r.cases},
                         {"failures", fails},
                         {"elapsed_seconds", r.elapsed_seconds}});
      continue;
    }
    out << summary_line(r) << "\n";
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      out << "  #" << r.failures[i].index << ": " << r.failures[i].witness << "\n";
    }
    if (r.failures.size() > shown) {
      out << "  ... " << r.failures.size() - shown << " more\n";
    }
  }
  if (cfg.format == Format::json) out << reports.dump() << "\n";
  return ok ? kSuccess : kFailure;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.trials == 0) throw PreconditionError("--trials must be positive");
    if (cfg.bound < 0) throw PreconditionError("--bound must be >= 1");
    const Format f = cfg.format.value_or(Format::json);
    const std::string& c = cfg.command;

    if (c == "plucker") {
      detail::emit(out, f, detail::describe(parse_matrix(detail::read_input(
                               detail::single_input(cfg)))));
    } else if (c == "factor") {
      const Mat3 g = parse_matrix(detail::read_input(detail::single_input(cfg)));
      const BlockParams bp = block_factor_any(scaled_plucker(g));
      nlohmann::json j = detail::describe(g);
      j["blocks"] = detail::block_json(bp);
      j["n"] = to_json(Mat3(g * inv(block_to_matrix(bp))));
      detail::emit(out, f, j);
    } else if (c == "cocycle") {
      const std::string& first = detail::single_input(cfg, 2);
      const Mat3Q g1 = parse_matrix_q(detail::read_input(first));
      const Mat3Q g2 = parse_matrix_q(detail::read_input(cfg.inputs[1]));
      if (g1.det() != 1 || g2.det() != 1) {
        throw DomainError("cocycle arguments must have determinant 1");
      }
      detail::emit(out, f,
                   {{"g1", to_json(g1)}, {"g2", to_json(g2)},
                    {"sigma", sigma(g1, g2).value()}});
    } else if (c == "split") {
      const Mat3 g = parse_matrix(detail::read_input(detail::single_input(cfg)));
      require_gamma14(g);
      nlohmann::json j = detail::describe(g);
      j["s"] = split(g).value();
      detail::emit(out, f, j);
    } else if (c == "lift") {
      const Mat3 g = parse_matrix(detail::read_input(detail::single_input(cfg)));
      const MetaElt m = lift(g);
      detail::emit(out, f, {{"matrix", to_json(m.g)}, {"eps", m.eps.value()}});
    } else if (c == "coset-rep") {
      const Mat3 g = parse_matrix(detail::read_input(detail::single_input(cfg)));
      const auto [rep, n_right] = canonical_rep(g);
      detail::emit(out, f,
                   {{"matrix", to_json(g)},
                    {"scaled", to_json(rep.coords)},
                    {"n_right", to_json(n_right)},
                    {"s", split_coords(rep.coords).value()}});
    } else if (c == "enumerate") {
      return detail::run_enumerate(cfg, out);
    } else if (c == "verify") {
      return detail::run_verify(cfg, out);
    } else {
      throw PreconditionError("unknown command '" + c + "'");
    }
    return kSuccess;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  } catch (const MembershipError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace metaplectic
