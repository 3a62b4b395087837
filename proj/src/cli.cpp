#include "pbm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <climits>
#include <fstream>
#include <iostream>

#include "pbm/asmkit.hpp"
#include "pbm/decompose.hpp"
#include "pbm/feasibility.hpp"
#include "pbm/json_io.hpp"
#include "pbm/oracle.hpp"
#include "pbm/segments.hpp"
#include "pbm/strong_pair.hpp"

namespace pbm::cli {

namespace {

namespace pj = pbm::json;
using json = nlohmann::json;

struct Options {
  std::string file;
  std::string costs;
  std::string subset;
  std::string subset2;
  std::string compatible;
  std::string dot;
  bool max = false;
  bool min = false;
  bool oracle = false;
  bool max_plus = false;
  bool condition = false;
  int k = 1;
  int order = 0;
  unsigned long long seed = 0;  // accepted for reproducibility; every solver is deterministic
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

// Inline JSON when the argument starts with '[' or '{', a file otherwise.
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    try {
      return json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  return read_json_file(arg);
}

// A document that is either the bare value or an object holding it under `key`.
const json& unwrap(const json& doc, const char* key) {
  if (doc.is_object()) {
    if (!doc.contains(key)) throw Error(ErrorCode::kParse, std::string("missing key \"") + key + "\"");
    return doc.at(key);
  }
  return doc;
}

json certificate_json(const Certificate& c) {
  return {{"X1", pj::to_json(c.x1)},
          {"X2", pj::to_json(c.x2)},
          {"case", c.case_id},
          {"violated", std::string(inequality_id(c.value.which))},
          {"lhs", pj::to_json(c.value.lhs)},
          {"rhs", pj::to_json(c.value.rhs)}};
}

json segments_json(const std::vector<Segment>& segs) {
  json out = json::array();
  for (const Segment& s : segs) out.push_back({{"line", s.line}, {"start", s.start}, {"end", s.end}});
  return out;
}

json family_json(const SegmentFamily& f) {
  return {{"horizontal", segments_json(f.horizontal)},
          {"vertical", segments_json(f.vertical)},
          {"size", f.size},
          {"n", f.n},
          {"minus_one_uncovered", f.minus_one_uncovered},
          {"plus_one_doubled", f.plus_one_doubled}};
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int check(bool with_matrix) {
    const PbmInstance inst = pj::instance_from_json(read_json_file(opt_.file));
    dump_dot(inst);
    const FeasibilityResult r = solve(inst);
    json doc;
    set_diagnostics(doc, r.diagnostics);
    if (r.feasible()) {
      doc["status"] = "feasible";
      if (with_matrix) doc["matrix"] = pj::to_json(*r.matrix);
      err_ << "feasible\n";
    } else {
      doc["status"] = "infeasible";
      doc["certificate"] = certificate_json(*r.certificate);
      err_ << "infeasible: " << inequality_id(r.certificate->value.which) << " violated, "
           << r.certificate->value.lhs << " > " << r.certificate->value.rhs << "\n";
    }
    bool agrees = true;
    if (opt_.oracle) {
      const auto all = oracle::enumerate_pbms(inst);
      agrees = r.feasible() ? std::binary_search(all.begin(), all.end(), *r.matrix) : all.empty();
      doc["oracle"] = {{"count", all.size()}, {"agrees", agrees}};
      if (!agrees) err_ << "oracle disagrees: " << all.size() << " feasible matrices\n";
    }
    emit(doc);
    if (!agrees) return kExitUsage;
    return r.feasible() ? kExitOk : kExitInfeasible;
  }

  int sum() {
    if (opt_.max == opt_.min) throw CLI::ValidationError("sum needs exactly one of --max, --min");
    const PbmInstance inst = pj::instance_from_json(read_json_file(opt_.file));
    dump_dot(inst);
    const Direction d = opt_.max ? Direction::kMax : Direction::kMin;
    const OptimumResult r = extremal_total_sum(inst, d);
    json doc;
    set_diagnostics(doc, r.diagnostics);
    doc["direction"] = opt_.max ? "max" : "min";
    const int code = optimum(doc, r, "value");
    if (opt_.oracle && r.status != OptStatus::kUnbounded) {
      PbmInstance open = inst;
      open.alpha = ExtInt::neg_inf();
      open.beta = ExtInt::pos_inf();
      const auto all = oracle::enumerate_pbms(open);
      bool agrees = all.empty() == (r.status == OptStatus::kInfeasible);
      if (agrees && !all.empty()) {
        long long best = opt_.max ? LLONG_MIN : LLONG_MAX;
        for (const IntMatrix& a : all) {
          long long s = 0;
          for (long long v : a.data()) s += v;
          best = opt_.max ? std::max(best, s) : std::min(best, s);
        }
        agrees = best == r.value;
      }
      doc["oracle"] = {{"count", all.size()}, {"agrees", agrees}};
      if (!agrees) {
        emit(doc);
        return kExitUsage;
      }
    }
    emit(doc);
    return code;
  }

  int cost() {
    const PbmInstance inst = pj::instance_from_json(read_json_file(opt_.file));
    dump_dot(inst);
    const IntMatrix c = pj::int_matrix_from_json(unwrap(read_json_file(opt_.costs), "costs"));
    const OptimumResult r = min_cost(inst, c);
    json doc;
    set_diagnostics(doc, r.diagnostics);
    const int code = optimum(doc, r, "cost");
    emit(doc);
    return code;
  }

  int decompose_cmd() {
    const json in = read_json_file(opt_.file);
    json doc;
    json parts = json::array();
    if (in.is_object() && in.contains("m")) {
      const PbmInstance inst = pj::instance_from_json(in);
      const IntMatrix a = pj::int_matrix_from_json(unwrap(in, "matrix"));
      for (const DecompositionPart& p : decompose(inst, a, opt_.k).parts) {
        parts.push_back({{"matrix", pj::to_json(p.matrix)}, {"multiplicity", p.multiplicity}});
      }
    } else {
      const IntMatrix a = pj::int_matrix_from_json(unwrap(in, "matrix"));
      for (const IntMatrix& p : decompose_k_regular_asm(a, opt_.k)) {
        parts.push_back({{"matrix", pj::to_json(p)}, {"multiplicity", 1}});
      }
    }
    doc["status"] = "feasible";
    doc["k"] = opt_.k;
    doc["parts"] = parts;
    set_diagnostics(doc, {});
    err_ << "decomposed into " << parts.size() << " distinct parts\n";
    emit(doc);
    return kExitOk;
  }

  int asm_cmd() {
    if (opt_.compatible.empty() == (opt_.order == 0)) {
      throw CLI::ValidationError("asm needs exactly one of --compatible, --order");
    }
    if (opt_.order != 0) {
      const FeasibilityResult r = solve(make_asm(opt_.order));
      json doc;
      set_diagnostics(doc, r.diagnostics);
      doc["status"] = "feasible";
      doc["matrix"] = pj::to_json(*r.matrix);
      err_ << "ASM of order " << opt_.order << "\n";
      emit(doc);
      return kExitOk;
    }
    const json codes = unwrap(read_json_arg(opt_.compatible), "partition");
    if (!codes.is_array() || codes.empty() || !codes[0].is_array()) {
      throw Error(ErrorCode::kParse, "partition must be an array of rows of codes");
    }
    const int n = static_cast<int>(codes.size());
    SPartition part(n, static_cast<int>(codes[0].size()));
    for (int i = 1; i <= n; ++i) {
      if (!codes[i - 1].is_array() || static_cast<int>(codes[i - 1].size()) != part.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "ragged partition at row " + std::to_string(i));
      }
      for (int j = 1; j <= part.cols(); ++j) {
        const json& c = codes[i - 1][j - 1];
        part(i, j) = part_class_from_code(c.is_string() ? c.get<std::string>() : c.dump());
      }
    }
    return asm_result(compatible_asm(part));
  }

  int subordinate() {
    const IntMatrix x = pj::int_matrix_from_json(unwrap(read_json_file(opt_.file), "matrix"));
    if (!opt_.max_plus) return asm_result(subordinate_asm(x));
    const auto best = max_plus_ones_subordinate(x);
    json doc;
    set_diagnostics(doc, {});
    if (!best) {
      doc["status"] = "infeasible";
      err_ << "no subordinate ASM\n";
      emit(doc);
      return kExitInfeasible;
    }
    doc["status"] = "feasible";
    doc["matrix"] = pj::to_json(best->matrix);
    doc["plus_ones"] = best->count;
    err_ << "subordinate ASM with " << best->count << " entries equal to +1\n";
    emit(doc);
    return kExitOk;
  }

  int wasm() {
    const json in = read_json_file(opt_.file);
    auto patterns = [&](const char* key) {
      std::vector<WingPattern> out;
      for (const auto& s : unwrap(in, key)) out.push_back(wing_from_string(s.get<std::string>()));
      return out;
    };
    const PbmInstance inst = wasm_instance(patterns("rows"), patterns("cols"));
    dump_dot(inst);
    const FeasibilityResult r = solve(inst);
    json doc;
    set_diagnostics(doc, r.diagnostics);
    if (r.feasible()) {
      doc["status"] = "feasible";
      doc["matrix"] = pj::to_json(*r.matrix);
      err_ << "WASM found\n";
      emit(doc);
      return kExitOk;
    }
    doc["status"] = "infeasible";
    doc["certificate"] = certificate_json(*r.certificate);
    err_ << "no WASM with these wing signs\n";
    emit(doc);
    return kExitInfeasible;
  }

  int eval() {
    const PbmInstance inst = pj::instance_from_json(read_json_file(opt_.file));
    const SubsetMask x = pj::mask_from_json(unwrap(read_json_arg(opt_.subset), "mask"));
    const StrongPairEval e = eval_strong_pair(inst, x);
    const SegmentStats st = segment_stats(x);
    json doc = {{"status", "feasible"},
                {"p1", pj::to_json(e.p1)},
                {"b1", pj::to_json(e.b1)},
                {"p2", pj::to_json(e.p2)},
                {"b2", pj::to_json(e.b2)}};
    for (int o = 0; o < 2; ++o) {
      const std::string s = std::to_string(o + 1);
      doc["segments"]["sigma" + s] = st.sigma[o];
      doc["segments"]["se" + s] = st.interior[o];
      doc["segments"]["pr" + s] = st.prefix[o];
      doc["segments"]["su" + s] = st.suffix[o];
      doc["segments"]["fu" + s] = st.full[o];
    }
    if (!opt_.subset2.empty()) {
      const SubsetMask x2 = pj::mask_from_json(unwrap(read_json_arg(opt_.subset2), "mask"));
      const ConditionReport rep = check_condition(inst, x, x2);
      for (Inequality q : kAllInequalities) {
        doc["inequalities"][std::string(inequality_id(q))] = {
            {"lhs", pj::to_json(rep[q].lhs)},
            {"rhs", pj::to_json(rep[q].rhs)},
            {"holds", rep[q].holds()}};
      }
    }
    err_ << "p1=" << e.p1 << " b1=" << e.b1 << " p2=" << e.p2 << " b2=" << e.b2 << "\n";
    emit(doc);
    return kExitOk;
  }

  int oracle_cmd() {
    const PbmInstance inst = pj::instance_from_json(read_json_file(opt_.file));
    json doc;
    if (opt_.condition) {
      const oracle::ConditionScan scan = oracle::brute_force_condition(inst, 200000, opt_.seed);
      doc["status"] = scan.all_hold() ? "feasible" : "infeasible";
      doc["exhaustive"] = scan.exhaustive;
      for (Inequality q : kAllInequalities) {
        const oracle::WorstPair& w = scan.worst[static_cast<std::size_t>(q)];
        doc["worst"][std::string(inequality_id(q))] = {{"X1", pj::to_json(w.x1)},
                                                      {"X2", pj::to_json(w.x2)},
                                                      {"lhs", pj::to_json(w.lhs)},
                                                      {"rhs", pj::to_json(w.rhs)},
                                                      {"slack", pj::to_json(w.slack)}};
      }
      emit(doc);
      return scan.all_hold() ? kExitOk : kExitInfeasible;
    }
    const auto all = oracle::enumerate_pbms(inst);
    doc["status"] = all.empty() ? "infeasible" : "feasible";
    doc["count"] = all.size();
    doc["matrices"] = json::array();
    for (const IntMatrix& a : all) doc["matrices"].push_back(pj::to_json(a));
    err_ << all.size() << " feasible matrices\n";
    emit(doc);
    return all.empty() ? kExitInfeasible : kExitOk;
  }

 private:
  int optimum(json& doc, const OptimumResult& r, const char* key) {
    switch (r.status) {
      case OptStatus::kOptimal:
        doc["status"] = "feasible";
        doc[key] = r.value;
        doc["matrix"] = pj::to_json(*r.matrix);
        err_ << "optimal " << key << " " << r.value << "\n";
        return kExitOk;
      case OptStatus::kUnbounded:
        doc["status"] = "unbounded";
        err_ << "unbounded\n";
        return kExitUnbounded;
      case OptStatus::kInfeasible:
        doc["status"] = "infeasible";
        doc["certificate"] = certificate_json(*r.certificate);
        err_ << "infeasible\n";
        return kExitInfeasible;
    }
    return kExitUsage;
  }

  int asm_result(const AsmResult& r) {
    json doc;
    set_diagnostics(doc, r.result.diagnostics);
    if (r.result.feasible()) {
      doc["status"] = "feasible";
      doc["matrix"] = pj::to_json(*r.result.matrix);
      err_ << "ASM found\n";
      emit(doc);
      return kExitOk;
    }
    doc["status"] = "infeasible";
    doc["certificate"] = certificate_json(*r.result.certificate);
    doc["family"] = family_json(*r.family);
    err_ << "infeasible: " << r.family->size << " separated segments certify it\n";
    emit(doc);
    return kExitInfeasible;
  }

  void dump_dot(const PbmInstance& inst) const {
    if (opt_.dot.empty()) return;
    std::ofstream f(opt_.dot);
    if (!f) throw Error(ErrorCode::kParse, "cannot write " + opt_.dot);
    f << Network::build(inst).to_dot();
  }

  void set_diagnostics(json& doc, const SolveDiagnostics& d) const {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    doc["diagnostics"] = {
        {"arcs", d.arcs},
        {"augmentations", d.augmentations},
        {"wall_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }

  void emit(const json& doc) const { out_ << doc.dump(2) << "\n"; }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Prefix-bounded matrix solver", "pbm"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "Seed for randomized choices (default 0)");
  app.add_option("--dump-dot", opt.dot, "Write the circulation network in DOT format");
  app.add_flag("--oracle", opt.oracle, "Cross-check the answer by exhaustive enumeration");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Input JSON document")->required();
  };
  CLI::App* check = app.add_subcommand("check", "Decide feasibility");
  file_arg(check);
  CLI::App* solve_sub = app.add_subcommand("solve", "Find a matrix or a certificate");
  file_arg(solve_sub);
  CLI::App* sum = app.add_subcommand("sum", "Maximise or minimise the total sum");
  file_arg(sum);
  sum->add_flag("--max", opt.max);
  sum->add_flag("--min", opt.min);
  CLI::App* cost = app.add_subcommand("cost", "Minimise a linear cost over feasible matrices");
  file_arg(cost);
  cost->add_option("--costs", opt.costs, "Cost matrix JSON")->required();
  CLI::App* dec = app.add_subcommand("decompose", "Sign-consistent decomposition into k parts");
  file_arg(dec);
  dec->add_option("-k", opt.k, "Number of parts")->required()->check(CLI::PositiveNumber);
  CLI::App* asm_sub = app.add_subcommand("asm", "Find an ASM, optionally S-compatible");
  asm_sub->add_option("--compatible", opt.compatible, "Partition JSON (file or inline)");
  asm_sub->add_option("--order", opt.order, "Order of an unconstrained ASM")
      ->check(CLI::PositiveNumber);
  CLI::App* sub = app.add_subcommand("subordinate", "Find a subordinate ASM");
  file_arg(sub);
  sub->add_flag("--max-plus", opt.max_plus, "Maximise the number of +1 entries");
  CLI::App* wasm_sub = app.add_subcommand("wasm", "Find a WASM with given wing signs");
  file_arg(wasm_sub);
  CLI::App* eval = app.add_subcommand("eval", "Evaluate strong pairs on a subset");
  file_arg(eval);
  eval->add_option("--subset", opt.subset, "Subset mask JSON (file or inline)")->required();
  eval->add_option("--subset2", opt.subset2, "Second mask; evaluates the four inequalities");
  CLI::App* orc = app.add_subcommand("oracle", "Exhaustive enumeration (development)");
  orc->group("");
  file_arg(orc);
  orc->add_flag("--condition", opt.condition, "Scan all subset pairs instead");

  std::vector<const char*> argv{"pbm"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (check->parsed()) return runner.check(false);
    if (solve_sub->parsed()) return runner.check(true);
    if (sum->parsed()) return runner.sum();
    if (cost->parsed()) return runner.cost();
    if (dec->parsed()) return runner.decompose_cmd();
    if (asm_sub->parsed()) return runner.asm_cmd();
    if (sub->parsed()) return runner.subordinate();
    if (wasm_sub->parsed()) return runner.wasm();
    if (eval->parsed()) return runner.eval();
    if (orc->parsed()) return runner.oracle_cmd();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    const nlohmann::json doc = {{"status", "error"},
                                {"error", std::string(to_string(e.code()))},
                                {"message", e.what()}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    const nlohmann::json doc = {{"status", "error"}, {"error", std::string(to_string(ErrorCode::kParse))}, {"message", e.what()}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pbm::cli
