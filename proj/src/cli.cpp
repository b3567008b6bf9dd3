#include "setramsey/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "setramsey/chains.hpp"
#include "setramsey/constructions.hpp"
#include "setramsey/core.hpp"
#include "setramsey/embed.hpp"
#include "setramsey/extremal.hpp"
#include "setramsey/patterns.hpp"
#include "setramsey/ramsey.hpp"
#include "setramsey/reduction.hpp"

namespace setramsey {

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;

SetFamily load_family(const std::string& path) {
  if (path == "-") return parse_family(std::cin);
  std::ifstream in(path);
  if (!in) throw FamilyError("cannot open family file '" + path + "'");
  return parse_family(in);
}

PatternMatrix load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FamilyError("cannot open pattern file '" + path + "'");
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  return PatternMatrix::from_rows(rows);
}

std::vector<std::string> family_lines(const SetFamily& f) {
  std::vector<std::string> lines;
  lines.reserve(f.size());
  for (int i = 1; i <= f.size(); ++i) lines.push_back(f.incidence_row(i));
  return lines;
}

json embedding_json(const std::string& name, const Embedding& e) {
  return json{{"pattern", name}, {"rows", e.row_map}, {"cols", e.col_map}};
}

int resolve_threads(int flag_value) {
  // The environment variable wins over the flag.
  if (const char* env = std::getenv("SETRAMSEY_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  if (flag_value >= 1) return flag_value;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int cmd_find_pattern(const std::string& family_path,
                     const std::string& pattern_spec,
                     const std::string& pattern_file, bool count_mode,
                     std::ostream& out) {
  const SetFamily f = load_family(family_path);
  PatternMatrix p = pattern_file.empty()
                        ? generate(parse_pattern_spec(pattern_spec))
                        : load_pattern_file(pattern_file);
  const std::string name =
      pattern_file.empty() ? pattern_spec : std::string("custom");
  if (count_mode) {
    const std::uint64_t n = count_embeddings(f, p);
    emit(out, json{{"pattern", name}, {"count", n}});
    return n > 0 ? kExitFound : kExitNotFound;
  }
  if (auto e = find_embedding(f, p)) {
    emit(out, embedding_json(name, *e));
    return kExitFound;
  }
  emit(out, json{{"pattern", name}, {"found", false}});
  return kExitNotFound;
}

int cmd_lemma1(const std::string& family_path, int k, int l,
               std::ostream& out) {
  const SetFamily f = load_family(family_path);
  const ChainWitness w = extract_chain(f, k, l);
  emit(out, json{{"direction", w.direction == ChainDirection::Increasing
                                   ? "increasing"
                                   : "decreasing"},
                 {"order", w.order},
                 {"indices", w.indices}});
  return kExitFound;
}

int cmd_theorem3(const std::string& family_path, int k, int l,
                 std::ostream& out) {
  const SetFamily f = load_family(family_path);
  const TaggedEmbedding t = theorem3_pipeline(f, k, l);
  json j = embedding_json(to_spec(t.kind), t.embedding);
  if (!t.notes.empty()) j["notes"] = t.notes;
  emit(out, j);
  return kExitFound;
}

int cmd_theorem4(const std::string& family_path, int k, int l,
                 std::ostream& out) {
  const SetFamily f = load_family(family_path);
  const Theorem4Witness w = theorem4_witness(f, k, l);
  json j{{"condition", w.condition}};
  if (w.condition == 3) {
    j["j"] = w.j;
    j["i"] = w.i;
  } else {
    const PatternKind kind = w.condition == 1
                                 ? PatternKind{PatternKind::Kind::Singleton, k + 1}
                                 : PatternKind{PatternKind::Kind::CoSingleton, l + 1};
    j["pattern"] = to_spec(kind);
    j["rows"] = w.embedding.row_map;
    j["cols"] = w.embedding.col_map;
  }
  emit(out, j);
  return kExitFound;
}

int cmd_reduce(const std::string& family_path, bool trace, bool json_mode,
               std::ostream& out) {
  const SetFamily f = load_family(family_path);
  const ReduceResult r = reduce(f);
  if (trace || json_mode) {
    json j{{"family", family_lines(r.family)},
           {"deleted", r.deleted},
           {"kept", r.kept}};
    emit(out, j);
  } else {
    out << render_family(r.family);
  }
  return kExitFound;
}

int cmd_construct(const std::vector<std::string>& what, bool verify,
                  bool json_mode, std::ostream& out) {
  if (what.empty()) throw std::invalid_argument("construct needs a name");
  NamedConstruction c;
  if (what[0] == "F") {
    c = construct_F();
  } else if (what[0] == "choose") {
    if (what.size() != 3) {
      throw std::invalid_argument("usage: construct choose N L");
    }
    c = construct_choose(std::stoi(what[1]), std::stoi(what[2]));
  } else if (what[0] == "prop2") {
    if (what.size() != 2) {
      throw std::invalid_argument("usage: construct prop2 L");
    }
    c = construct_prop2(std::stoi(what[1]));
  } else {
    throw std::invalid_argument("unknown construction '" + what[0] + "'");
  }

  if (!verify && !json_mode) {
    out << render_family(c.family);
    return kExitFound;
  }

  json j{{"name", c.name},
         {"size", c.family.size()},
         {"family", family_lines(c.family)}};
  int code = kExitFound;
  if (verify) {
    const VerificationReport rep = verify_construction(c);
    json claims = json::array();
    for (const auto& cl : rep.claims) {
      claims.push_back(json{{"claim", cl.what}, {"pass", cl.pass}});
    }
    j["claims"] = claims;
    j["all_pass"] = rep.all_pass;
    if (!rep.all_pass) code = kExitInternal;
  }
  emit(out, j);
  return code;
}

int cmd_search(int k, int l, std::uint64_t budget, int threads, int cap,
               const std::string& witness_path, std::ostream& out) {
  SearchOptions opt;
  opt.budget_nodes = budget;
  opt.threads = threads;
  opt.universe_cap = cap;
  const ExtremalResult r = search_S({k, l}, opt);

  json j{{"nodes", r.nodes},
         {"canonical_rejects", r.canonical_rejects},
         {"universe_cap", r.universe_cap},
         {"exhausted", r.exhausted}};
  if (r.exhausted) {
    j["value"] = r.lower;
  } else {
    j["bracket"] = json::array({r.lower, r.upper});
  }
  j["witness"] = r.witness ? family_lines(*r.witness)
                           : std::vector<std::string>{};
  emit(out, j);

  if (r.witness && !witness_path.empty()) {
    std::ofstream wf(witness_path);
    if (!wf) throw FamilyError("cannot write witness to '" + witness_path + "'");
    wf << render_family(*r.witness);
  }
  return r.exhausted ? kExitFound : kExitNotFound;
}

int cmd_ramsey_verify(int r, int threads, std::ostream& out) {
  if (r != 3) {
    throw std::invalid_argument("only --r 3 is verifiable in-process");
  }
  const R3Verification v = verify_r3(threads);
  emit(out, json{{"check", "ramsey-r3"},
                 {"r", 3},
                 {"k6_colorings", v.k6_colorings},
                 {"k6_all_have_triangle", v.k6_all_have_triangle},
                 {"k5_pentagon_has_triangle", v.k5_pentagon_has_triangle},
                 {"verified", v.certifies_r3}});
  return v.certifies_r3 ? kExitFound : kExitInternal;
}

int cmd_verify(const std::string& what, int k, int l, int cap,
               std::ostream& out) {
  if (what == "lemma94") {
    const bool pass = lemma94_exhaustive();
    emit(out, json{{"check", "lemma94"}, {"families", 11440}, {"pass", pass}});
    return pass ? kExitFound : kExitInternal;
  }
  if (what == "theorem4") {
    const bool pass = theorem4_exhaustive(k, l);
    emit(out, json{{"check", "theorem4"}, {"k", k}, {"l", l}, {"pass", pass}});
    return pass ? kExitFound : kExitInternal;
  }
  if (what == "furedi-tuza") {
    const bool pass = furedi_tuza_exhaustive(k, l, cap);
    emit(out, json{{"check", "furedi-tuza"},
                   {"k", k},
                   {"l", l},
                   {"cap", cap > 0 ? cap : k + l + 2},
                   {"pass", pass}});
    return pass ? kExitFound : kExitInternal;
  }
  if (what == "skew") {
    if (cap <= 0) throw std::invalid_argument("skew needs --cap");
    const int max = skew_pairs_max(k, l, cap);
    const std::uint64_t bound = binomial(k + l, l);
    const bool pass = static_cast<std::uint64_t>(max) <= bound;
    emit(out, json{{"check", "skew"},
                   {"k", k},
                   {"l", l},
                   {"cap", cap},
                   {"max", max},
                   {"bound", bound},
                   {"pass", pass}});
    return pass ? kExitFound : kExitInternal;
  }
  throw std::invalid_argument("unknown verify target '" + what + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"forbidden incidence-pattern search in families of finite sets"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  // find-pattern
  auto* fp = app.add_subcommand("find-pattern", "look for a pattern");
  std::string fp_family = "-", fp_spec, fp_file;
  bool fp_count = false;
  fp->add_option("family,--family", fp_family, "family file or - for stdin");
  fp->add_option("--pattern", fp_spec, "pattern spec, e.g. singleton:3");
  fp->add_option("--pattern-file", fp_file, "pattern file with 0/1/? rows");
  fp->add_flag("--count", fp_count, "count all embeddings");

  // lemma1
  auto* l1 = app.add_subcommand("lemma1", "extract an increasing or "
                                          "decreasing chain");
  std::string l1_family = "-";
  int l1_k = 0, l1_l = 0;
  l1->add_option("family,--family", l1_family, "family file or -");
  l1->add_option("--k", l1_k, "increasing order target minus one")->required();
  l1->add_option("--l", l1_l, "decreasing order target minus one")->required();

  // theorem3
  auto* t3 = app.add_subcommand("theorem3", "singleton/cosingleton/monotone "
                                            "pipeline");
  std::string t3_family = "-";
  int t3_k = 0, t3_l = 0;
  t3->add_option("family,--family", t3_family, "family file or -");
  t3->add_option("--k", t3_k, "singleton order minus one")->required();
  t3->add_option("--l", t3_l, "cosingleton order minus one")->required();

  // theorem4
  auto* t4 = app.add_subcommand("theorem4", "three-condition witness for "
                                            "subsets of [k+l]");
  std::string t4_family = "-";
  int t4_k = 0, t4_l = 0;
  t4->add_option("family,--family", t4_family, "family file or -");
  t4->add_option("--k", t4_k, "")->required();
  t4->add_option("--l", t4_l, "")->required();

  // reduce
  auto* rd = app.add_subcommand("reduce", "delete useless elements");
  std::string rd_family = "-";
  bool rd_trace = false;
  rd->add_option("family,--family", rd_family, "family file or -");
  rd->add_flag("--trace", rd_trace, "report deleted element ids");

  // construct
  auto* ct = app.add_subcommand("construct", "emit a named witness family");
  std::vector<std::string> ct_what;
  bool ct_verify = false;
  ct->add_option("what", ct_what, "F | choose N L | prop2 L");
  ct->add_flag("--verify", ct_verify, "recheck size and avoidance claims");

  // search
  auto* se = app.add_subcommand("search", "exact S(k,l) by exhaustive "
                                          "canonical search");
  int se_k = 0, se_l = 0, se_threads = 0, se_cap = 0;
  std::uint64_t se_budget = SearchOptions{}.budget_nodes;
  std::string se_witness;
  se->add_option("--k", se_k, "")->required();
  se->add_option("--l", se_l, "")->required();
  se->add_option("--budget-nodes", se_budget, "node budget before bracketing");
  se->add_option("--threads", se_threads, "worker threads");
  se->add_option("--universe-cap", se_cap, "fixed universe cap (0 = auto)");
  se->add_option("--emit-witness", se_witness, "write the witness family here");

  // verify
  auto* vf = app.add_subcommand("verify", "run an exhaustive oracle");
  std::string vf_what;
  int vf_k = 0, vf_l = 0, vf_cap = 0;
  vf->add_option("what", vf_what, "lemma94 | theorem4 | furedi-tuza | skew")
      ->required();
  vf->add_option("--k", vf_k, "");
  vf->add_option("--l", vf_l, "");
  vf->add_option("--cap", vf_cap, "universe cap where applicable");

  // ramsey-verify
  auto* rv = app.add_subcommand("ramsey-verify", "exhaust the K6/K5 colorings");
  int rv_r = 3, rv_threads = 0;
  rv->add_option("--r", rv_r, "Ramsey order to certify (3)");
  rv->add_option("--threads", rv_threads, "worker threads");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("setramsey");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (fp->parsed()) {
      if (fp_spec.empty() == fp_file.empty()) {
        throw std::invalid_argument(
            "give exactly one of --pattern and --pattern-file");
      }
      return cmd_find_pattern(fp_family, fp_spec,
                              fp_file, fp_count, out);
    }
    if (l1->parsed()) {
      return cmd_lemma1(l1_family, l1_k, l1_l, out);
    }
    if (t3->parsed()) {
      return cmd_theorem3(t3_family, t3_k, t3_l, out);
    }
    if (t4->parsed()) {
      return cmd_theorem4(t4_family, t4_k, t4_l, out);
    }
    if (rd->parsed()) {
      return cmd_reduce(rd_family, rd_trace, json_mode,
                        out);
    }
    if (ct->parsed()) return cmd_construct(ct_what, ct_verify, json_mode, out);
    if (se->parsed()) {
      return cmd_search(se_k, se_l, se_budget, resolve_threads(se_threads),
                        se_cap, se_witness, out);
    }
    if (vf->parsed()) return cmd_verify(vf_what, vf_k, vf_l, vf_cap, out);
    if (rv->parsed()) {
      return cmd_ramsey_verify(rv_r, resolve_threads(rv_threads), out);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace setramsey
