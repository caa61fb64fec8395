#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptol/ptol.hpp"

namespace ptol::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad files, bad arguments and anything else that maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string command_name(Command c) {
  switch (c) {
    case Command::validate_poset:
      return "validate-poset";
    case Command::validate_tolerance:
      return "validate-tolerance";
    case Command::blocks:
      return "blocks";
    case Command::neighbors:
      return "neighbors";
    case Command::compose:
      return "compose";
    case Command::permute:
      return "permute";
    case Command::amicable:
      return "amicable";
    case Command::enumerate:
      return "enumerate";
    case Command::pairs:
      return "pairs";
    case Command::verify_theorem:
      return "verify-theorem";
  }
  return "?";
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path + ": cannot read file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PosetPtr load_poset(std::string const& path) {
  std::string const text = read_file(path);
  try {
    return std::make_shared<Poset const>(parse_poset(text));
  } catch (ParseError const& e) {
    throw InputError(path + ":" + e.what());
  } catch (PosetError const& e) {
    throw InputError(path + ": " + e.what());
  }
}

BinaryRelation load_relation(PosetPtr const& p, std::string const& path) {
  std::string const text = read_file(path);
  try {
    return parse_tolerance(text, *p);
  } catch (ParseError const& e) {
    throw InputError(path + ":" + e.what());
  }
}

Tolerance load_tolerance(PosetPtr const& p, std::string const& path) {
  Verdict why = Verdict::pass();
  if (auto t = Tolerance::try_make(p, load_relation(p, path), &why)) {
    return *t;
  }
  throw InputError(path + ": not a tolerance: " + describe(*p, why));
}

Tolerance load_2uniform(PosetPtr const& p, std::string const& path) {
  Tolerance t = load_tolerance(p, path);
  if (Verdict v = is_2_uniform(t); !v.holds()) {
    throw InputError(path + ": tolerance is not 2-uniform: " + describe(*p, v));
  }
  return t;
}

json labels_json(Poset const& p, std::vector<Element> const& xs) {
  json out = json::array();
  for (Element x : xs) {
    out.push_back(p.label(x));
  }
  return out;
}

json verdict_json(Poset const& p, Verdict const& v) {
  json out;
  out["holds"] = v.holds();
  if (v.holds()) {
    out["violated"] = nullptr;
    out["witness"] = nullptr;
  } else {
    out["violated"] = condition_name(*v.violated());
    out["witness"] = labels_json(p, v.witness());
  }
  out["detail"] = describe(p, v);
  return out;
}

json pairs_json(Poset const& p, BinaryRelation const& r) {
  json out = json::array();
  for (auto [x, y] : r.pairs()) {
    out.push_back({p.label(x), p.label(y)});
  }
  return out;
}

json blocks_json(Poset const& p, std::vector<ElementSet> const& bs) {
  json out = json::array();
  for (ElementSet const& b : bs) {
    out.push_back(labels_json(p, b.members()));
  }
  return out;
}

std::string block_text(Poset const& p, ElementSet const& b) {
  std::string out = "{";
  for (Element x : b.members()) {
    if (out.size() > 1) {
      out += ',';
    }
    out += p.label(x);
  }
  return out + "}";
}

std::string blocks_text(Poset const& p, std::vector<ElementSet> const& bs) {
  std::string out;
  for (ElementSet const& b : bs) {
    if (!out.empty()) {
      out += ' ';
    }
    out += block_text(p, b);
  }
  return out;
}

std::string optional_label(Poset const& p, std::optional<Element> x) {
  return x ? p.label(*x) : "-";
}

json optional_label_json(Poset const& p, std::optional<Element> x) {
  return x ? json(p.label(*x)) : json(nullptr);
}

class Output {
 public:
  Output(RunConfig const& config, std::ostream& out) : config_(config), out_(out) {
    doc_["command"] = command_name(config.command);
  }

  json& doc() { return doc_; }
  std::ostringstream& text() { return text_; }

  int finish(int status) {
    if (config_.json) {
      doc_["exit_status"] = status;
      out_ << doc_.dump(2) << '\n';
    } else {
      out_ << text_.str();
    }
    return status;
  }

 private:
  RunConfig const& config_;
  std::ostream& out_;
  json doc_;
  std::ostringstream text_;
};

void require_inputs(RunConfig const& config, std::size_t count) {
  if (config.inputs.size() != count) {
    throw InputError(command_name(config.command) + " expects " + std::to_string(count)
                     + " input file(s)");
  }
}

int run_validate_poset(RunConfig const& config, Output& o) {
  require_inputs(config, 1);
  std::string const& path = config.inputs[0];
  std::string const text = read_file(path);
  try {
    Poset const p = parse_poset(text);
    o.doc()["holds"] = true;
    o.doc()["elements"] = p.labels();
    json covers = json::array();
    for (auto [x, y] : p.cover_pairs()) {
      covers.push_back(p.label(x) + "<" + p.label(y));
    }
    o.doc()["covers"] = covers;
    o.doc()["lattice"] = p.is_lattice();
    o.text() << "valid poset: " << p.size() << " elements, " << p.cover_pairs().size()
             << " covers, lattice: " << (p.is_lattice() ? "yes" : "no") << '\n';
    return o.finish(kHolds);
  } catch (ParseError const& e) {
    throw InputError(path + ":" + e.what());
  } catch (PosetError const& e) {
    o.doc()["holds"] = false;
    o.doc()["detail"] = e.what();
    o.text() << "invalid poset: " << e.what() << '\n';
    return o.finish(kFails);
  }
}

int run_validate_tolerance(RunConfig const& config, Output& o) {
  require_inputs(config, 2);
  PosetPtr const p = load_poset(config.inputs[0]);
  BinaryRelation const r = load_relation(p, config.inputs[1]);
  Verdict const v = check_tolerance(*p, r);
  o.doc()["verdict"] = verdict_json(*p, v);
  if (!v.holds()) {
    o.text() << "tolerance: no, " << describe(*p, v) << '\n';
    return o.finish(kFails);
  }
  Verdict const uniform = is_2_uniform(Tolerance(p, r));
  o.doc()["two_uniform"] = uniform.holds();
  o.text() << "tolerance: yes\n2-uniform: " << (uniform.holds() ? "yes" : "no") << '\n';
  return o.finish(kHolds);
}

int run_blocks(RunConfig const& config, Output& o) {
  require_inputs(config, 2);
  PosetPtr const p = load_poset(config.inputs[0]);
  Tolerance const t = load_tolerance(p, config.inputs[1]);
  std::vector<ElementSet> const bs = blocks(t);
  o.doc()["blocks"] = blocks_json(*p, bs);
  for (ElementSet const& b : bs) {
    o.text() << block_text(*p, b) << '\n';
  }
  return o.finish(kHolds);
}

int run_neighbors(RunConfig const& config, Output& o) {
  require_inputs(config, 2);
  PosetPtr const p = load_poset(config.inputs[0]);
  NeighborMap const map = neighbor_map(load_2uniform(p, config.inputs[1]));
  json rows = json::array();
  for (Element x = 0; x < p->size(); ++x) {
    rows.push_back({{"element", p->label(x)},
                    {"lower", optional_label_json(*p, map.lower[x])},
                    {"upper", optional_label_json(*p, map.upper[x])}});
    o.text() << p->label(x) << ": lower=" << optional_label(*p, map.lower[x])
             << " upper=" << optional_label(*p, map.upper[x]) << '\n';
  }
  o.doc()["neighbors"] = rows;
  return o.finish(kHolds);
}

int run_compose(RunConfig const& config, Output& o) {
  require_inputs(config, 3);
  PosetPtr const p = load_poset(config.inputs[0]);
  BinaryRelation const r1 = load_relation(p, config.inputs[1]);
  BinaryRelation const r2 = load_relation(p, config.inputs[2]);
  BinaryRelation const product = compose(r1, r2);
  BinaryRelation const beyond = difference(product, unite(r1, r2));
  o.doc()["composition"] = pairs_json(*p, product);
  o.doc()["beyond_union"] = pairs_json(*p, beyond);
  o.text() << "composition: " << format_pairs(*p, product) << '\n'
           << "beyond union: " << format_pairs(*p, beyond) << '\n';
  return o.finish(kHolds);
}

TolerancePair load_pair(RunConfig const& config) {
  require_inputs(config, 3);
  PosetPtr const p = load_poset(config.inputs[0]);
  return TolerancePair(load_2uniform(p, config.inputs[1]), load_2uniform(p, config.inputs[2]));
}

int run_permute(RunConfig const& config, Output& o) {
  TolerancePair const pair = load_pair(config);
  Poset const& p = pair.poset();
  Verdict const v = permute(pair);
  o.doc()["verdict"] = verdict_json(p, v);
  if (v.holds()) {
    o.text() << "permute: yes\n";
    return o.finish(kHolds);
  }
  o.text() << "permute: no, (" << p.label(v.witness()[0]) << "," << p.label(v.witness()[1])
           << ") is in T∘S but not in S∘T\n";
  return o.finish(kFails);
}

std::string bottom_kind(ElementClass const& c) {
  return c.split_bottom ? "split" : c.adherent_bottom ? "adherent" : "-";
}

std::string top_kind(ElementClass const& c) {
  return c.split_top ? "split" : c.adherent_top ? "adherent" : "-";
}

int run_amicable(RunConfig const& config, Output& o) {
  TolerancePair const pair = load_pair(config);
  Poset const& p = pair.poset();
  Verdict const v = is_amicable(pair);
  o.doc()["verdict"] = verdict_json(p, v);
  o.text() << "amicable: " << (v.holds() ? "yes" : "no, " + describe(p, v)) << '\n';

  if (config.explain) {
    json conditions = json::array();
    std::pair<char const*, Verdict (*)(TolerancePair const&)> const checks[] = {
        {"(5)", check_condition_5},
        {"(6)", check_condition_6},
        {"(7)", check_condition_7},
        {"(8)", check_condition_8}};
    for (auto const& [name, check] : checks) {
      Verdict const c = check(pair);
      json entry = verdict_json(p, c);
      entry["condition"] = name;
      conditions.push_back(entry);
      o.text() << "condition " << name << ": " << (c.holds() ? "holds" : "fails, witness " + witness_labels(p, c))
               << '\n';
    }
    o.doc()["conditions"] = conditions;

    NeighborMap const& tm = pair.t_neighbors();
    NeighborMap const& sm = pair.s_neighbors();
    std::vector<ElementClass> const classes = classify(pair);
    json rows = json::array();
    o.text() << std::left << std::setw(10) << "element" << std::setw(9) << "upper T"
             << std::setw(9) << "upper S" << std::setw(9) << "lower T" << std::setw(9)
             << "lower S" << std::setw(10) << "(T,S)-bot" << "(T,S)-top\n";
    for (Element x = 0; x < p.size(); ++x) {
      ElementClass const& c = classes[x];
      o.text() << std::setw(10) << p.label(x) << std::setw(9) << optional_label(p, tm.upper[x])
               << std::setw(9) << optional_label(p, sm.upper[x]) << std::setw(9)
               << optional_label(p, tm.lower[x]) << std::setw(9) << optional_label(p, sm.lower[x])
               << std::setw(10) << bottom_kind(c) << top_kind(c) << '\n';
      rows.push_back({{"element", p.label(x)},
                      {"split_bottom", c.split_bottom},
                      {"adherent_bottom", c.adherent_bottom},
                      {"split_top", c.split_top},
                      {"adherent_top", c.adherent_top},
                      {"t_top", c.t_top},
                      {"t_bottom", c.t_bottom},
                      {"s_top", c.s_top},
                      {"s_bottom", c.s_bottom}});
    }
    o.doc()["classification"] = rows;
  }
  return o.finish(v.holds() ? kHolds : kFails);
}

int run_enumerate(RunConfig const& config, Output& o) {
  require_inputs(config, 1);
  PosetPtr const p = load_poset(config.inputs[0]);
  std::vector<Tolerance> const found = enumerate_2uniform(p);
  o.doc()["count"] = found.size();
  int status = kHolds;
  if (config.cross_check) {
    if (p->size() > kBruteForceCap) {
      throw InputError("--cross-check supports at most " + std::to_string(kBruteForceCap)
                       + " elements");
    }
    bool const agree = enumerate_2uniform_brute_force(p) == found;
    o.doc()["cross_check_agrees"] = agree;
    if (!agree) {
      status = kFails;
    }
  }
  if (config.count_only) {
    o.text() << found.size() << '\n';
  } else {
    json list = json::array();
    for (Tolerance const& t : found) {
      std::vector<ElementSet> const bs = blocks(t);
      list.push_back(blocks_json(*p, bs));
      o.text() << blocks_text(*p, bs) << '\n';
    }
    o.doc()["tolerances"] = list;
  }
  if (config.cross_check) {
    o.text() << "brute-force cross-check: " << (status == kHolds ? "agrees" : "DISAGREES") << '\n';
  }
  return o.finish(status);
}

int run_pairs(RunConfig const& config, Output& o) {
  require_inputs(config, 1);
  PairFilter filter{};
  try {
    filter = parse_pair_filter(config.filter);
  } catch (UnknownFilter const& e) {
    throw InputError(e.what());
  }
  PosetPtr const p = load_poset(config.inputs[0]);
  std::vector<TolerancePair> const pairs = find_pairs(p, filter);
  json list = json::array();
  for (TolerancePair const& pair : pairs) {
    std::vector<ElementSet> const tb = blocks(pair.t());
    std::vector<ElementSet> const sb = blocks(pair.s());
    list.push_back({{"t", blocks_json(*p, tb)}, {"s", blocks_json(*p, sb)}});
    o.text() << "T: " << blocks_text(*p, tb) << "  S: " << blocks_text(*p, sb) << '\n';
  }
  o.doc()["filter"] = pair_filter_name(filter);
  o.doc()["count"] = pairs.size();
  o.doc()["pairs"] = list;
  o.text() << pairs.size() << " pair(s)\n";
  return o.finish(kHolds);
}

int run_verify_theorem(RunConfig const& config, std::ostream& out) {
  PosetCorpus corpus;
  try {
    corpus = generate_posets(config.max_n, config.dedup);
  } catch (BoundExceeded const& e) {
    throw InputError(e.what());
  }
  TheoremReport const report = verify_theorem(corpus, {config.jobs});
  int const status = report.counterexamples.empty() ? kHolds : kFails;
  out << (config.json ? report_json(report, config.timing) : report_text(report, config.timing));
  return status;
}

}  // namespace

std::variant<RunConfig, int> parse_command_line(std::vector<std::string> const& args,
                                                std::ostream& out, std::ostream& err) {
  CLI::App app{"Tolerances on finite posets: validation, blocks, amicability, permutability"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", config.json, "Emit one JSON document on standard output");
  };

  // Each subcommand binds its own copies of the input slots; the chosen one
  // is copied into config.inputs after parsing.
  struct Sub {
    Command command;
    CLI::App* app;
    std::vector<std::string> files;
  };
  std::vector<Sub> subs;
  subs.reserve(16);
  auto add = [&](Command command, std::string const& description,
                 std::vector<std::string> const& roles) {
    CLI::App* sub = app.add_subcommand(command_name(command), description);
    subs.push_back({command, sub, std::vector<std::string>(roles.size())});
    Sub& s = subs.back();
    for (std::size_t i = 0; i < roles.size(); ++i) {
      sub->add_option(roles[i], s.files[i], roles[i] + " file")->required();
    }
    add_json(sub);
    return sub;
  };

  add(Command::validate_poset, "Parse and validate a poset file", {"poset"});
  add(Command::validate_tolerance, "Check conditions (1)-(4) for a relation", {"poset", "tolerance"});
  add(Command::blocks, "List the blocks of a tolerance", {"poset", "tolerance"});
  add(Command::neighbors, "Lower and upper neighbors of a 2-uniform tolerance",
      {"poset", "tolerance"});
  add(Command::compose, "Relational product T1∘T2", {"poset", "t1", "t2"});
  add(Command::permute, "Decide whether T1∘T2 = T2∘T1", {"poset", "t1", "t2"});
  CLI::App* amicable =
      add(Command::amicable, "Decide conditions (5)-(8) for two 2-uniform tolerances",
          {"poset", "t1", "t2"});
  amicable->add_flag("--explain", config.explain,
                     "Print each condition and the bottom/top classification");
  CLI::App* enumerate = add(Command::enumerate, "All 2-uniform tolerances on a poset", {"poset"});
  enumerate->add_flag("--count-only", config.count_only, "Print only the number found");
  enumerate->add_flag("--cross-check", config.cross_check,
                      "Compare against a scan of all symmetric relations");
  CLI::App* pairs = add(Command::pairs, "Ordered pairs of 2-uniform tolerances", {"poset"});
  pairs->add_option("--filter", config.filter,
                    "all, permuting, non_permuting, amicable or non_amicable");
  CLI::App* verify = add(Command::verify_theorem,
                         "Check amicable <=> permute over all posets up to --max-n", {});
  verify->add_option("--max-n", config.max_n, "Largest poset size")->required();
  verify->add_flag("--dedup", config.dedup, "One poset per isomorphism class");
  verify->add_option("--jobs", config.jobs, "Worker threads (0 = all cores)");
  verify->add_flag("!--no-timing", config.timing, "Omit wall time from the report");

  std::vector<char const*> argv{"ptol"};
  for (std::string const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kHolds;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << "run '" << app.get_subcommands().front()->get_name() << " --help' for usage\n";
    }
    return kInputError;
  }
  for (Sub const& s : subs) {
    if (s.app->parsed()) {
      config.command = s.command;
      config.inputs = s.files;
    }
  }
  return config;
}

int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
  Output o(config, out);
  try {
    switch (config.command) {
      case Command::validate_poset:
        return run_validate_poset(config, o);
      case Command::validate_tolerance:
        return run_validate_tolerance(config, o);
      case Command::blocks:
        return run_blocks(config, o);
      case Command::neighbors:
        return run_neighbors(config, o);
      case Command::compose:
        return run_compose(config, o);
      case Command::permute:
        return run_permute(config, o);
      case Command::amicable:
        return run_amicable(config, o);
      case Command::enumerate:
        return run_enumerate(config, o);
      case Command::pairs:
        return run_pairs(config, o);
      case Command::verify_theorem:
        return run_verify_theorem(config, out);
    }
  } catch (InputError const& e) {
    err << "error: " << e.what() << '\n';
  } catch (ptol::Error const& e) {
    err << "error: " << e.what() << '\n';
  }
  if (config.json) {
    json doc;
    doc["command"] = command_name(config.command);
    doc["error"] = true;
    doc["exit_status"] = kInputError;
    out << doc.dump(2) << '\n';
  }
  return kInputError;
}

int main_entry(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command_line(args, out, err);
  if (int const* status = std::get_if<int>(&parsed)) {
    return *status;
  }
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace ptol::cli
