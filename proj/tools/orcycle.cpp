// Command-line front end: classify / color / verify / oracle / sweep over
// oriented cycles given as +/- orientation strings.
//
// Exit codes: 0 success, 1 input error, 2 semantic failure (invalid coloring,
// unachievable palette), 3 internal disagreement between classifier and
// brute-force oracle.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orcycle/orcycle.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitSemanticFailure = 2;
constexpr int kExitDisagreement = 3;

bool is_input_error(orcycle::errc code) {
  switch (code) {
    case orcycle::errc::too_short:
    case orcycle::errc::bad_character:
    case orcycle::errc::bad_coloring_text:
    case orcycle::errc::length_mismatch:
    case orcycle::errc::unknown_target:
    case orcycle::errc::bad_max_k:
    case orcycle::errc::bad_n:
    case orcycle::errc::bad_range:
      return true;
    default:
      return false;
  }
}

json make_document(const std::string& command, const std::string& input) {
  return json{{"schema_version", "1"}, {"command", command}, {"input", input}};
}

void emit(const json& doc, bool compact = false) {
  std::cout << (compact ? doc.dump() : doc.dump(2)) << "\n";
}

json witness_json(const orcycle::Witness& w) {
  return json{{"colors", orcycle::render_coloring(w.coloring)},
              {"target", w.target.name()},
              {"rotation", w.rotation}};
}

json classification_json(const orcycle::Classification& cls) {
  return json{{"n", cls.n},
              {"lambda", cls.lambda},
              {"alternating", cls.alternating},
              {"three_run", cls.three_run},
              {"directed", cls.directed},
              {"chi", cls.chi},
              {"witness", witness_json(cls.witness)}};
}

int run_classify_one(const std::string& text, bool compact) {
  orcycle::OrientedCycle c = orcycle::OrientedCycle::parse(text);
  json doc = make_document("classify", text);
  doc["result"] = classification_json(orcycle::classify(c));
  emit(doc, compact);
  return kExitOk;
}

// Batch mode: one orientation per line, blank lines skipped, one compact
// JSON document per input line in input order. Stops at the first bad line.
int run_classify_stdin() {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank) continue;
    try {
      run_classify_one(line, /*compact=*/true);
    } catch (const orcycle::Error& e) {
      throw orcycle::Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(),
                           e.position());
    }
  }
  return kExitOk;
}

int run_color(const std::string& text, int requested) {
  orcycle::OrientedCycle c = orcycle::OrientedCycle::parse(text);
  json doc = make_document("color", text);
  try {
    orcycle::Witness w = orcycle::construct_witness(c, requested);
    doc["result"] = json{{"n", c.size()},
                         {"requested_colors", requested},
                         {"witness", witness_json(w)}};
    emit(doc);
    return kExitOk;
  } catch (const orcycle::Error& e) {
    if (e.code() != orcycle::errc::unachievable_chi) throw;
    doc["error"] = json{{"code", "UnachievableChi"},
                        {"message", e.what()},
                        {"classified_chi", orcycle::classify(c).chi}};
    emit(doc);
    return kExitSemanticFailure;
  }
}

int run_verify(const std::string& text, const std::string& coloring_text) {
  orcycle::OrientedCycle c = orcycle::OrientedCycle::parse(text);
  orcycle::Coloring col = orcycle::parse_coloring(coloring_text);
  orcycle::VerifyResult res = orcycle::verify_coloring(c, col);
  json doc = make_document("verify", text);
  if (res.valid) {
    doc["result"] = json{{"valid", true}, {"coloring", orcycle::render_coloring(col)}};
    emit(doc);
    return kExitOk;
  }
  json arcs = json::array({res.arc_a});
  if (res.arc_b >= 0) arcs.push_back(res.arc_b);
  doc["result"] = json{{"valid", false},
                       {"condition", res.kind == orcycle::ViolationKind::adjacent_same_color
                                         ? "adjacent_same_color"
                                         : "antisymmetry"},
                       {"arcs", arcs},
                       {"message", res.message}};
  emit(doc);
  return kExitSemanticFailure;
}

int run_oracle(const std::string& text, int max_k) {
  orcycle::OrientedCycle c = orcycle::OrientedCycle::parse(text);
  std::optional<int> oracle = orcycle::brute_force_chi(c, max_k);
  orcycle::Classification cls = orcycle::classify(c);
  // Unfound within max_k is consistent exactly when the classifier also
  // places the cycle above max_k.
  bool agree = oracle ? *oracle == cls.chi : cls.chi > max_k;
  json doc = make_document("oracle", text);
  doc["result"] = json{{"chi_oracle", oracle ? json(*oracle) : json(nullptr)},
                       {"found", oracle.has_value()},
                       {"max_k", max_k},
                       {"chi_classifier", cls.chi},
                       {"agree", agree}};
  emit(doc);
  return agree ? kExitOk : kExitDisagreement;
}

json report_json(const orcycle::SweepReport& report, bool with_legacy) {
  json hist = json::object();
  for (auto [chi, count] : report.chi_histogram) hist[std::to_string(chi)] = count;
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(json{{"orientation", m.orientation},
                              {"chi_classifier", m.chi_classifier},
                              {"chi_oracle", m.chi_oracle}});
  }
  json doc = json{{"n", report.n},
                  {"total", report.total},
                  {"chi_histogram", hist},
                  {"mismatches", mismatches},
                  {"witness_failures", report.witness_failures}};
  if (with_legacy) {
    json disagreements = json::array();
    for (const auto& d : report.legacy_disagreements) {
      disagreements.push_back(json{{"orientation", d.orientation},
                                   {"chi_legacy", d.chi_legacy},
                                   {"chi_oracle", d.chi_oracle}});
    }
    doc["legacy_disagreements"] = disagreements;
  }
  return doc;
}

int run_sweep(int min_n, int max_n, bool canonical, bool legacy, int max_k,
              const std::string& format) {
  orcycle::SweepOptions opt{max_k, canonical, legacy};
  orcycle::check_sweep_range(min_n, max_n, opt);
  std::vector<orcycle::SweepReport> reports;

  if (format == "csv") {
    std::cout << "n,orientation,chi_classifier,chi_oracle" << (legacy ? ",chi_legacy" : "")
              << ",witness_valid\n";
    for (int n = min_n; n <= max_n; ++n) {
      reports.push_back(orcycle::sweep_one(
          n, opt,
          [&](const orcycle::OrientedCycle& c, const orcycle::Classification& cls,
              int oracle_chi, const std::optional<int>& legacy_chi, bool witness_ok) {
            std::cout << n << ',' << c.render() << ',' << cls.chi << ',' << oracle_chi;
            if (legacy_chi) std::cout << ',' << *legacy_chi;
            std::cout << ',' << (witness_ok ? "true" : "false") << "\n";
          }));
    }
  } else {
    reports = orcycle::sweep(min_n, max_n, opt);
    json doc = make_document("sweep", std::to_string(min_n) + ".." + std::to_string(max_n));
    json arr = json::array();
    for (const auto& report : reports) arr.push_back(report_json(report, legacy));
    doc["result"] = json{{"reports", arr}};
    emit(doc);
  }

  for (const auto& report : reports) {
    if (!report.mismatches.empty() || !report.witness_failures.empty()) {
      return kExitDisagreement;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented chromatic number of oriented cycles: classify, construct witness "
               "colorings, verify them, and cross-check against a brute-force oracle"};
  app.require_subcommand(1);

  std::string orientation;
  bool from_stdin = false;
  auto* classify_cmd =
      app.add_subcommand("classify", "compute chi and a witness coloring for a cycle");
  classify_cmd->add_option("orientation", orientation,
                           "orientation string, e.g. \"++-\" (+ - F B > < accepted)");
  classify_cmd->add_flag("--stdin", from_stdin, "read newline-separated orientations from stdin");

  std::string color_orientation;
  int requested_colors = 0;
  auto* color_cmd = app.add_subcommand("color", "construct a witness with a given palette size");
  color_cmd->add_option("orientation", color_orientation, "orientation string")->required();
  color_cmd->add_option("--colors", requested_colors, "palette size, one of 2, 3, 4, 5")
      ->required();

  std::string verify_orientation;
  std::string coloring_text;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a cycle");
  verify_cmd->add_option("orientation", verify_orientation, "orientation string")->required();
  verify_cmd->add_option("--coloring", coloring_text, "comma-separated colors, e.g. 0,1,2")
      ->required();

  std::string oracle_orientation;
  int oracle_max_k = orcycle::kOracleDefaultMaxColors;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force chi and compare with the classifier");
  oracle_cmd->add_option("orientation", oracle_orientation, "orientation string")->required();
  oracle_cmd->add_option("--max-k", oracle_max_k, "largest palette to try (2..8, default 6)");

  int min_n = 0;
  int max_n = 0;
  bool canonical = false;
  bool legacy = false;
  int sweep_max_k = orcycle::kOracleDefaultMaxColors;
  std::string format = "json";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "cross-check classifier, witnesses and oracle over all "
                                  "orientations of a range of lengths");
  sweep_cmd->add_option("--min-n", min_n, "smallest cycle length")->required();
  sweep_cmd->add_option("--max-n", max_n, "largest cycle length")->required();
  sweep_cmd->add_flag("--canonical", canonical,
                      "enumerate one representative per symmetry class");
  sweep_cmd->add_flag("--legacy", legacy, "also evaluate the legacy rule (chi=3 iff lambda=0)");
  sweep_cmd->add_option("--max-k", sweep_max_k, "oracle palette bound (5..8, default 6)");
  sweep_cmd->add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) {
      if (from_stdin == !orientation.empty()) {
        std::cerr << "error: pass exactly one of an orientation argument or --stdin\n";
        return kExitInputError;
      }
      return from_stdin ? run_classify_stdin() : run_classify_one(orientation, false);
    }
    if (color_cmd->parsed()) {
      if (requested_colors < 2 || requested_colors > 5) {
        std::cerr << "error: --colors must be one of 2, 3, 4, 5\n";
        return kExitInputError;
      }
      return run_color(color_orientation, requested_colors);
    }
    if (verify_cmd->parsed()) return run_verify(verify_orientation, coloring_text);
    if (oracle_cmd->parsed()) return run_oracle(oracle_orientation, oracle_max_k);
    if (sweep_cmd->parsed()) return run_sweep(min_n, max_n, canonical, legacy, sweep_max_k, format);
  } catch (const orcycle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInputError : kExitSemanticFailure;
  }
  return kExitOk;
}
