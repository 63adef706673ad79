#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uniserial/acceptance.hpp"
#include "uniserial/classifier.hpp"
#include "uniserial/error.hpp"
#include "uniserial/galilei.hpp"
#include "uniserial/report.hpp"
#include "uniserial/sixj.hpp"

using namespace uniserial;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kFormats{"json", "csv", "md"};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

int cmd_sixj(const std::vector<std::string>& args) {
  if (args.size() != 6) throw ParseError("sixj takes exactly six half-integers");
  std::array<HalfInt, 6> j{};
  for (std::size_t k = 0; k < 6; ++k) j[k] = HalfInt::parse(args[k]);
  const Surd value = eval(SixJArgs(j[0], j[1], j[2], j[3], j[4], j[5]));
  char approx[64];
  std::snprintf(approx, sizeof approx, "%.15g", value.to_double());
  std::cout << value.str() << "\n" << "~ " << approx << "\n";
  return kOk;
}

int cmd_construct(int case_number, int m, int a, bool example, const std::string& format, const std::string& output) {
  const BlockRep rep = example ? assemble_intro_example() : build_construction(case_number, m, a);
  emit(format == "md" ? to_markdown(rep) : to_json(rep).dump(2) + "\n", output);
  return kOk;
}

int cmd_verify(int case_number, int m, int a, bool example, const std::string& input) {
  BlockRep rep = [&] {
    if (example) return assemble_intro_example();
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw PreconditionError("cannot read " + input);
      return block_rep_from_json(nlohmann::json::parse(in));
    }
    return build_construction(case_number, m, a);
  }();

  bool all = true;
  const auto line = [&](const std::string& name, bool ok, const std::string& note) {
    all = all && ok;
    std::cout << (ok ? "pass  " : "FAIL  ") << name << note << "\n";
  };
  std::cout << "socle " << socle_str(rep.socle()) << ", m = " << rep.spec().m() << ", dim " << rep.dimension() << "\n";
  if (rep.length() == 3) {
    const auto v = verify_funca(rep);
    line("commutator identity", v.empty(), v.empty() ? "" : " (" + std::to_string(v.size()) + " violations)");
  }
  const auto h = verify_homomorphism(rep);
  line("homomorphism", h.empty(), h.empty() ? "" : " (" + std::to_string(h.size()) + " violations)");
  line("uniserial", is_uniserial(rep), "");
  line("faithful", is_faithful(rep), "");
  return all ? kOk : kMismatch;
}

int cmd_classify(int m, int bound, int length, const std::string& format, const std::string& output) {
  const AlgebraSpec spec = AlgebraSpec::from_m(m);
  if (length < 3 || length > 6) throw PreconditionError("length must be between 3 and 6");
  if (length == 3) {
    const auto report = search_length3(spec, bound);
    emit(render(report, parse_report_format(format)), output);
    return report.found_sequences() == expected_length3(m, bound) ? kOk : kMismatch;
  }
  if (length == 4) {
    const auto report = length4_search(spec, bound);
    emit(render(report, parse_report_format(format)), output);
    const bool obstructed = std::all_of(report.obstructions.begin(), report.obstructions.end(),
                                        [](const Length4Obstruction& o) { return o.nonzero; });
    return report.survivors.empty() && obstructed ? kOk : kMismatch;
  }
  const auto report = length_ge5_check(spec, length, bound);
  emit(render(report, parse_report_format(format)), output);
  return report.faithful_candidates.empty() && report.non_progressions.empty() ? kOk : kMismatch;
}

// Commutator image of every length-3 window (a, b, a) against its 6j prediction.
int cmd_report(int m, int bound, const std::string& format, const std::string& output) {
  const AlgebraSpec spec = AlgebraSpec::from_m(m);
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  struct Row {
    int a, b;
    CommutatorImage image;
    bool consistent;
  };
  std::vector<Row> rows;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      if (!equivariant_family(m, b, a)) continue;
      auto image = commutator_image(spec, a, b, a);
      const int r = image.prediction.r;
      const bool consistent = image.prediction.sixj_value.is_zero() || image.actual.count(r) == 1;
      rows.push_back({a, b, std::move(image), consistent});
    }

  const auto components = [](const WeightMultiset& w) {
    std::string out;
    for (const auto& [k, mult] : w)
      for (int i = 0; i < mult; ++i) out += (out.empty() ? "" : " ") + std::to_string(k);
    return out;
  };
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json actual = nlohmann::json::array();
      for (const auto& [k, mult] : row.image.actual) actual.push_back({{"highest_weight", k}, {"multiplicity", mult}});
      j.push_back({{"a", row.a},
                   {"b", row.b},
                   {"r", row.image.prediction.r},
                   {"sixj", row.image.prediction.sixj_value.str()},
                   {"actual", actual},
                   {"consistent", row.consistent}});
    }
    os << nlohmann::json{{"m", m}, {"bound", bound}, {"rows", j}}.dump(2) << "\n";
  } else if (format == "csv") {
    os << "a,b,r,sixj,actual,consistent\n";
    for (const auto& row : rows)
      os << row.a << "," << row.b << "," << row.image.prediction.r << "," << row.image.prediction.sixj_value.str()
         << "," << components(row.image.actual) << "," << (row.consistent ? "yes" : "no") << "\n";
  } else {
    os << "Commutator images for m = " << m << ", labels <= " << bound << "\n\n"
       << "| a | b | r | {m/2 r/2 m/2; a/2 b/2 a/2} | components | V(r) predicted |\n|---|---|---|---|---|---|\n";
    for (const auto& row : rows)
      os << "| " << row.a << " | " << row.b << " | " << row.image.prediction.r << " | "
         << row.image.prediction.sixj_value.str() << " | " << components(row.image.actual) << " | "
         << (row.image.prediction.sixj_value.is_zero() ? "no" : row.consistent ? "yes" : "yes, MISSING") << " |\n";
  }
  emit(os.str(), output);
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.consistent; }) ? kOk : kMismatch;
}

int cmd_selftest() {
  const auto results = run_acceptance([](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
  const auto passed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniserial representations of sl(2) |x h_n"};
  app.require_subcommand(1);

  std::vector<std::string> sixj_args;
  auto* sixj = app.add_subcommand("sixj", "Exact 6j symbol {j1 j2 j3; j4 j5 j6}");
  sixj->add_option("j", sixj_args, "six half-integers, e.g. 2 3/2 3/2 3/2 2 3/2")->required()->expected(6);

  int case_number = 6, m = 3, a = 0, bound = 10, length = 3;
  bool example = false;
  std::string format = "json", output, input;

  auto* construct = app.add_subcommand("construct", "Print one explicit module");
  construct->add_option("--case", case_number, "construction 1..6")->capture_default_str();
  construct->add_option("--m", m, "odd m = 2n-1")->capture_default_str();
  construct->add_option("--a", a, "label a for cases 4 and 5")->capture_default_str();
  construct->add_flag("--example", example, "the V(4),V(3),V(4) example for n = 2 instead");
  construct->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  construct->add_option("-o,--output", output, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check an explicit module");
  verify->add_option("--case", case_number, "construction 1..6")->capture_default_str();
  verify->add_option("--m", m, "odd m = 2n-1")->capture_default_str();
  verify->add_option("--a", a, "label a for cases 4 and 5")->capture_default_str();
  verify->add_flag("--example", example, "the V(4),V(3),V(4) example for n = 2 instead");
  verify->add_option("--input", input, "a module in JSON form instead")->check(CLI::ExistingFile);

  auto* classify = app.add_subcommand("classify", "Search all socle sequences of one length");
  classify->add_option("--m", m, "odd m = 2n-1")->capture_default_str();
  classify->add_option("--bound", bound, "largest irreducible label")->capture_default_str();
  classify->add_option("--length", length, "3..6")->check(CLI::Range(3, 6))->capture_default_str();
  classify->add_option("--format", format, "json, csv or md")->check(CLI::IsMember(kFormats))->capture_default_str();
  classify->add_option("-o,--output", output, "write to file instead of stdout");

  auto* report = app.add_subcommand("report", "Commutator images against the 6j prediction");
  report->add_option("--m", m, "odd m = 2n-1")->capture_default_str();
  report->add_option("--bound", bound, "largest irreducible label")->capture_default_str();
  report->add_option("--format", format, "json, csv or md")->check(CLI::IsMember(kFormats))->capture_default_str();
  report->add_option("-o,--output", output, "write to file instead of stdout");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sixj) return cmd_sixj(sixj_args);
    if (*construct) return cmd_construct(case_number, m, a, example, format, output);
    if (*verify) return cmd_verify(case_number, m, a, example, input);
    if (*classify) return cmd_classify(m, bound, length, format, output);
    if (*report) return cmd_report(m, bound, format, output);
    if (*selftest) return cmd_selftest();
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
