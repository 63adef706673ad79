#include "uniserial/report.hpp"

#include <map>
#include <sstream>

#include "uniserial/error.hpp"

namespace uniserial {

namespace {

nlohmann::json seq_json(const SocleSequence& seq) { return nlohmann::json(seq); }

std::string seq_csv(const SocleSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + std::to_string(seq[i]);
  return out;
}

// Z(z) on the corner block of a length-3 module.
Rational corner_scalar(const BlockRep& rep) {
  Rational lambda;
  rep.block(rep.spec().z(), 0, 2).is_scalar(&lambda);
  return lambda;
}

std::map<std::string, std::size_t> reason_counts(const ClassificationReport& report) {
  std::map<std::string, std::size_t> counts;
  for (const auto& [seq, reason] : report.rejected) ++counts[reason_str(reason)];
  return counts;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "md") return ReportFormat::md;
  throw ParseError("unknown report format '" + name + "'");
}

nlohmann::json to_json(const ClassificationReport& report) {
  nlohmann::json found = nlohmann::json::array();
  for (const auto& [seq, rep] : report.found)
    found.push_back({{"socle", seq_json(seq)}, {"dimension", rep.dimension()}, {"lambda", corner_scalar(rep).str()}});
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto& [seq, reason] : report.rejected)
    rejected.push_back({{"socle", seq_json(seq)}, {"reason", reason_str(reason)}});
  return {{"m", report.m},
          {"length", 3},
          {"bound", report.bound},
          {"found", found},
          {"rejected_counts", reason_counts(report)},
          {"rejected", rejected}};
}

nlohmann::json to_json(const Length4Report& report) {
  nlohmann::json obstructions = nlohmann::json::array();
  for (const auto& o : report.obstructions) {
    nlohmann::json corners = nlohmann::json::array();
    for (const auto& c : o.corner_blocks) corners.push_back(to_json(c));
    obstructions.push_back({{"socle", seq_json(o.seq)}, {"nonzero", o.nonzero}, {"corner_blocks", corners}});
  }
  nlohmann::json survivors = nlohmann::json::array();
  for (const auto& s : report.survivors) survivors.push_back(seq_json(s));
  return {{"m", report.m},
          {"length", 4},
          {"bound", report.bound},
          {"examined", report.examined},
          {"not_uniserial", report.not_uniserial},
          {"z_trivial", report.z_trivial},
          {"case1", report.case1},
          {"case2", report.case2},
          {"case3", report.case3},
          {"survivors", survivors},
          {"obstructions", obstructions}};
}

nlohmann::json to_json(const LengthGe5Report& report) {
  nlohmann::json non_progressions = nlohmann::json::array();
  for (const auto& s : report.non_progressions) non_progressions.push_back(seq_json(s));
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& s : report.faithful_candidates) candidates.push_back(seq_json(s));
  return {{"m", report.m},
          {"length", report.ell},
          {"bound", report.bound},
          {"examined", report.examined},
          {"window_admissible", report.window_admissible},
          {"non_progressions", non_progressions},
          {"faithful_candidates", candidates}};
}

std::string to_csv(const ClassificationReport& report) {
  std::ostringstream os;
  os << "socle,status,reason,dimension,lambda\n";
  // found and rejected are each lexicographic; merge back into one ordered listing
  std::map<SocleSequence, std::string> rows;
  for (const auto& [seq, rep] : report.found)
    rows[seq] = "found,," + std::to_string(rep.dimension()) + "," + corner_scalar(rep).str();
  for (const auto& [seq, reason] : report.rejected) rows[seq] = "rejected," + reason_str(reason) + ",,";
  for (const auto& [seq, row] : rows) os << seq_csv(seq) << "," << row << "\n";
  return os.str();
}

std::string to_csv(const Length4Report& report) {
  std::ostringstream os;
  os << "key,value\n"
     << "m," << report.m << "\n"
     << "bound," << report.bound << "\n"
     << "examined," << report.examined << "\n"
     << "not_uniserial," << report.not_uniserial << "\n"
     << "z_trivial," << report.z_trivial << "\n"
     << "case1," << report.case1 << "\n"
     << "case2," << report.case2 << "\n"
     << "case3," << report.case3 << "\n"
     << "survivors," << report.survivors.size() << "\n";
  for (const auto& o : report.obstructions)
    os << "obstruction " << seq_csv(o.seq) << "," << (o.nonzero ? "nonzero" : "zero") << "\n";
  return os.str();
}

std::string to_csv(const LengthGe5Report& report) {
  std::ostringstream os;
  os << "key,value\n"
     << "m," << report.m << "\n"
     << "length," << report.ell << "\n"
     << "bound," << report.bound << "\n"
     << "examined," << report.examined << "\n"
     << "window_admissible," << report.window_admissible << "\n"
     << "non_progressions," << report.non_progressions.size() << "\n"
     << "faithful_candidates," << report.faithful_candidates.size() << "\n";
  return os.str();
}

std::string to_markdown(const ClassificationReport& report) {
  std::ostringstream os;
  os << "Faithful uniserial modules of length 3, m = " << report.m << ", labels <= " << report.bound << "\n\n";
  os << "| m | socle factors | dim | Z(z) |\n|---|---|---|---|\n";
  for (const auto& [seq, rep] : report.found)
    os << "| " << report.m << " | " << socle_str(seq) << " | " << rep.dimension() << " | " << corner_scalar(rep).str()
       << " I |\n";
  os << "\nRejected: " << report.rejected.size();
  for (const auto& [reason, count] : reason_counts(report)) os << ", " << reason << " " << count;
  os << "\n";
  return os.str();
}

std::string to_markdown(const Length4Report& report) {
  std::ostringstream os;
  os << "Length 4, m = " << report.m << ", labels <= " << report.bound << "\n\n";
  os << "| examined | not uniserial | z trivial | case 1 | case 2 | case 3 | survivors |\n"
     << "|---|---|---|---|---|---|---|\n"
     << "| " << report.examined << " | " << report.not_uniserial << " | " << report.z_trivial << " | " << report.case1
     << " | " << report.case2 << " | " << report.case3 << " | " << report.survivors.size() << " |\n\n";
  if (report.survivors.empty()) {
    os << "no faithful uniserial modules\n";
  } else {
    for (const auto& s : report.survivors) os << "- survivor " << socle_str(s) << "\n";
  }
  return os.str();
}

std::string to_markdown(const LengthGe5Report& report) {
  std::ostringstream os;
  os << "Length " << report.ell << ", m = " << report.m << ", labels <= " << report.bound << "\n\n";
  os << "| examined | windows admissible | non-progressions | faithful candidates |\n|---|---|---|---|\n"
     << "| " << report.examined << " | " << report.window_admissible << " | " << report.non_progressions.size()
     << " | " << report.faithful_candidates.size() << " |\n\n";
  if (report.faithful_candidates.empty() && report.non_progressions.empty()) {
    os << "no faithful uniserial modules\n";
  } else {
    for (const auto& s : report.faithful_candidates) os << "- candidate " << socle_str(s) << "\n";
  }
  return os.str();
}

}  // namespace uniserial
