#include "resint/report.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace resint {

using nlohmann::json;

std::string toString(Provenance p) {
  switch (p) {
    case Provenance::Theorem: return "theorem";
    case Provenance::Conjecture: return "conjecture";
    default: return "informative";
  }
}

std::string toString(CellStatus s) {
  switch (s) {
    case CellStatus::Ok: return "ok";
    case CellStatus::Timeout: return "timeout";
    default: return "skipped";
  }
}

Provenance provenanceFromString(const std::string& s) {
  if (s == "theorem") return Provenance::Theorem;
  if (s == "conjecture") return Provenance::Conjecture;
  if (s == "informative") return Provenance::Informative;
  throw std::invalid_argument("unknown provenance: " + s);
}

CellStatus statusFromString(const std::string& s) {
  if (s == "ok") return CellStatus::Ok;
  if (s == "timeout") return CellStatus::Timeout;
  if (s == "skipped") return CellStatus::Skipped;
  throw std::invalid_argument("unknown status: " + s);
}

std::string RunManifest::identityHash() const {
  std::string key = "n=" + std::to_string(n) + ";p=" + std::to_string(prime) +
                    ";red=" + reduction + ";seed=" + std::to_string(seed);
  for (const auto& e : elements) key += ";" + e;
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportSummary summarize(const VerificationReport& r) {
  ReportSummary s;
  s.cells = static_cast<long long>(r.cells.size());
  for (const auto& c : r.cells) {
    switch (c.status) {
      case CellStatus::Ok:
        ++s.ok;
        if (c.match) {
          ++s.matched;
        } else {
          ++s.mismatched;
          if (c.provenance == Provenance::Theorem) ++s.fatal;
        }
        break;
      case CellStatus::Timeout: ++s.timeout; break;
      case CellStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

int exitCode(const VerificationReport& r) { return summarize(r).fatal == 0 ? 0 : 1; }

namespace {

json cellToJson(const CellResult& c) {
  json o;
  o["n"] = c.n;
  if (c.i) o["i"] = *c.i;
  if (c.j) o["j"] = *c.j;
  o["suite"] = c.suite;
  o["quantity"] = c.quantity;
  if (!c.predicted.empty()) o["predicted"] = c.predicted;
  o["provenance"] = toString(c.provenance);
  if (!c.computed.empty()) o["computed"] = c.computed;
  o["match"] = c.match;
  if (!c.source.empty()) o["source"] = c.source;
  o["timing_ms"] = c.timingMs;
  o["status"] = toString(c.status);
  if (!c.note.empty()) o["note"] = c.note;
  return o;
}

CellResult cellFromJson(const json& o) {
  CellResult c;
  c.n = o.at("n").get<int>();
  if (o.contains("i")) c.i = o.at("i").get<int>();
  if (o.contains("j")) c.j = o.at("j").get<int>();
  c.suite = o.at("suite").get<std::string>();
  c.quantity = o.at("quantity").get<std::string>();
  if (o.contains("predicted")) c.predicted = o.at("predicted").get<std::string>();
  c.provenance = provenanceFromString(o.at("provenance").get<std::string>());
  if (o.contains("computed")) c.computed = o.at("computed").get<std::string>();
  c.match = o.at("match").get<bool>();
  if (o.contains("source")) c.source = o.at("source").get<std::string>();
  c.timingMs = o.at("timing_ms").get<long long>();
  c.status = statusFromString(o.at("status").get<std::string>());
  if (o.contains("note")) c.note = o.at("note").get<std::string>();
  return c;
}

}  // namespace

std::string emitJson(const VerificationReport& r) {
  json m;
  m["tool"] = r.manifest.tool;
  m["version"] = r.manifest.version;
  m["n"] = r.manifest.n;
  m["prime"] = r.manifest.prime;
  m["reduction"] = r.manifest.reduction;
  m["seed"] = r.manifest.seed;
  m["jmax"] = r.manifest.jmax;
  m["heavy"] = r.manifest.heavy;
  m["suites"] = r.manifest.suites;
  m["elements"] = r.manifest.elements;
  m["sources"] = r.manifest.sources;
  m["identity"] = r.manifest.identityHash();

  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back(cellToJson(c));

  auto s = summarize(r);
  json sum;
  sum["cells"] = s.cells;
  sum["ok"] = s.ok;
  sum["timeout"] = s.timeout;
  sum["skipped"] = s.skipped;
  sum["matched"] = s.matched;
  sum["mismatched"] = s.mismatched;
  sum["fatal_mismatches"] = s.fatal;

  json root;
  root["manifest"] = m;
  root["cells"] = cells;
  root["summary"] = sum;
  return root.dump(2) + "\n";
}

VerificationReport parseJson(const std::string& text) {
  json root = json::parse(text);
  VerificationReport r;
  const auto& m = root.at("manifest");
  r.manifest.tool = m.at("tool").get<std::string>();
  r.manifest.version = m.at("version").get<std::string>();
  r.manifest.n = m.at("n").get<int>();
  r.manifest.prime = m.at("prime").get<long long>();
  r.manifest.reduction = m.at("reduction").get<std::string>();
  r.manifest.seed = m.at("seed").get<std::uint64_t>();
  r.manifest.jmax = m.at("jmax").get<int>();
  r.manifest.heavy = m.at("heavy").get<bool>();
  r.manifest.suites = m.at("suites").get<std::vector<std::string>>();
  r.manifest.elements = m.at("elements").get<std::vector<std::string>>();
  r.manifest.sources = m.at("sources").get<std::vector<std::string>>();
  for (const auto& c : root.at("cells")) r.cells.push_back(cellFromJson(c));
  return r;
}

std::string emitText(const VerificationReport& r) {
  std::ostringstream out;
  out << r.manifest.tool << " " << r.manifest.version << "  n=" << r.manifest.n
      << " prime=" << r.manifest.prime << " reduction=" << r.manifest.reduction
      << " seed=" << r.manifest.seed << " jmax=" << r.manifest.jmax
      << (r.manifest.heavy ? " heavy" : "") << "\n";
  out << "run identity " << r.manifest.identityHash() << "\n\n";
  std::string suite;
  for (const auto& c : r.cells) {
    if (c.suite != suite) {
      suite = c.suite;
      out << "[" << suite << "]\n";
    }
    out << "  " << (c.status != CellStatus::Ok ? toString(c.status)
                    : c.match                  ? "ok  "
                                               : "FAIL")
        << "  " << c.quantity;
    if (c.i) out << " i=" << *c.i;
    if (c.j) out << " j=" << *c.j;
    if (!c.predicted.empty()) out << "  predicted " << c.predicted;
    if (!c.computed.empty()) out << "  computed " << c.computed;
    if (c.provenance != Provenance::Theorem) out << "  (" << toString(c.provenance) << ")";
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
  auto s = summarize(r);
  out << "\ncells " << s.cells << ": " << s.matched << " matched, " << s.mismatched
      << " mismatched (" << s.fatal << " fatal), " << s.timeout << " timeout, " << s.skipped
      << " skipped\n";
  return out.str();
}

std::string emitCsv(const VerificationReport& r) {
  // collect the depth cells into a grid keyed by (i, j)
  std::map<int, std::map<int, std::string>> grid;
  std::set<int> cols;
  for (const auto& c : r.cells) {
    if (c.suite != "depth" || c.quantity != "depth" || !c.i || !c.j) continue;
    grid[*c.i][*c.j] = c.status == CellStatus::Ok ? c.computed : toString(c.status);
    cols.insert(*c.j);
  }
  std::ostringstream out;
  out << "i\\j";
  for (int j : cols) out << "," << j;
  out << "\n";
  for (const auto& [i, row] : grid) {
    out << i;
    for (int j : cols) {
      auto it = row.find(j);
      out << "," << (it == row.end() ? "" : it->second);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace resint
