#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace resint {

enum class Provenance { Theorem, Conjecture, Informative };
enum class CellStatus { Ok, Timeout, Skipped };

std::string toString(Provenance p);
std::string toString(CellStatus s);
Provenance provenanceFromString(const std::string& s);
CellStatus statusFromString(const std::string& s);

// one verified quantity at one parameter point
struct CellResult {
  int n = 0;
  std::optional<int> i;
  std::optional<int> j;
  std::string suite;
  std::string quantity;
  std::string predicted;  // empty exactly where no claim is made
  Provenance provenance = Provenance::Theorem;
  std::string computed;   // empty when not computed
  bool match = false;
  std::string source;     // chain element provenance, where applicable
  long long timingMs = 0;
  CellStatus status = CellStatus::Ok;
  std::string note;
  bool operator==(const CellResult&) const = default;
};

struct RunManifest {
  std::string tool = "resint";
  std::string version;
  int n = 4;
  long long prime = 32003;
  std::string reduction = "sparse";
  std::uint64_t seed = 17;
  int jmax = 3;
  bool heavy = false;
  std::vector<std::string> suites;
  std::vector<std::string> elements;  // accepted chain elements, canonical text
  std::vector<std::string> sources;   // acceptance source per element
  bool operator==(const RunManifest&) const = default;

  // stable key over the mathematical identity of the run (timings and
  // formatting excluded); names the per-cell result cache
  std::string identityHash() const;
};

struct ReportSummary {
  long long cells = 0, ok = 0, timeout = 0, skipped = 0;
  long long matched = 0, mismatched = 0, fatal = 0;  // fatal: theorem mismatches
};

struct VerificationReport {
  RunManifest manifest;
  std::vector<CellResult> cells;
  bool operator==(const VerificationReport&) const = default;
};

ReportSummary summarize(const VerificationReport& r);

// deterministic serializations; JSON is byte-stable apart from timing values
std::string emitJson(const VerificationReport& r);
VerificationReport parseJson(const std::string& text);
std::string emitText(const VerificationReport& r);
// the depth table as a grid, rows i, columns j
std::string emitCsv(const VerificationReport& r);

// 0 iff no theorem-provenance mismatch among completed cells
int exitCode(const VerificationReport& r);

}  // namespace resint
