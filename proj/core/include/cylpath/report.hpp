// Copyright 2026 The cylpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Pass/fail records produced by every checker in the library.

#ifndef CYLPATH_REPORT_HPP_
#define CYLPATH_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cylpath {

struct CheckRecord {
  std::string anchor;    // which law or equation, e.g. "enrich.ub-assoc"
  std::string instance;  // which objects/morphisms/level it was checked on
  bool passed = true;
  std::string witness;   // non-empty iff !passed
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void pass(std::string anchor, std::string instance);
  void fail(std::string anchor, std::string instance, std::string witness);
  // Records a pass when `failure` is empty, otherwise a failure with it as
  // witness.
  void check(std::string anchor, std::string instance,
             const std::optional<std::string>& failure);
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  // Appends all records and warnings of `other`, keeping their order.
  void merge(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  // First failing record, if any.
  const CheckRecord* first_failure() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  std::vector<std::string> warnings_;
};

// One check per line: anchor<TAB>instance<TAB>PASS|FAIL[<TAB>witness].
std::string format_machine(const VerificationReport& report);

// Human-readable summary: per-anchor counts, then every failure.
std::string format_text(const VerificationReport& report);

}  // namespace cylpath

#endif  // CYLPATH_REPORT_HPP_
