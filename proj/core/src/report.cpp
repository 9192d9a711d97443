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

#include "cylpath/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cylpath {

void VerificationReport::pass(std::string anchor, std::string instance) {
  records_.push_back({std::move(anchor), std::move(instance), true, {}});
}

void VerificationReport::fail(std::string anchor, std::string instance,
                              std::string witness) {
  if (witness.empty()) witness = "(no witness)";
  records_.push_back(
      {std::move(anchor), std::move(instance), false, std::move(witness)});
}

void VerificationReport::check(std::string anchor, std::string instance,
                               const std::optional<std::string>& failure) {
  if (failure) {
    fail(std::move(anchor), std::move(instance), *failure);
  } else {
    pass(std::move(anchor), std::move(instance));
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  warnings_.insert(warnings_.end(), other.warnings_.begin(),
                   other.warnings_.end());
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [](const auto& r) { return r.passed; }));
}

std::size_t VerificationReport::failed() const {
  return records_.size() - passed();
}

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& r : records_) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

std::string format_machine(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records()) {
    out << r.anchor << '\t' << r.instance << '\t' << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) out << '\t' << r.witness;
    out << '\n';
  }
  return out.str();
}

std::string format_text(const VerificationReport& report) {
  struct Tally {
    std::string anchor;
    std::size_t pass = 0;
    std::size_t fail = 0;
  };
  std::vector<Tally> tallies;
  for (const auto& r : report.records()) {
    auto it = std::find_if(tallies.begin(), tallies.end(),
                           [&](const Tally& t) { return t.anchor == r.anchor; });
    if (it == tallies.end()) {
      tallies.push_back({r.anchor});
      it = std::prev(tallies.end());
    }
    (r.passed ? it->pass : it->fail)++;
  }

  std::ostringstream out;
  out << "suite " << (report.suite().empty() ? "(unnamed)" : report.suite())
      << ": " << report.passed() << " passed, " << report.failed()
      << " failed -> " << (report.ok() ? "PASS" : "FAIL") << '\n';
  for (const auto& w : report.warnings()) out << "  warning: " << w << '\n';
  for (const auto& t : tallies) {
    out << "  " << t.anchor << ": " << t.pass << " passed";
    if (t.fail) out << ", " << t.fail << " FAILED";
    out << '\n';
  }
  for (const auto& r : report.records()) {
    if (!r.passed) {
      out << "  FAIL " << r.anchor << " [" << r.instance << "]: " << r.witness
          << '\n';
    }
  }
  return out.str();
}

}  // namespace cylpath
