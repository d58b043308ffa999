#include "xmodcat/report.hpp"

#include <algorithm>
#include <sstream>

#include "xmodcat/error.hpp"

namespace xmodcat {

void AxiomCheck::record(const Witness& w) {
  ++failures;
  auto it = std::lower_bound(witnesses.begin(), witnesses.end(), w);
  if (it != witnesses.end() && *it == w) return;
  if (witnesses.size() == kMaxWitnesses) {
    if (it == witnesses.end()) return;
    witnesses.pop_back();
  }
  witnesses.insert(it, w);
}

void AxiomCheck::merge(const AxiomCheck& other) {
  const std::uint64_t total = failures + other.failures;
  for (const auto& w : other.witnesses) record(w);
  failures = total;
}

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.informational && !c.pass()) return false;
  return true;
}

const AxiomCheck& AxiomReport::at(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorKind::SchemaError, "no check named " + name);
}

AxiomCheck& AxiomReport::add(const std::string& name, bool informational) {
  checks.push_back(AxiomCheck{name, 0, {}, informational});
  return checks.back();
}

std::vector<std::string> AxiomReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.informational && !c.pass()) out.push_back(c.name);
  return out;
}

std::string format_witness(const Witness& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": ";
    if (c.pass())
      os << (c.informational ? "yes" : "pass");
    else
      os << (c.informational ? "no" : "FAIL") << " (" << c.failures << ") first " << format_witness(c.witnesses.front());
    os << "\n";
  }
  return os.str();
}

}  // namespace xmodcat
