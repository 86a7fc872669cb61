#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nekrasov/algebra/factored_rational.hpp"
#include "nekrasov/algebra/qseries.hpp"

namespace nek {

using json = nlohmann::ordered_json;

// {"scalar": "p/q", "num": "...", "den": [["eps1+eps2-a1+a2", 2], ...]}
inline json to_json(const FactoredRational& f, const VariableSpace& vars) {
  json den = json::array();
  if (f.is_zero()) return {{"scalar", "0"}, {"num", "0"}, {"den", std::move(den)}, {"text", "0"}};
  for (const auto& [form, mult] : f.denominator()) den.push_back(json::array({form.render(vars), mult}));
  return {{"scalar", to_string(f.scalar())}, {"num", f.numerator().render(vars)}, {"den", std::move(den)}, {"text", f.render(vars)}};
}

inline json q_exponent_json(const Rational& offset, int n) {
  if (offset == 0) return n;
  return to_string(offset + n);
}

struct Verdict {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct NamedSeries {
  std::string name;
  QSeries series;
};

// Everything a command reports. Timing is only filled when asked for, so
// that repeated runs produce identical bytes.
struct Report {
  json config = json::object();
  std::vector<NamedSeries> series;
  std::vector<Verdict> verdicts;
  std::map<std::string, double> timing_ms;
  bool with_timing = false;

  bool all_ok() const {
    for (const auto& v : verdicts) {
      if (!v.ok) return false;
    }
    return true;
  }

  json to_json(const VariableSpace& vars) const {
    json out;
    out["config"] = config;
    json s = json::array();
    for (const auto& named : series) {
      for (int n = 0; n <= named.series.order(); ++n) {
        s.push_back({{"name", named.name},
                     {"q_exponent", q_exponent_json(named.series.offset(), n)},
                     {"value", nek::to_json(named.series[n], vars)}});
      }
    }
    out["series"] = std::move(s);
    json v = json::array();
    for (const auto& verdict : verdicts) v.push_back({{"name", verdict.name}, {"ok", verdict.ok}, {"detail", verdict.detail}});
    out["verdicts"] = std::move(v);
    if (with_timing) out["timing_ms"] = timing_ms;
    return out;
  }

  std::string to_text(const VariableSpace& vars) const {
    std::ostringstream out;
    out << "config " << config.dump() << "\n";
    for (const auto& named : series) {
      for (int n = 0; n <= named.series.order(); ++n) {
        out << named.name << " q^" << q_exponent_json(named.series.offset(), n).dump() << ": "
            << named.series[n].render(vars) << "\n";
      }
    }
    for (const auto& v : verdicts) {
      out << (v.ok ? "PASS " : "FAIL ") << v.name;
      if (!v.detail.empty()) out << " : " << v.detail;
      out << "\n";
    }
    if (with_timing) {
      for (const auto& [name, ms] : timing_ms) out << "time " << name << " " << ms << " ms\n";
    }
    return out.str();
  }
};

}  // namespace nek
