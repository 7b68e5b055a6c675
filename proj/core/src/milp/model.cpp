#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "scg/milp.hpp"

namespace scg {

int MilpModel::add_variable(std::string name, VarKind kind, double lower, double upper) {
  variables.push_back(MilpVariable{std::move(name), kind, lower, upper});
  return static_cast<int>(variables.size()) - 1;
}

void MilpModel::add_constraint(std::string name, LinearTerms terms, Relation rel, double rhs) {
  // Merge repeated variables so every emitted row lists each name once.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  LinearTerms merged;
  for (const auto& [v, c] : terms) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += c;
    } else {
      merged.emplace_back(v, c);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& t) { return t.second == 0.0; }),
               merged.end());
  constraints.push_back(MilpConstraint{std::move(name), std::move(merged), rel, rhs});
}

int MilpModel::find(const std::string& name) const {
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (variables[j].name == name) return static_cast<int>(j);
  }
  return -1;
}

std::size_t MilpModel::count_prefix(const std::string& prefix) const {
  return static_cast<std::size_t>(std::count_if(variables.begin(), variables.end(), [&](const MilpVariable& v) {
    return v.name.compare(0, prefix.size(), prefix) == 0;
  }));
}

LpProblem MilpModel::relaxation() const {
  LpProblem lp;
  const std::size_t n = variables.size();
  lp.objective.assign(n, 0.0);
  for (const auto& [v, c] : objective) lp.objective[static_cast<std::size_t>(v)] += c;
  for (const auto& var : variables) {
    lp.lower.push_back(var.lower);
    lp.upper.push_back(var.upper);
  }
  lp.rows.reserve(constraints.size());
  for (const auto& con : constraints) {
    LpRow row{std::vector<double>(n, 0.0), con.relation, con.rhs};
    for (const auto& [v, c] : con.terms) row.coeffs[static_cast<std::size_t>(v)] += c;
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

double model_violation(const MilpModel& model, const std::vector<double>& x) {
  double worst = 0;
  for (std::size_t j = 0; j < model.variables.size(); ++j) {
    const auto& v = model.variables[j];
    worst = std::max({worst, v.lower - x[j], x[j] - v.upper});
    if (v.kind == VarKind::binary) worst = std::max(worst, std::abs(x[j] - std::round(x[j])));
  }
  for (const auto& con : model.constraints) {
    double lhs = 0;
    for (const auto& [v, c] : con.terms) lhs += c * x[static_cast<std::size_t>(v)];
    const double d = lhs - con.rhs;
    if (con.relation == Relation::less_equal) worst = std::max(worst, d);
    if (con.relation == Relation::greater_equal) worst = std::max(worst, -d);
    if (con.relation == Relation::equal) worst = std::max(worst, std::abs(d));
  }
  return worst;
}

const char* to_string(MilpStatus status) {
  switch (status) {
    case MilpStatus::optimal: return "Optimal";
    case MilpStatus::infeasible: return "Infeasible";
    case MilpStatus::unbounded: return "Unbounded";
    case MilpStatus::timeout: return "Timeout";
  }
  return "?";
}

double relative_gap(double upper, double lower) {
  if (!std::isfinite(upper)) return std::numeric_limits<double>::infinity();
  const double diff = std::max(0.0, upper - lower);
  if (diff <= 1e-9) return 0.0;
  if (std::abs(upper) < 1e-12) return std::numeric_limits<double>::infinity();
  return diff / std::abs(upper);
}

// ---------------------------------------------------------------------------
// LP file writer

namespace {

constexpr std::size_t kMaxLine = 255;
constexpr std::size_t kWrapAt = 200;

std::string lp_name(const std::string& raw) {
  static const std::string extra = "!\"#$%&()/,.;?@_`'{}|~";
  std::string s;
  for (char ch : raw) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || extra.find(ch) != std::string::npos;
    s.push_back(ok ? ch : '_');
  }
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '.' || s[0] == 'e' || s[0] == 'E') {
    s.insert(s.begin(), '_');
  }
  if (s.size() > kMaxLine) s.resize(kMaxLine);
  return s;
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes " name: t1 t2 ..." wrapping before lines grow too long.
void write_expr(std::ostringstream& out, const std::string& label, const LinearTerms& terms,
                const std::vector<std::string>& names, const std::string& tail) {
  std::string line = " " + label + ":";
  auto flush_if_long = [&](std::size_t extra) {
    if (line.size() + extra > kWrapAt) {
      out << line << "\n";
      line = "  ";
    }
  };
  if (terms.empty()) {
    line += " 0 " + names.front();
  }
  bool first = true;
  for (const auto& [v, c] : terms) {
    std::string piece;
    if (c < 0) {
      piece = " - ";
    } else if (!first) {
      piece = " + ";
    } else {
      piece = " ";
    }
    const double mag = std::abs(c);
    if (mag != 1.0) piece += number(mag) + " ";
    piece += names[static_cast<std::size_t>(v)];
    flush_if_long(piece.size());
    line += piece;
    first = false;
  }
  flush_if_long(tail.size());
  line += tail;
  out << line << "\n";
}

}  // namespace

std::string emit_lp_format(const MilpModel& model) {
  std::vector<std::string> names;
  names.reserve(model.variables.size());
  for (const auto& v : model.variables) names.push_back(lp_name(v.name));
  if (names.empty()) names.push_back("_dummy");

  std::ostringstream out;
  out << "\\ leader commitment model\n";
  out << "Minimize\n";
  if (model.objective.empty()) {
    out << " obj: 0\n";
  } else {
    write_expr(out, "obj", model.objective, names, "");
  }
  out << "Subject To\n";
  for (const auto& con : model.constraints) {
    const char* rel = con.relation == Relation::less_equal ? "<=" : con.relation == Relation::greater_equal ? ">=" : "=";
    write_expr(out, lp_name(con.name), con.terms, names, std::string(" ") + rel + " " + number(con.rhs));
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < model.variables.size(); ++j) {
    const auto& v = model.variables[j];
    if (v.kind == VarKind::binary && v.lower == 0 && v.upper == 1) continue;
    if (v.lower == v.upper) {
      out << " " << names[j] << " = " << number(v.lower) << "\n";
    } else if (v.lower == -kInf && v.upper == kInf) {
      out << " " << names[j] << " free\n";
    } else if (v.lower == 0 && v.upper == kInf) {
      continue;
    } else {
      out << " " << (v.lower == -kInf ? "-inf" : number(v.lower)) << " <= " << names[j] << " <= "
          << (v.upper == kInf ? "+inf" : number(v.upper)) << "\n";
    }
  }
  bool any_binary = false;
  for (std::size_t j = 0; j < model.variables.size(); ++j) {
    if (model.variables[j].kind != VarKind::binary) continue;
    if (!any_binary) out << "Binary\n";
    any_binary = true;
    out << " " << names[j] << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace scg
