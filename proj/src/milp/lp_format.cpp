// Copyright 2026 The sscopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sscopt/milp/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace sscopt::milp {
namespace {

constexpr const char* kRelaxableTag = "\\@relaxable";

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_terms(std::ostringstream& os, const std::vector<LinTerm>& terms, const Model& m) {
  bool first = true;
  for (const LinTerm& t : terms) {
    if (first) {
      os << (t.coef < 0 ? "- " : "") << num(std::abs(t.coef)) << ' ' << m.var(t.var).id;
      first = false;
    } else {
      os << (t.coef < 0 ? " - " : " + ") << num(std::abs(t.coef)) << ' ' << m.var(t.var).id;
    }
  }
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

enum class Section { kNone, kObjective, kConstraints, kBounds, kGenerals, kBinaries, kEnd };

bool keyword(const std::string& line, Section* s, bool* maximize) {
  const std::string l = lower(trim(line));
  if (l == "minimize" || l == "minimum" || l == "min") {
    *s = Section::kObjective;
    *maximize = false;
  } else if (l == "maximize" || l == "maximum" || l == "max") {
    *s = Section::kObjective;
    *maximize = true;
  } else if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") {
    *s = Section::kConstraints;
  } else if (l == "bounds" || l == "bound") {
    *s = Section::kBounds;
  } else if (l == "generals" || l == "general" || l == "gen" || l == "integers") {
    *s = Section::kGenerals;
  } else if (l == "binaries" || l == "binary" || l == "bin") {
    *s = Section::kBinaries;
  } else if (l == "end") {
    *s = Section::kEnd;
  } else {
    return false;
  }
  return true;
}

enum class Tok { kNum, kName, kPlus, kMinus, kColon, kLe, kGe, kEq };

struct Token {
  Token(Tok k, double v = 0.0, std::string t = {}) : kind(k), value(v), text(std::move(t)) {}
  Tok kind;
  double value;
  std::string text;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("!\"#$%&()/,.;?@_`'{}|~[]").find(c) != std::string_view::npos;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '\\') {
      break;
    } else if (c == '+') {
      out.emplace_back(Tok::kPlus);
      ++i;
    } else if (c == '-') {
      out.emplace_back(Tok::kMinus);
      ++i;
    } else if (c == ':') {
      out.emplace_back(Tok::kColon);
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t j = i + 1;
      if (j < line.size() && (line[j] == '=' || line[j] == '<' || line[j] == '>')) ++j;
      const std::string op = line.substr(i, j - i);
      if (op == "=") {
        out.emplace_back(Tok::kEq);
      } else if (op.find('<') != std::string::npos) {
        out.emplace_back(Tok::kLe);
      } else {
        out.emplace_back(Tok::kGe);
      }
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double v = std::strtod(line.c_str() + i, &end);
      if (end == line.c_str() + i) throw ParseError("bad number in: " + line);
      out.emplace_back(Tok::kNum, v);
      i = static_cast<std::size_t>(end - line.c_str());
    } else if (name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && name_char(line[j])) ++j;
      std::string name = line.substr(i, j - i);
      const std::string l = lower(name);
      if (l == "inf" || l == "infinity") {
        out.emplace_back(Tok::kNum, kInf);
      } else {
        out.emplace_back(Tok::kName, 0.0, std::move(name));
      }
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in: " + line);
    }
  }
  return out;
}

struct VarInfo {
  double lo = 0.0;
  double up = kInf;
  bool has_bounds = false;
  VarDomain domain = VarDomain::kContinuous;
  long bound_order = -1;
};

class Parser {
 public:
  ParsedLp parse(const std::string& text);

 private:
  int var(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(names_.size());
    index_.emplace(name, idx);
    names_.push_back(name);
    info_.emplace_back();
    return idx;
  }
  // Parses "[+-] [num] [name]" sequences; constants accumulate into constant.
  std::vector<LinTerm> expression(const std::vector<Token>& toks, std::size_t* pos, double* constant);
  void flush_row();
  void bounds_line(const std::vector<Token>& toks);

  std::vector<std::string> names_;
  std::vector<VarInfo> info_;
  std::unordered_map<std::string, int> index_;
  struct RawRow {
    std::vector<LinTerm> terms;
    Sense sense;
    double rhs;
    Block block;
    std::string label;
  };
  std::vector<RawRow> rows_;
  std::vector<Token> pending_;
  bool pending_relaxable_ = false;
  bool next_relaxable_ = false;
  long bound_counter_ = 0;
};

std::vector<LinTerm> Parser::expression(const std::vector<Token>& toks, std::size_t* pos,
                                        double* constant) {
  std::vector<LinTerm> terms;
  std::size_t& i = *pos;
  while (i < toks.size()) {
    const Tok k = toks[i].kind;
    if (k == Tok::kLe || k == Tok::kGe || k == Tok::kEq) break;
    double sign = 1.0;
    bool any = false;
    while (i < toks.size() && (toks[i].kind == Tok::kPlus || toks[i].kind == Tok::kMinus)) {
      if (toks[i].kind == Tok::kMinus) sign = -sign;
      ++i;
      any = true;
    }
    double coef = 1.0;
    bool has_num = false;
    if (i < toks.size() && toks[i].kind == Tok::kNum) {
      coef = toks[i].value;
      has_num = true;
      ++i;
    }
    if (i < toks.size() && toks[i].kind == Tok::kName) {
      terms.push_back({var(toks[i].text), sign * coef});
      ++i;
    } else if (has_num) {
      *constant += sign * coef;
    } else if (any) {
      throw ParseError("dangling sign in expression");
    } else {
      throw ParseError("unexpected token in expression");
    }
  }
  return terms;
}

void Parser::flush_row() {
  if (pending_.empty()) return;
  std::size_t i = 0;
  std::string label;
  if (pending_.size() >= 2 && pending_[0].kind == Tok::kName && pending_[1].kind == Tok::kColon) {
    label = pending_[0].text;
    i = 2;
  }
  double constant = 0.0;
  std::vector<LinTerm> terms = expression(pending_, &i, &constant);
  if (i >= pending_.size()) throw ParseError("constraint " + label + " has no sense");
  Sense sense = pending_[i].kind == Tok::kLe ? Sense::kLessEqual
                : pending_[i].kind == Tok::kGe ? Sense::kGreaterEqual
                                               : Sense::kEqual;
  ++i;
  double sign = 1.0;
  while (i < pending_.size() && (pending_[i].kind == Tok::kPlus || pending_[i].kind == Tok::kMinus)) {
    if (pending_[i].kind == Tok::kMinus) sign = -sign;
    ++i;
  }
  if (i >= pending_.size() || pending_[i].kind != Tok::kNum) {
    throw ParseError("constraint " + label + " lacks a numeric right-hand side");
  }
  const double rhs = sign * pending_[i].value - constant;
  rows_.push_back({std::move(terms), sense, rhs,
                   pending_relaxable_ ? Block::kRelaxable : Block::kKept, label});
  pending_.clear();
  pending_relaxable_ = false;
}

void Parser::bounds_line(const std::vector<Token>& t) {
  auto signed_num = [&](std::size_t& i) -> double {
    double s = 1.0;
    while (i < t.size() && (t[i].kind == Tok::kPlus || t[i].kind == Tok::kMinus)) {
      if (t[i].kind == Tok::kMinus) s = -s;
      ++i;
    }
    if (i >= t.size() || t[i].kind != Tok::kNum) throw ParseError("bad bounds line");
    return s * t[i++].value;
  };
  auto touch = [&](int v) {
    VarInfo& vi = info_[v];
    if (vi.bound_order < 0) vi.bound_order = bound_counter_++;
    vi.has_bounds = true;
    return &vi;
  };
  std::size_t i = 0;
  if (t.empty()) return;
  if (t[0].kind == Tok::kName) {
    VarInfo* vi = touch(var(t[0].text));
    i = 1;
    if (i < t.size() && t[i].kind == Tok::kName && lower(t[i].text) == "free") {
      vi->lo = -kInf;
      vi->up = kInf;
      return;
    }
    if (i >= t.size()) throw ParseError("bad bounds line");
    const Tok op = t[i++].kind;
    const double v = signed_num(i);
    if (op == Tok::kLe) vi->up = v;
    else if (op == Tok::kGe) vi->lo = v;
    else vi->lo = vi->up = v;
    return;
  }
  const double first = signed_num(i);
  if (i >= t.size()) throw ParseError("bad bounds line");
  const Tok op1 = t[i++].kind;
  if (i >= t.size() || t[i].kind != Tok::kName) throw ParseError("bad bounds line");
  VarInfo* vi = touch(var(t[i++].text));
  if (op1 == Tok::kLe) vi->lo = first;
  else if (op1 == Tok::kGe) vi->up = first;
  else vi->lo = vi->up = first;
  if (i < t.size()) {
    const Tok op2 = t[i++].kind;
    const double second = signed_num(i);
    if (op2 == Tok::kLe) vi->up = second;
    else if (op2 == Tok::kGe) vi->lo = second;
    else vi->lo = vi->up = second;
  }
}

ParsedLp Parser::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Section section = Section::kNone;
  bool maximize = false;
  std::vector<Token> objective_toks;
  std::vector<std::pair<int, VarDomain>> domains;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind(kRelaxableTag, 0) == 0) {
      next_relaxable_ = true;
      continue;
    }
    if (t[0] == '\\') continue;
    Section next;
    if (keyword(t, &next, &maximize)) {
      if (section == Section::kConstraints) flush_row();
      section = next;
      if (section == Section::kEnd) break;
      continue;
    }
    std::vector<Token> toks = tokenize(t);
    switch (section) {
      case Section::kNone:
        throw ParseError("content before the objective section");
      case Section::kObjective:
        objective_toks.insert(objective_toks.end(), toks.begin(), toks.end());
        break;
      case Section::kConstraints: {
        // A label at the start of a line begins a new row.
        const bool labelled = toks.size() >= 2 && toks[0].kind == Tok::kName && toks[1].kind == Tok::kColon;
        bool complete = false;
        if (!pending_.empty()) {
          for (std::size_t k = 0; k + 1 < pending_.size(); ++k) {
            const Tok kk = pending_[k].kind;
            if ((kk == Tok::kLe || kk == Tok::kGe || kk == Tok::kEq) && pending_.back().kind == Tok::kNum) complete = true;
          }
        }
        if (labelled || complete) flush_row();
        if (pending_.empty()) {
          pending_relaxable_ = next_relaxable_;
          next_relaxable_ = false;
        }
        pending_.insert(pending_.end(), toks.begin(), toks.end());
        break;
      }
      case Section::kBounds:
        bounds_line(toks);
        break;
      case Section::kGenerals:
      case Section::kBinaries:
        for (const Token& tk : toks) {
          if (tk.kind != Tok::kName) throw ParseError("expected variable names");
          domains.push_back({var(tk.text), section == Section::kBinaries ? VarDomain::kBinary : VarDomain::kInteger});
        }
        break;
      case Section::kEnd:
        break;
    }
  }
  if (section == Section::kConstraints) flush_row();

  ParsedLp out;
  {
    std::size_t i = 0;
    if (objective_toks.size() >= 2 && objective_toks[0].kind == Tok::kName && objective_toks[1].kind == Tok::kColon) i = 2;
    double constant = 0.0;
    out.objective.terms = expression(objective_toks, &i, &constant);
    out.objective.constant = constant;
    if (maximize) out.objective = -1.0 * out.objective;
  }
  for (const auto& [v, d] : domains) {
    info_[v].domain = d;
    if (d == VarDomain::kBinary && !info_[v].has_bounds) {
      info_[v].lo = 0.0;
      info_[v].up = 1.0;
    }
  }
  // Column order: bounds section first, then first appearance.
  std::vector<int> order(names_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const long oa = info_[a].bound_order < 0 ? std::numeric_limits<long>::max() : info_[a].bound_order;
    const long ob = info_[b].bound_order < 0 ? std::numeric_limits<long>::max() : info_[b].bound_order;
    return oa < ob;
  });
  std::vector<int> remap(names_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int old = order[k];
    remap[old] = static_cast<int>(k);
    const VarInfo& vi = info_[old];
    if (std::isinf(vi.lo)) throw ParseError("free or -inf lower bounds are not supported: " + names_[old]);
    out.model.add_var(names_[old], vi.domain, vi.lo, vi.up);
  }
  for (LinTerm& t : out.objective.terms) t.var = remap[t.var];
  out.objective.terms = canonical_terms(std::move(out.objective.terms));
  for (RawRow& r : rows_) {
    for (LinTerm& t : r.terms) t.var = remap[t.var];
    out.model.add_constraint({std::move(r.terms), r.sense, r.rhs, r.block, r.label});
  }
  return out;
}

}  // namespace

std::string export_lp(const Model& model, const LinObjective& objective) {
  std::ostringstream os;
  os << "\\ sscopt LP export\n";
  os << "Minimize\n obj: ";
  std::vector<LinTerm> terms = canonical_terms(objective.terms);
  if (terms.empty()) {
    os << num(objective.constant);
  } else {
    write_terms(os, terms, model);
    if (objective.constant != 0.0) {
      os << (objective.constant < 0 ? " - " : " + ") << num(std::abs(objective.constant));
    }
  }
  os << "\nSubject To\n";
  for (const LinConstraint& r : model.constraints()) {
    if (r.block == Block::kRelaxable) os << ' ' << kRelaxableTag << '\n';
    os << ' ' << r.label << ": ";
    write_terms(os, r.terms, model);
    os << ' ' << to_string(r.sense) << ' ' << num(r.rhs) << '\n';
  }
  os << "Bounds\n";
  for (const VarSpec& v : model.vars()) {
    if (v.lower == v.upper) {
      os << ' ' << v.id << " = " << num(v.lower) << '\n';
    } else if (std::isinf(v.upper)) {
      os << ' ' << v.id << " >= " << num(v.lower) << '\n';
    } else {
      os << ' ' << num(v.lower) << " <= " << v.id << " <= " << num(v.upper) << '\n';
    }
  }
  os << "Generals\n";
  for (const VarSpec& v : model.vars()) {
    if (v.domain == VarDomain::kInteger) os << ' ' << v.id << '\n';
  }
  os << "Binaries\n";
  for (const VarSpec& v : model.vars()) {
    if (v.domain == VarDomain::kBinary) os << ' ' << v.id << '\n';
  }
  os << "End\n";
  return os.str();
}

ParsedLp parse_lp(const std::string& text) {
  Parser p;
  return p.parse(text);
}

nlohmann::json result_to_json(const Model& model, const MilpResult& result) {
  nlohmann::json j;
  j["status"] = to_string(result.status);
  j["objective"] = result.has_solution() ? nlohmann::json(result.objective) : nlohmann::json(nullptr);
  j["best_bound"] = std::isfinite(result.best_bound) ? nlohmann::json(result.best_bound) : nlohmann::json(nullptr);
  nlohmann::json a = nlohmann::json::object();
  for (std::size_t k = 0; k < result.assignment.size(); ++k) {
    a[model.var(static_cast<int>(k)).id] = result.assignment[k];
  }
  j["assignment"] = std::move(a);
  return j;
}

MilpResult result_from_json(const Model& model, const nlohmann::json& j) {
  MilpResult r;
  r.status = milp_status_from_string(j.at("status").get<std::string>());
  r.objective = j.at("objective").is_null() ? kInf : j.at("objective").get<double>();
  r.best_bound = j.at("best_bound").is_null() ? -kInf : j.at("best_bound").get<double>();
  const nlohmann::json& a = j.at("assignment");
  if (!a.empty()) {
    r.assignment.assign(model.num_vars(), 0.0);
    for (auto it = a.begin(); it != a.end(); ++it) {
      const int idx = model.find_var(it.key());
      if (idx < 0) throw ParseError("result references unknown variable " + it.key());
      r.assignment[idx] = it.value().get<double>();
    }
  }
  return r;
}

}  // namespace sscopt::milp
