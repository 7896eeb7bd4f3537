/* Copyright 2026 The GLOW Router Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <cmath>
#include <string>

#include "glow/ilp.hpp"
#include "glow/ingest.hpp"

namespace glow::ilp {
namespace {

constexpr size_t kLineWidth = 250;

// Appends tokens, breaking the line before it would exceed kLineWidth.
class LineWriter {
public:
  explicit LineWriter(std::string& out) : out_(out) {}

  void begin(const std::string& head) {
    out_ += ' ';
    out_ += head;
    col_ = head.size() + 1;
  }
  void token(const std::string& tok) {
    if (col_ + tok.size() + 1 > kLineWidth) {
      out_ += "\n   ";
      col_ = 3;
    }
    out_ += ' ';
    out_ += tok;
    col_ += tok.size() + 1;
  }
  void end() { out_ += '\n'; }

private:
  std::string& out_;
  size_t col_ = 0;
};

void write_terms(LineWriter& w, const std::vector<Term>& terms, const std::vector<Variable>& vars) {
  bool first = true;
  for (const Term& t : terms) {
    std::string tok;
    if (t.coef < 0) {
      tok = "- ";
    } else if (!first) {
      tok = "+ ";
    }
    const double mag = std::abs(t.coef);
    if (mag != 1.0) {
      tok += glow::format_double(mag) + ' ';
    }
    tok += vars[t.var].name;
    w.token(tok);
    first = false;
  }
  if (first) {
    w.token("0");
  }
}

} // namespace

std::string export_lp(const Model& m) {
  m.validate();
  const auto& vars = m.variables();
  std::string out = "\\ generated by glow\n";

  out += "Minimize\n";
  {
    std::vector<Term> obj;
    for (int j = 0; j < m.variable_count(); ++j) {
      if (m.objective()[j] != 0.0) {
        obj.push_back({j, m.objective()[j]});
      }
    }
    LineWriter w(out);
    w.begin("obj:");
    if (obj.empty() && !vars.empty()) {
      obj.push_back({0, 0.0});
      w.token("0 " + vars[0].name);
    } else {
      write_terms(w, obj, vars);
    }
    w.end();
  }

  out += "Subject To\n";
  for (const auto& row : m.constraints()) {
    LineWriter w(out);
    w.begin(row.name + ':');
    write_terms(w, row.terms, vars);
    const char* op = row.sense == Sense::less_equal ? "<=" : row.sense == Sense::equal ? "=" : ">=";
    w.token(std::string(op) + ' ' + glow::format_double(row.rhs));
    w.end();
  }

  // Binaries carry implicit [0, 1] bounds; everything else is written out.
  out += "Bounds\n";
  for (const auto& v : vars) {
    const bool binary = v.integer && v.lower == 0.0 && v.upper == 1.0;
    if (binary) {
      continue;
    }
    if (v.lower == v.upper) {
      out += ' ' + v.name + " = " + glow::format_double(v.lower) + '\n';
    } else {
      out += ' ' + glow::format_double(v.lower) + " <= " + v.name +
             " <= " + glow::format_double(v.upper) + '\n';
    }
  }

  std::string binaries, generals;
  {
    LineWriter wb(binaries), wg(generals);
    bool any_b = false, any_g = false;
    for (const auto& v : vars) {
      if (!v.integer) {
        continue;
      }
      const bool binary = v.lower == 0.0 && v.upper == 1.0;
      LineWriter& w = binary ? wb : wg;
      bool& any = binary ? any_b : any_g;
      if (!any) {
        w.begin(v.name);
        any = true;
      } else {
        w.token(v.name);
      }
    }
    if (any_b) {
      wb.end();
    }
    if (any_g) {
      wg.end();
    }
  }
  if (!binaries.empty()) {
    out += "Binaries\n" + binaries;
  }
  if (!generals.empty()) {
    out += "Generals\n" + generals;
  }
  out += "End\n";
  return out;
}

} // namespace glow::ilp
