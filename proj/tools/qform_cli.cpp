// Copyright 2026 The qform authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qform/arith.hpp"
#include "qform/basis.hpp"
#include "qform/decomp.hpp"
#include "qform/errors.hpp"
#include "qform/genfun.hpp"
#include "qform/modmeta.hpp"
#include "qform/oracle.hpp"
#include "qform/qseries.hpp"
#include "qform/rational.hpp"
#include "qform/suites.hpp"

namespace {

using nlohmann::json;
using namespace qform;

// Exit codes: 0 ok, 2 bad input, 3 precondition violated, 4 unsupported
// space, 5 verification failure.
int exit_code_for(const EngineError& error) {
  if (dynamic_cast<const UnsupportedSpace*>(&error) ||
      dynamic_cast<const UnknownLabel*>(&error) ||
      dynamic_cast<const IncompleteBasis*>(&error)) {
    return 4;
  }
  if (dynamic_cast<const NoSolution*>(&error) ||
      dynamic_cast<const UnderdeterminedBasis*>(&error)) {
    return 5;
  }
  if (dynamic_cast<const BadInput*>(&error)) return 2;
  return 3;
}

long require_long(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw BadInput(std::string(what) + " must be an integer");
  }
  return value.get<long>();
}

std::vector<long> parse_dilations(const json& value, const char* what) {
  if (!value.is_array()) {
    throw BadInput(std::string(what) + " must be an array of integers");
  }
  std::vector<long> out;
  for (const json& entry : value) out.push_back(require_long(entry, what));
  return out;
}

FigurateGroup parse_figurate_group(const json& value) {
  if (!value.is_object() || !value.contains("a") ||
      !value.contains("coeffs")) {
    throw BadInput("figurate must be an object {a, coeffs}");
  }
  for (const auto& [key, ignored] : value.items()) {
    (void)ignored;
    if (key != "a" && key != "coeffs") {
      throw BadInput("unknown figurate key: " + key);
    }
  }
  FigurateGroup group;
  group.a = require_long(value.at("a"), "figurate a");
  group.coeffs = parse_dilations(value.at("coeffs"), "figurate coeffs");
  return group;
}

// A form document carries the component lists plus optional presentation
// keys (precision, format) that command-line flags override.
struct FormDocument {
  FormSpec spec;
  long precision = 0;     // 0: not set
  std::string format;     // empty: not set
};

FormDocument parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw BadInput("form document is not a JSON object");
  }
  FormDocument out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "hex") {
      out.spec.hex = parse_dilations(value, "hex");
    } else if (key == "squares") {
      out.spec.squares = parse_dilations(value, "squares");
    } else if (key == "triangular") {
      out.spec.triangular = parse_dilations(value, "triangular");
    } else if (key == "figurate") {
      if (value.is_array()) {
        for (const json& group : value) {
          out.spec.figurate.push_back(parse_figurate_group(group));
        }
      } else {
        out.spec.figurate.push_back(parse_figurate_group(value));
      }
    } else if (key == "precision") {
      out.precision = require_long(value, "precision");
    } else if (key == "format") {
      if (!value.is_string()) throw BadInput("format must be a string");
      out.format = value.get<std::string>();
    } else {
      throw BadInput("unknown form document key: " + key);
    }
  }
  validate(out.spec);
  return out;
}

// The spec argument is inline JSON when it looks like an object, otherwise
// a path to a JSON file.
FormDocument load_document(const std::string& argument) {
  std::string text = argument;
  if (argument.find('{') == std::string::npos) {
    std::ifstream in(argument);
    if (!in) throw BadInput("cannot read form document: " + argument);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return parse_document(text);
}

std::string character_display(const DirichletCharacter& chi) {
  if (chi.principal) return "χ₀";
  if (chi.is_trivial()) return "1";
  std::string digits = chi.discriminant.get_str();
  if (!digits.empty() && digits[0] == '-') {
    return "χ−" + digits.substr(1);
  }
  return "χ" + digits;
}

void emit_rows(const std::string& format, const char* value_header,
               const std::vector<std::pair<long, std::string>>& rows) {
  if (format == "json") {
    json out = json::array();
    for (const auto& [n, value] : rows) {
      out.push_back(json{{"n", n}, {value_header, value}});
    }
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n," << value_header << "\n";
    for (const auto& [n, value] : rows) std::cout << n << "," << value << "\n";
  } else {
    for (const auto& [n, value] : rows) std::cout << n << " " << value << "\n";
  }
}

// Default window: twice the Sturm bound of the space the form lives in,
// floored at 64; plain 64 when the space cannot be inferred.
long default_precision(const FormSpec& spec) {
  try {
    SpaceMeta meta = space_meta(spec);
    long sturm = sturm_bound(meta.weight, meta.level);
    return std::max(2 * sturm, 64L);
  } catch (const EngineError&) {
    return 64;
  }
}

int cmd_expand(const FormDocument& doc, long prec, const std::string& format) {
  if (prec <= 0) prec = doc.precision > 0 ? doc.precision : 0;
  if (prec <= 0) prec = default_precision(doc.spec);
  FracQSeries series = form_series(doc.spec, prec);
  std::vector<std::pair<long, std::string>> rows;
  for (long i = 0; i < series.prec(); ++i) {
    Q exponent = series.offset + i;
    rows.emplace_back(static_cast<long>(exponent.get_num().get_si()),
                      series.coeffs[static_cast<size_t>(i)].get_str());
  }
  emit_rows(format, "coeff", rows);
  return 0;
}

int cmd_count(const FormDocument& doc, long nmax, const std::string& format) {
  if (nmax < 0) nmax = 30;
  std::vector<std::pair<long, std::string>> rows;
  for (long n = 0; n <= nmax; ++n) {
    rows.emplace_back(n, count(doc.spec, n).get_str());
  }
  emit_rows(format, "count", rows);
  return 0;
}

int cmd_modcheck(const FormDocument& doc, const std::string& format) {
  SpaceMeta meta = space_meta(doc.spec);
  std::string character = character_display(meta.character);
  if (format == "json") {
    json out{{"weight", meta.weight},
             {"level", meta.level},
             {"character", character},
             {"shift", meta.shift.get_str()}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "weight,level,character,shift\n"
              << meta.weight << "," << meta.level << "," << character << ","
              << meta.shift.get_str() << "\n";
  } else {
    std::cout << "weight " << meta.weight << ", level " << meta.level << ", "
              << character << ", shift " << meta.shift.get_str() << "\n";
  }
  return 0;
}

int cmd_decompose(const FormDocument& doc, long prec, long verify_to,
                  const std::string& format) {
  SpaceMeta meta = space_meta(doc.spec);
  Z disc = meta.character.principal ? Z(1) : meta.character.fundamental;
  Basis basis = assemble_basis(meta.weight, meta.level, disc);
  if (prec <= 0) prec = doc.precision > 0 ? doc.precision : 0;
  if (prec <= 0) prec = std::max(2 * basis.sturm(), 64L);
  if (verify_to < 0) verify_to = prec - 1;
  if (verify_to >= prec) prec = verify_to + 1;

  FracQSeries target = normalized_form_series(doc.spec, prec);
  Decomposition d = decompose(target, basis, verify_to);
  std::string formula = render_formula(d);

  if (format == "json") {
    json terms = json::array();
    for (size_t i = 0; i < d.element_labels.size(); ++i) {
      terms.push_back(json{{"element", d.element_labels[i]},
                           {"coefficient", d.coefficients[i].get_str()}});
    }
    json out{{"space", d.space_label},     {"weight", d.weight},
             {"level", d.level},           {"shift", meta.shift.get_str()},
             {"terms", terms},             {"verified_up_to", d.verified_up_to},
             {"formula", formula}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "element,coefficient\n";
    for (size_t i = 0; i < d.element_labels.size(); ++i) {
      std::cout << d.element_labels[i] << "," << d.coefficients[i].get_str()
                << "\n";
    }
  } else {
    std::cout << "space " << d.space_label << "\n"
              << "shift " << meta.shift.get_str() << "\n";
    for (size_t i = 0; i < d.element_labels.size(); ++i) {
      std::cout << d.element_labels[i] << ": " << d.coefficients[i].get_str()
                << "\n";
    }
    std::cout << "verified through n = " << d.verified_up_to << "\n"
              << "formula: " << formula << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, long nmax,
               const std::string& format) {
  std::vector<SuiteReport> reports = run_suites(suite, nmax > 0 ? nmax : 0);
  bool all_passed = true;
  if (format == "json") {
    json out = json::array();
    for (const SuiteReport& report : reports) {
      json items = json::array();
      for (const SuiteItem& item : report.items) {
        items.push_back(json{{"name", item.name},
                             {"passed", item.passed},
                             {"note", item.note}});
      }
      out.push_back(json{{"suite", report.suite},
                         {"items", items},
                         {"passed", report.all_passed()}});
      all_passed = all_passed && report.all_passed();
    }
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "suite,item,passed,note\n";
    for (const SuiteReport& report : reports) {
      for (const SuiteItem& item : report.items) {
        std::string note = item.note;
        for (char& c : note) {
          if (c == ',') c = ';';
        }
        std::cout << report.suite << "," << item.name << ","
                  << (item.passed ? "ok" : "FAIL") << "," << note << "\n";
      }
      all_passed = all_passed && report.all_passed();
    }
  } else {
    for (const SuiteReport& report : reports) {
      std::cout << "== " << report.suite << " ==\n";
      long passed = 0;
      for (const SuiteItem& item : report.items) {
        std::cout << (item.passed ? "ok   " : "FAIL ") << item.name;
        if (!item.note.empty()) std::cout << " — " << item.note;
        std::cout << "\n";
        if (item.passed) ++passed;
      }
      std::cout << "suite " << report.suite << ": " << passed << "/"
                << report.items.size() << " passed\n";
      all_passed = all_passed && report.all_passed();
    }
  }
  return all_passed ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact q-series engine for representation numbers of mixed "
      "hexagonal/square/triangular and figurate forms"};
  app.require_subcommand(1);

  std::string spec_arg;
  std::string suite_arg;
  std::string format;
  long prec = 0;
  long nmax = -1;
  long verify_to = -1;

  CLI::App* expand =
      app.add_subcommand("expand", "q-expansion of the generating function");
  expand->add_option("spec", spec_arg, "form document (JSON file or inline)")
      ->required();
  expand->add_option("--prec", prec, "number of coefficients");
  expand->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* count_cmd = app.add_subcommand(
      "count", "brute-force representation counts (independent oracle)");
  count_cmd->add_option("spec", spec_arg, "form document")->required();
  count_cmd->add_option("--nmax", nmax, "largest index to count");
  count_cmd->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* modcheck = app.add_subcommand(
      "modcheck", "weight/level/character/shift of the normalized form");
  modcheck->add_option("spec", spec_arg, "form document")->required();
  modcheck->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "exact coordinates over the space's tabulated basis");
  decompose_cmd->add_option("spec", spec_arg, "form document")->required();
  decompose_cmd->add_option("--prec", prec, "certified window of the target");
  decompose_cmd->add_option("--verify-to", verify_to,
                            "check coefficients through this exponent");
  decompose_cmd->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite and report per-item results");
  verify
      ->add_option("suite", suite_arg,
                   "table1|pk|identities|ellipsoid|formulas|all")
      ->required()
      ->check(CLI::IsMember(
          {"table1", "pk", "identities", "ellipsoid", "formulas", "all"}));
  verify->add_option("--nmax", nmax,
                     "per-suite knob (precision, n-range or trial count)");
  verify->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  if (format.empty()) format = "text";

  try {
    if (*verify) return cmd_verify(suite_arg, nmax, format);
    FormDocument doc = load_document(spec_arg);
    if (!doc.format.empty() && format == "text") format = doc.format;
    if (*expand) return cmd_expand(doc, prec, format);
    if (*count_cmd) return cmd_count(doc, nmax, format);
    if (*modcheck) return cmd_modcheck(doc, format);
    if (*decompose_cmd) return cmd_decompose(doc, prec, verify_to, format);
  } catch (const EngineError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  }
  return 2;
}
