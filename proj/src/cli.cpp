#include "dihedral/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dihedral/counting.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/export.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/permrep.hpp"
#include "dihedral/spectral.hpp"

namespace dihedral::cli {

namespace {

using nlohmann::json;

constexpr double kDisplayIntegrality = 1e-9;

// Parses "pi2:3" style selectors; returns the integer after the colon.
int selector_index(const std::string& which, const std::string& prefix) {
  const std::string digits = which.substr(prefix.size());
  std::size_t used = 0;
  int j = 0;
  try {
    j = std::stoi(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size()) throw ParameterError("bad selector '" + which + "'");
  return j;
}

// Character values are real; integral ones print without decimals.
std::string format_character(const Complex& z, int precision) {
  if (std::abs(z.imag()) > kDisplayIntegrality)
    throw DomainError("character value with a non-zero imaginary part");
  const double rounded = std::round(z.real());
  if (std::abs(z.real() - rounded) <= kDisplayIntegrality)
    return std::to_string(static_cast<long long>(rounded));
  return format_real(z.real(), precision);
}

std::string pad_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out + "\n";
}

template <class T>
std::string render_exact_matrix(const Matrix<T>& m, const OutputSpec& out, const json& header) {
  switch (out.format) {
    case Format::Json: {
      json j = header;
      j["entries"] = matrix_to_json(m);
      return j.dump() + "\n";
    }
    case Format::Csv: return matrix_to_csv(m, out.precision);
    case Format::Text: break;
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells.emplace_back();
    for (std::size_t c = 0; c < m.cols(); ++c) cells.back().push_back(format_cell(m(r, c), out.precision));
  }
  return pad_table(cells);
}

std::string render_series(const CountSeries& s, const OutputSpec& out,
                          const std::optional<long long>& oracle_upto) {
  switch (out.format) {
    case Format::Json: {
      json j = series_to_json(s);
      if (oracle_upto) j["oracle_verified_through"] = *oracle_upto;
      return j.dump() + "\n";
    }
    case Format::Csv: return series_to_csv(s);
    case Format::Text: break;
  }
  std::vector<std::vector<std::string>> cells{{"r", "H(r)"}};
  for (std::size_t r = 0; r < s.values.size(); ++r) cells.push_back({std::to_string(r), s.values[r].str()});
  std::string text = pad_table(cells);
  text += "h* = (";
  for (std::size_t i = 0; i < s.hstar.size(); ++i) text += (i ? ", " : "") + s.hstar[i].str();
  text += ")\n";
  if (oracle_upto) text += "oracle agrees for r = 0.." + std::to_string(*oracle_upto) + "\n";
  return text;
}

double tolerance_from_env() {
  const char* env = std::getenv("DIHEDRAL_EPS");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double eps = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(eps > 0.0)) throw ParameterError("DIHEDRAL_EPS must be a positive number");
  return eps;
}

void emit(const std::string& text, const OutputSpec& spec, std::ostream& out) {
  if (!spec.path) {
    out << text;
    return;
  }
  std::ofstream file(*spec.path, std::ios::binary);
  if (!file) throw ParameterError("cannot open output file '" + *spec.path + "'");
  file << text;
}

}  // namespace

std::vector<LabeledMatrix> select_matrices(int n, const std::string& which) {
  require_group_order(n);
  std::vector<LabeledMatrix> out;
  if (which == "all") {
    for (const auto& [label, u] : idempotent_set(n).members)
      out.emplace_back("U_" + label.str(), u.entries());
  } else if (which == "triv") {
    out.emplace_back("U_triv", project_isotypic(n, IrreducibleLabel::linear(LinearKind::Triv)));
  } else if (which == "chi'" || which == "chi_prime") {
    out.emplace_back("U_" + chi_prime(n).str(), u_chi_prime(n));
  } else if (which.rfind("pi2:", 0) == 0) {
    const int j = selector_index(which, "pi2:");
    out.emplace_back("U_pi2(" + std::to_string(j) + ")", u_pi2(n, j));
  } else if (which.rfind("uprime:", 0) == 0) {
    const int j = selector_index(which, "uprime:");
    out.emplace_back("U'_pi2(" + std::to_string(j) + ")", u_prime(n, j));
  } else if (which.rfind("quat:", 0) == 0) {
    const int j = selector_index(which, "quat:");
    const QuaternionBasis q = quaternion_basis(n, j);
    out.emplace_back("q1", q.q1);
    out.emplace_back("q2", q.q2);
    out.emplace_back("q3", q.q3);
    out.emplace_back("q4", q.q4);
  } else {
    throw ParameterError("unknown selector '" + which + "' (triv | chi' | pi2:j | uprime:j | quat:j | all)");
  }
  return out;
}

json table_to_json(const CharacterTable& t) {
  json classes = json::array();
  for (std::size_t c = 0; c < t.class_reps.size(); ++c)
    classes.push_back({{"name", t.class_names[c]}, {"rep", t.class_reps[c].word()}, {"size", t.class_sizes[c]}});
  json rows = json::array();
  for (const auto& row : t.rows) {
    json values = json::array();
    for (const auto& v : row.values) values.push_back(scalar_to_json(v));
    rows.push_back({{"label", row.label}, {"values", values}});
  }
  return {{"n", t.n}, {"classes", classes}, {"rows", rows}};
}

CharacterTable table_from_json(const json& j) {
  CharacterTable t{j.at("n").get<int>(), {}, {}, {}, {}};
  for (const auto& c : j.at("classes")) {
    t.class_names.push_back(c.at("name").get<std::string>());
    t.class_reps.push_back(Element::parse(t.n, c.at("rep").get<std::string>()));
    t.class_sizes.push_back(c.at("size").get<int>());
  }
  for (const auto& r : j.at("rows")) {
    CharacterRow row{r.at("label").get<std::string>(), {}};
    for (const auto& v : r.at("values")) row.values.push_back(scalar_from_json<Complex>(v));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_table(const CharacterTable& t, const OutputSpec& out) {
  if (out.format == Format::Json) return table_to_json(t).dump() + "\n";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class"});
  cells.push_back({"size"});
  for (std::size_t c = 0; c < t.class_names.size(); ++c) {
    cells[0].push_back(t.class_names[c]);
    cells[1].push_back(std::to_string(t.class_sizes[c]));
  }
  for (const auto& row : t.rows) {
    cells.push_back({row.label});
    for (const auto& v : row.values) cells.back().push_back(format_character(v, out.precision));
  }
  if (out.format == Format::Csv) {
    std::string csv;
    for (const auto& row : cells) csv += join_csv(row);
    return csv;
  }
  return "Character table of D_" + std::to_string(2 * t.n) + " (n = " + std::to_string(t.n) + ")\n" +
         pad_table(cells);
}

std::string render_matrices(int n, const std::vector<LabeledMatrix>& ms, const OutputSpec& out) {
  switch (out.format) {
    case Format::Json: {
      json list = json::array();
      for (const auto& [label, m] : ms) list.push_back({{"label", label}, {"entries", matrix_to_json(m)}});
      return json{{"n", n}, {"matrices", list}}.dump() + "\n";
    }
    case Format::Csv: {
      std::string csv;
      for (const auto& [label, m] : ms)
        for (std::size_t r = 0; r < m.rows(); ++r) {
          std::vector<std::string> cells{label, std::to_string(r)};
          for (std::size_t c = 0; c < m.cols(); ++c) cells.push_back(format_complex(m(r, c), out.precision));
          csv += join_csv(cells);
        }
      return csv;
    }
    case Format::Text: break;
  }
  std::string text;
  for (const auto& [label, m] : ms) {
    if (!text.empty()) text += "\n";
    text += label + " (n = " + std::to_string(n) + ")\n";
    std::vector<std::vector<std::string>> cells;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      cells.emplace_back();
      for (std::size_t c = 0; c < m.cols(); ++c) cells.back().push_back(format_complex(m(r, c), out.precision));
    }
    text += pad_table(cells);
  }
  return text;
}

std::string render_report(const VerifyReport& rep, const OutputSpec& out) {
  switch (out.format) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
      return json{{"n", rep.n}, {"checks", checks}, {"passed", rep.passed()}, {"failed", rep.failed()}}.dump() +
             "\n";
    }
    case Format::Csv: {
      std::string csv = "name,status,detail\n";
      for (const auto& c : rep.checks) csv += join_csv({c.name, c.passed ? "pass" : "fail", c.detail});
      return csv;
    }
    case Format::Text: break;
  }
  std::string text;
  for (const auto& c : rep.checks)
    text += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
  text += std::to_string(rep.passed()) + " passed, " + std::to_string(rep.failed()) + " failed\n";
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dihedral permutation algebras: character tables, semi-magic square counts, idempotents"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputSpec spec;
  std::string path;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", spec.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--precision", spec.precision, "Decimal digits for floating-point output")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", path, "Write output to this file instead of stdout");

  int n = 0;
  int r_max = 0;
  std::string variant = "closed";
  bool verify_oracle = false;
  std::uint64_t max_tuples = kDefaultMaxTuples;
  std::string which;
  std::string object;

  auto* table = app.add_subcommand("table", "Character table of D_{2n} with the permutation character");
  table->add_option("--n", n, "Group parameter (n >= 3)")->required();

  auto* count = app.add_subcommand("count", "Semi-magic squares H(r) for r = 0..rmax");
  count->add_option("--n", n, "Group parameter (n >= 3)")->required();
  count->add_option("--rmax", r_max, "Largest line sum")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--variant", variant, "closed | sum | pie | conv | oracle | canonical")
      ->check(CLI::IsMember({"closed", "sum", "pie", "conv", "oracle", "canonical"}));
  count->add_flag("--verify-oracle", verify_oracle, "Cross-check every value with the brute-force oracle");
  count->add_option("--max-tuples", max_tuples, "Tuple budget for brute-force enumeration");

  auto* idem = app.add_subcommand("idem", "Orthogonal idempotents and quaternionic bases");
  idem->add_option("--n", n, "Group parameter (n >= 3)")->required();
  idem->add_option("--which", which, "triv | chi' | pi2:j | uprime:j | quat:j | all")->required();

  auto* verify = app.add_subcommand("verify", "Run every consistency check for one n");
  verify->add_option("--n", n, "Group parameter (n >= 3)")->required();
  verify->add_option("--max-tuples", max_tuples, "Tuple budget for the brute-force oracles");

  auto* exp = app.add_subcommand("export", "Export exact objects: perm:WORD | J | J1 | J2 | kernel | series | table");
  exp->add_option("--n", n, "Group parameter (n >= 3)")->required();
  exp->add_option("--object", object, "Object to export")->required();
  exp->add_option("--rmax", r_max, "Largest line sum (series only)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!path.empty()) spec.path = path;

  try {
    const double eps = tolerance_from_env();
    std::string text;
    int status = kOk;

    if (table->parsed()) {
      text = render_table(character_table(n), spec);
    } else if (count->parsed()) {
      require_group_order(n);
      CountSeries s = series(n, r_max);
      for (long long r = 0; r <= r_max; ++r) {
        if (variant == "sum")
          s.values[r] = count_sum_formula(n, r);
        else if (variant == "pie")
          s.values[r] = count_pie(n, r);
        else if (variant == "conv")
          s.values[r] = count_convolution(n, r);
        else if (variant == "oracle")
          s.values[r] = oracle_count(n, r, max_tuples);
        else if (variant == "canonical")
          s.values[r] = oracle_canonical(n, r, max_tuples);
        else
          s.values[r] = count_closed(n, r);
      }
      std::optional<long long> checked;
      if (verify_oracle) {
        for (long long r = 0; r <= r_max; ++r) {
          const BigInt o = oracle_count(n, r, max_tuples);
          if (o != s.values[r]) {
            err << "oracle mismatch at r=" << r << ": formula " << s.values[r] << ", oracle " << o << "\n";
            status = kCheckFailed;
          }
        }
        if (status == kOk) checked = r_max;
      }
      text = render_series(s, spec, checked);
    } else if (idem->parsed()) {
      text = render_matrices(n, select_matrices(n, which), spec);
    } else if (verify->parsed()) {
      VerifyOptions opts;
      opts.eps = eps;
      opts.max_tuples = max_tuples;
      const VerifyReport rep = verify_all(n, opts);
      text = render_report(rep, spec);
      if (!rep.ok()) {
        for (const auto& c : rep.checks)
          if (!c.passed) err << "failed: " << c.name << "\n";
        status = kCheckFailed;
      }
    } else if (exp->parsed()) {
      require_group_order(n);
      const json header{{"n", n}, {"object", object}};
      if (object == "J") {
        text = render_exact_matrix(big_j(n).entries(), spec, header);
      } else if (object == "J1") {
        text = render_exact_matrix(j1(n).entries(), spec, header);
      } else if (object == "J2") {
        text = render_exact_matrix(j2(n).entries(), spec, header);
      } else if (object.rfind("perm:", 0) == 0) {
        text = render_exact_matrix(perm_matrix(Element::parse(n, object.substr(5))).entries(), spec, header);
      } else if (object == "kernel") {
        RationalMatrix rows(0, 0);
        const auto kb = kernel_basis(n);
        rows = RationalMatrix(kb.vectors.size(), 2 * n);
        for (std::size_t v = 0; v < kb.vectors.size(); ++v)
          for (int i = 0; i < 2 * n; ++i) rows(v, i) = kb.vectors[v].coeffs()[i];
        text = render_exact_matrix(rows, spec, header);
      } else if (object == "series") {
        text = render_series(series(n, r_max), spec, std::nullopt);
      } else if (object == "table") {
        text = render_table(character_table(n), spec);
      } else {
        throw ParameterError("unknown export object '" + object + "'");
      }
    }
    emit(text, spec, out);
    return status;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace dihedral::cli
