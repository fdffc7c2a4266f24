#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dihedral/characters.hpp"
#include "dihedral/matrix.hpp"
#include "dihedral/verify.hpp"

namespace dihedral::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

enum class Format { Text, Json, Csv };

struct OutputSpec {
  Format format = Format::Text;
  int precision = 6;
  std::optional<std::string> path;
};

using LabeledMatrix = std::pair<std::string, ComplexMatrix>;

// Matrices named by an idem selector: triv | chi' | pi2:j | uprime:j | quat:j | all.
std::vector<LabeledMatrix> select_matrices(int n, const std::string& which);

nlohmann::json table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const nlohmann::json& j);

std::string render_table(const CharacterTable& t, const OutputSpec& out);
std::string render_matrices(int n, const std::vector<LabeledMatrix>& ms, const OutputSpec& out);
std::string render_report(const VerifyReport& rep, const OutputSpec& out);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dihedral::cli
