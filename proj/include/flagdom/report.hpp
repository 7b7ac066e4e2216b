#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace flagdom {

using Report = nlohmann::ordered_json;

// Human-readable rendering of a report tree. Every number and string value
// of the tree appears verbatim; keys are printed as labels.
std::string render_text(const Report& report);

// Entry point of the command-line tool; args excludes the program name.
// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagdom
