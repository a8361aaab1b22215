#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagdirac/dirac.hpp"

namespace flagdirac {

// Raised for unreadable, malformed, or inconsistent structure files; the
// message names the offending root or field.
class StructureFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structure file content before it is tied to a root system.
struct StructureDocument {
    CartanSpec algebra;
    std::vector<std::pair<Root, PerRootCase>> entries;  // in file order
};

// Parses the JSON text of a structure file. Parameters written as integers
// or as "p/q" / decimal strings are kept as exact rationals; parameters
// written as noninteger numbers stay floating point. Case 4.1 accepts a1
// and b1 as scalars or as [re, im] pairs and stores the ratio b1/a1.
StructureDocument parse_structure_document(const std::string& json_text);

// Checks that the document lists every positive root of rs exactly once and
// returns the assignment in root-system order.
DiracStructure bind_structure(const StructureDocument& doc, const RootSystem& rs);

// Canonical JSON text: roots in root-system order, exact values written as
// integers or "p/q" strings, case 4.1 normalized to a1 = 1, two-space
// indentation, trailing newline.
std::string serialize_structure(const DiracStructure& structure);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flagdirac
