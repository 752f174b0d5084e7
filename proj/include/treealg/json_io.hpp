#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treealg/affine.hpp"
#include "treealg/congruence.hpp"
#include "treealg/errors.hpp"
#include "treealg/monoid.hpp"

namespace treealg {

/// ASCII text, optionally re-rendered with the Unicode shape symbols.
std::string render(std::string_view ascii, bool unicode);

/// `{"universe_size": n, "classes": [[tree, ...], ...]}`
nlohmann::ordered_json partition_to_json(const TreePartition& part, bool unicode = false);

/// `{"verdict", "function", "bound", "seed", "tests": [...], "witness"}`
nlohmann::ordered_json report_to_json(const EvidenceReport& report, bool unicode = false);

/// `{"error": name, "message": ..., "witness": [...]}`
nlohmann::ordered_json error_to_json(const Error& e, bool unicode = false);

/// `a->TREE`. Throws MalformedInput.
Grafting parse_grafting(std::string_view text, const Alphabet& alphabet);
/// `a=>WORD` (WORD may be empty). Throws MalformedInput.
WordSubstitution parse_substitution(std::string_view text, const Alphabet& alphabet);

/// Non-blank, non-comment lines split on whitespace into exactly two fields.
/// Throws MalformedInput naming the offending line.
std::vector<std::pair<std::string, std::string>> read_two_column(std::istream& in, std::string_view what);

/// Lines `a TREE`, one per letter. Throws MalformedInput / MalformedTree.
GeneratorTable read_generator_table(std::istream& in, const Alphabet& alphabet);
/// Lines `a WORD`, one per letter.
WordGeneratorTable read_word_table(std::istream& in, const Alphabet& alphabet);
/// Lines `TREE TREE`.
PairSet read_pairs(std::istream& in, const Alphabet& alphabet);

}  // namespace treealg
