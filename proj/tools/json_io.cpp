#include "treealg/json_io.hpp"

#include <sstream>

namespace treealg {

using json = nlohmann::ordered_json;

std::string render(std::string_view ascii, bool unicode) {
  return unicode ? to_unicode(ascii) : std::string(ascii);
}

json partition_to_json(const TreePartition& part, bool unicode) {
  const Universe& u = part.universe();
  json classes = json::array();
  for (const auto& cls : part.classes()) {
    json members = json::array();
    for (std::size_t i : cls) members.push_back(render(encode(u[i]), unicode));
    classes.push_back(std::move(members));
  }
  json out;
  out["universe_size"] = u.size();
  out["classes"] = std::move(classes);
  return out;
}

namespace {

json witness_to_json(const EvidenceWitness& w, bool unicode) {
  json out;
  out["pair"] = {render(encode(w.first), unicode), render(encode(w.second), unicode)};
  out["images"] = {render(encode(w.image_first), unicode), render(encode(w.image_second), unicode)};
  if (w.grafting) {
    out["grafting"] = std::string(1, w.grafting->source) + "->" + render(encode(w.grafting->replacement), unicode);
  } else {
    out["grafting"] = nullptr;
  }
  return out;
}

}  // namespace

json report_to_json(const EvidenceReport& report, bool unicode) {
  json tests = json::array();
  for (const EvidenceTest& t : report.tests) {
    json entry;
    entry["name"] = t.name;
    entry["description"] = t.description;
    entry["passed"] = t.passed;
    entry["checked"] = t.checked;
    entry["witness"] = t.witness ? witness_to_json(*t.witness, unicode) : json(nullptr);
    tests.push_back(std::move(entry));
  }
  json out;
  const EvidenceTest* failure = report.first_failure();
  // passing every test is evidence only; a failure is a disproof
  out["verdict"] = failure ? "NOT_CP" : "EVIDENCE";
  out["function"] = render(report.function, unicode);
  out["bound"] = report.bound;
  out["seed"] = report.seed;
  out["tests"] = std::move(tests);
  out["witness"] = failure ? witness_to_json(*failure->witness, unicode) : json(nullptr);
  return out;
}

json error_to_json(const Error& e, bool unicode) {
  json witness = json::array();
  for (const std::string& w : e.witness()) witness.push_back(render(w, unicode));
  json out;
  out["error"] = e.name();
  out["message"] = e.what();
  out["witness"] = std::move(witness);
  return out;
}

Grafting parse_grafting(std::string_view text, const Alphabet& alphabet) {
  const std::size_t arrow = text.find("->");
  if (arrow != 1 || !alphabet.contains(text[0]))
    throw MalformedInput("grafting must read a->TREE with a an alphabet letter", {std::string(text)});
  return Grafting{text[0], parse_tree(text.substr(3), alphabet)};
}

WordSubstitution parse_substitution(std::string_view text, const Alphabet& alphabet) {
  const std::size_t arrow = text.find("=>");
  if (arrow != 1 || !alphabet.contains(text[0]))
    throw MalformedInput("substitution must read a=>WORD with a an alphabet letter", {std::string(text)});
  const std::string_view word = text.substr(3);
  for (char c : word)
    if (!alphabet.contains(c))
      throw MalformedInput(std::string("substitution word uses '") + c + "', which is not in the alphabet",
                           {std::string(text)});
  return WordSubstitution{text[0], std::string(word)};
}

std::vector<std::pair<std::string, std::string>> read_two_column(std::istream& in, std::string_view what) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string first, second, extra;
    if (!(fields >> first) || first.front() == '#') continue;
    if (!(fields >> second) || (fields >> extra))
      throw MalformedInput(std::string(what) + " line " + std::to_string(number) + " must hold exactly two fields",
                           {line});
    rows.emplace_back(std::move(first), std::move(second));
  }
  return rows;
}

namespace {

template <typename Image, typename ParseImage>
std::vector<Image> read_letter_rows(std::istream& in, const Alphabet& alphabet, std::string_view what,
                                    ParseImage parse_image) {
  std::vector<std::optional<Image>> slots(alphabet.size());
  for (auto& [key, value] : read_two_column(in, what)) {
    if (key.size() != 1 || !alphabet.contains(key[0]))
      throw MalformedInput(std::string(what) + " keys must be single alphabet letters", {key});
    auto& slot = slots[*alphabet.index_of(key[0])];
    if (slot) throw MalformedInput(std::string(what) + " lists a letter twice", {key});
    slot = parse_image(value);
  }
  std::vector<Image> images;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw MalformedInput(std::string(what) + " has no image for a letter", {std::string(1, alphabet[i])});
    images.push_back(std::move(*slots[i]));
  }
  return images;
}

}  // namespace

GeneratorTable read_generator_table(std::istream& in, const Alphabet& alphabet) {
  auto images = read_letter_rows<Tree>(in, alphabet, "generator table",
                                       [&](const std::string& v) { return parse_tree(from_unicode(v), alphabet); });
  return GeneratorTable(alphabet, std::move(images));
}

WordGeneratorTable read_word_table(std::istream& in, const Alphabet& alphabet) {
  auto images = read_letter_rows<std::string>(in, alphabet, "word table", [](const std::string& v) { return v; });
  return WordGeneratorTable(alphabet, std::move(images));
}

PairSet read_pairs(std::istream& in, const Alphabet& alphabet) {
  PairSet pairs;
  for (auto& [l, r] : read_two_column(in, "pair file"))
    pairs.emplace_back(parse_tree(from_unicode(l), alphabet), parse_tree(from_unicode(r), alphabet));
  return pairs;
}

}  // namespace treealg
