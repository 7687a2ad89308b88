#include "coordgen/lexicon.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coordgen/errors.hpp"

namespace coordgen {

using nlohmann::json;

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Verb: return "VERB";
    case Category::Noun: return "NOUN";
    case Category::Proper: return "PROPER";
    case Category::Adj: return "ADJ";
    case Category::Prep: return "PREP";
    case Category::Timeword: return "TIMEWORD";
  }
  return "?";
}

std::optional<Category> category_from_name(std::string_view name) {
  for (Category c : {Category::Verb, Category::Noun, Category::Proper,
                     Category::Adj, Category::Prep, Category::Timeword})
    if (category_name(c) == name) return c;
  return std::nullopt;
}

namespace {

DeterminerPolicy determiner_from_name(const std::string& name) {
  if (name == "none") return DeterminerPolicy::None;
  if (name == "indefinite") return DeterminerPolicy::Indefinite;
  if (name == "definite") return DeterminerPolicy::Definite;
  if (name == "quantified") return DeterminerPolicy::Quantified;
  throw ValidationError("lexicon: unknown determiner policy '" + name + "'");
}

LexiconEntry entry_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("lexicon entries must be objects");
  LexiconEntry e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "concept") {
      e.concept_id = it.value().get<std::string>();
    } else if (key == "lemma") {
      e.lemma = it.value().get<std::string>();
    } else if (key == "category") {
      auto c = category_from_name(it.value().get<std::string>());
      if (!c)
        throw ValidationError("lexicon: unknown category '" +
                              it.value().get<std::string>() + "'");
      e.category = *c;
    } else if (key == "inflections") {
      for (auto inf = it.value().begin(); inf != it.value().end(); ++inf)
        e.inflections[inf.key()] = inf.value().get<std::string>();
    } else if (key == "determiner") {
      e.determiner = determiner_from_name(it.value().get<std::string>());
    } else if (key == "rank") {
      e.rank = it.value().get<int>();
    } else if (key == "postmodifier") {
      e.postmodifier = it.value().get<std::string>();
    } else {
      throw ValidationError("lexicon: unknown entry key '" + key + "'");
    }
  }
  if (e.concept_id.empty())
    throw ValidationError("lexicon entry missing \"concept\"");
  return e;
}

}  // namespace

Lexicon Lexicon::from_json_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ParseError("lexicon: malformed JSON at byte " +
                     std::to_string(ex.byte) + ": " + ex.what());
  }
  if (!doc.is_array())
    throw ValidationError("lexicon must be a JSON array of entries");
  Lexicon lex;
  for (const auto& j : doc) lex.add(entry_from_json(j));
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

void Lexicon::add(LexiconEntry entry) {
  auto [it, inserted] = entries_.emplace(entry.concept_id, std::move(entry));
  if (!inserted)
    throw ValidationError("lexicon: duplicate concept '" + it->first + "'");
}

const LexiconEntry& Lexicon::at(const std::string& concept_id) const {
  auto it = entries_.find(concept_id);
  if (it == entries_.end())
    throw LexiconError("no lexicon entry for concept '" + concept_id + "'");
  return it->second;
}

const LexiconEntry* Lexicon::find(const std::string& concept_id) const {
  auto it = entries_.find(concept_id);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<int> Lexicon::rank(const std::string& concept_id) const {
  const LexiconEntry* e = find(concept_id);
  return e ? e->rank : std::nullopt;
}

}  // namespace coordgen
