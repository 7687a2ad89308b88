#ifndef COORDGEN_LEXICON_HPP
#define COORDGEN_LEXICON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coordgen {

enum class Category { Verb, Noun, Proper, Adj, Prep, Timeword };

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

enum class DeterminerPolicy { None, Indefinite, Definite, Quantified };

struct LexiconEntry {
  std::string concept_id;
  std::string lemma;
  Category category = Category::Noun;
  std::map<std::string, std::string> inflections;  // e.g. "past" -> "re-stocked"
  DeterminerPolicy determiner = DeterminerPolicy::None;
  std::optional<int> rank;             // domain ordering (weekday sequence etc.)
  std::optional<std::string> postmodifier;  // trailing token such as "PM"
};

// Immutable concept -> surface mapping. Safe to share across threads once built.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon from_json_text(const std::string& json_text);
  static Lexicon from_file(const std::string& path);

  void add(LexiconEntry entry);

  const LexiconEntry& at(const std::string& concept_id) const;  // throws LexiconError
  const LexiconEntry* find(const std::string& concept_id) const;
  std::optional<int> rank(const std::string& concept_id) const;

  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LexiconEntry> entries_;
};

}  // namespace coordgen

#endif  // COORDGEN_LEXICON_HPP
