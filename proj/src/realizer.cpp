#include "coordgen/realizer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coordgen/errors.hpp"

namespace coordgen {

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

bool vowel_initial(const std::string& word) {
  if (word.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::vector<std::string> inflect_verb(const SemElement& elem,
                                      const LexiconEntry& entry) {
  auto tense = elem.features.find("tense");
  if (tense == elem.features.end()) return split_words(entry.lemma);
  auto form = entry.inflections.find(tense->second);
  if (form == entry.inflections.end())
    throw LexiconError("verb '" + elem.concept_id + "' has no '" + tense->second +
                       "' form");
  return split_words(form->second);
}

}  // namespace

std::vector<std::string> realize_np(const SemElement& elem, const Lexicon& lex) {
  const LexiconEntry& entry = lex.at(elem.concept_id);
  std::vector<std::string> core;
  std::vector<std::string> tail;
  for (const auto& m : elem.mods) {
    if (m.etype == EType::Attribute)
      append(core, split_words(lex.at(m.concept_id).lemma));
    else
      append(tail, realize_element(m, lex));
  }
  if (auto fn = elem.features.find("first-name"); fn != elem.features.end())
    core.push_back(fn->second);
  append(core, split_words(entry.lemma));
  if (auto idx = elem.features.find("index"); idx != elem.features.end())
    core.push_back(idx->second);
  if (entry.postmodifier) core.push_back(*entry.postmodifier);

  std::vector<std::string> out;
  if (auto poss = elem.features.find("possessive"); poss != elem.features.end()) {
    out.push_back(poss->second);
  } else {
    switch (entry.determiner) {
      case DeterminerPolicy::None:
        break;
      case DeterminerPolicy::Definite:
        out.push_back("the");
        break;
      case DeterminerPolicy::Indefinite:
        out.push_back(!core.empty() && vowel_initial(core.front()) ? "an" : "a");
        break;
      case DeterminerPolicy::Quantified: {
        auto count = elem.features.find("count");
        if (count == elem.features.end())
          throw LexiconError("quantified concept '" + elem.concept_id +
                             "' needs a count feature");
        out.push_back(count->second);
        break;
      }
    }
  }
  append(out, core);
  append(out, tail);
  return out;
}

std::vector<std::string> realize_element(const SemElement& elem,
                                         const Lexicon& lex) {
  const LexiconEntry& entry = lex.at(elem.concept_id);
  if (entry.category == Category::Verb) return inflect_verb(elem, entry);
  if (entry.category == Category::Prep) {
    std::vector<std::string> out = split_words(entry.lemma);
    for (const auto& m : elem.mods) append(out, realize_element(m, lex));
    return out;
  }
  return realize_np(elem, lex);
}

// --- phrase-level coordination -----------------------------------------------

namespace {

std::string join_run(const std::vector<std::string>& tokens, size_t from,
                     size_t count) {
  std::string s;
  for (size_t i = from; i < from + count; ++i) {
    if (!s.empty()) s += ' ';
    s += tokens[i];
  }
  return s;
}

// Tokens separating member i-1 from member i.
std::vector<std::string> phrase_juncture(size_t i, size_t n,
                                         const PhraseStyle& style) {
  if (style.comma_list) return {","};
  if (n == 2) return {"and"};
  if (i + 1 < n) return {","};
  if (style.serial_comma) return {",", "and"};
  return {"and"};
}

}  // namespace

CoordinatedPhrase coordinate_phrase(
    const std::vector<std::vector<std::string>>& members,
    const PhraseStyle& style) {
  CoordinatedPhrase out;
  if (members.empty()) return out;

  size_t shortest = members.front().size();
  for (const auto& m : members) shortest = std::min(shortest, m.size());

  size_t prefix = 0;
  while (prefix < shortest) {
    const std::string& t = members.front()[prefix];
    bool all = true;
    for (const auto& m : members) all = all && m[prefix] == t;
    if (!all) break;
    ++prefix;
  }
  size_t suffix = 0;
  while (prefix + suffix < shortest) {
    const auto& first = members.front();
    const std::string& t = first[first.size() - 1 - suffix];
    bool all = true;
    for (const auto& m : members) all = all && m[m.size() - 1 - suffix] == t;
    if (!all) break;
    ++suffix;
  }
  // Elision must not consume a member entirely.
  for (const auto& m : members)
    if (m.size() == prefix + suffix) {
      prefix = 0;
      suffix = 0;
      break;
    }

  const size_t n = members.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& m = members[i];
    if (i > 0)
      for (const auto& j : phrase_juncture(i, n, style)) {
        out.tokens.push_back(j);
        out.annotated.push_back(j);
      }
    if (prefix > 0) {
      if (i == 0) {
        for (size_t k = 0; k < prefix; ++k) {
          out.tokens.push_back(m[k]);
          out.annotated.push_back(m[k]);
        }
      } else {
        out.annotated.push_back("[" + join_run(m, 0, prefix) + "]");
      }
    }
    for (size_t k = prefix; k < m.size() - suffix; ++k) {
      out.tokens.push_back(m[k]);
      out.annotated.push_back(m[k]);
    }
    if (suffix > 0) {
      if (i + 1 == n) {
        for (size_t k = m.size() - suffix; k < m.size(); ++k) {
          out.tokens.push_back(m[k]);
          out.annotated.push_back(m[k]);
        }
      } else {
        out.annotated.push_back(
            "[" + join_run(m, m.size() - suffix, suffix) + "]");
      }
    }
  }
  return out;
}

// --- constituents ---------------------------------------------------------------

std::vector<Slot> layout_slots(const std::set<Slot>& present,
                               const LayoutPolicy& layout) {
  std::vector<Slot> order;
  if (layout.front_time && present.count(Slot::ModTime))
    order.push_back(Slot::ModTime);
  if (layout.front_place && present.count(Slot::ModPlace))
    order.push_back(Slot::ModPlace);
  for (Slot s : {Slot::Arg1, Slot::Pred, Slot::Arg2, Slot::Arg3,
                 Slot::ModManner, Slot::ModPlace, Slot::ModTime}) {
    if (!present.count(s)) continue;
    if (s == Slot::ModTime && layout.front_time) continue;
    if (s == Slot::ModPlace && layout.front_place) continue;
    order.push_back(s);
  }
  return order;
}

namespace {

std::vector<std::vector<std::string>> member_token_lists(const CoordList& list,
                                                         const Lexicon& lex) {
  std::vector<std::vector<std::string>> members;
  for (const auto& m : list.members) members.push_back(realize_element(m, lex));
  return members;
}

bool slot_is_fronted(Slot s, const LayoutPolicy& layout) {
  return (s == Slot::ModTime && layout.front_time) ||
         (s == Slot::ModPlace && layout.front_place);
}

std::vector<Constituent> build_constituents(const SimpleUnit& unit,
                                            const Lexicon& lex,
                                            const LayoutPolicy& layout) {
  PhraseStyle style;
  style.serial_comma = layout.serial_comma;
  std::set<Slot> present;
  for (const auto& [s, f] : unit.slots) present.insert(s);
  std::vector<Constituent> row;
  int rank = 0;
  for (Slot s : layout_slots(present, layout)) {
    const Filler& filler = unit.slots.at(s);
    Constituent c;
    c.slot = s;
    c.layout_rank = rank++;
    c.fronted = slot_is_fronted(s, layout);
    if (const auto* elem = std::get_if<SemElement>(&filler)) {
      c.tokens = realize_element(*elem, lex);
      c.annotated_tokens = c.tokens;
    } else {
      c.is_coord = true;
      CoordinatedPhrase phrase = coordinate_phrase(
          member_token_lists(std::get<CoordList>(filler), lex), style);
      c.tokens = std::move(phrase.tokens);
      c.annotated_tokens = std::move(phrase.annotated);
    }
    row.push_back(std::move(c));
  }
  return row;
}

}  // namespace

SurfacePlan build_surface_plan(const MultiUnit& unit, const Lexicon& lex,
                               const LayoutPolicy& layout) {
  std::vector<std::vector<Constituent>> rows;
  for (const auto& conj : unit.conjuncts)
    rows.push_back(build_constituents(conj, lex, layout));
  return assign_positions(unit, std::move(rows));
}

// --- emission --------------------------------------------------------------------

namespace {

struct Chunk {
  std::string text;
  bool deleted = false;      // annotated stream only, rendered bracketed
  bool attach_left = false;  // punctuation; no preceding space
};

struct Streams {
  std::vector<Chunk> chunks;

  void constituent(const Constituent& c) {
    if (c.deleted) {
      std::string inner = join_run(c.tokens, 0, c.tokens.size());
      if (c.fronted) inner += ",";
      chunks.push_back({"[" + inner + "]", true, false});
      return;
    }
    for (const auto& t : c.annotated_tokens)
      chunks.push_back({t, false, t == ","});
    if (c.fronted) chunks.push_back({",", false, true});
  }
  void word(const std::string& w) { chunks.push_back({w, false, false}); }
  void comma() { chunks.push_back({",", false, true}); }
};

bool annotation_token(const std::string& t) {
  return !t.empty() && t.front() == '[';
}

std::string assemble(const std::vector<Chunk>& chunks, bool with_deleted) {
  std::string s;
  bool cap_pending = true;
  for (const auto& ch : chunks) {
    if (!with_deleted && (ch.deleted || annotation_token(ch.text))) continue;
    std::string text = ch.text;
    if (cap_pending && !ch.deleted && !annotation_token(text)) {
      if (!text.empty()) {
        if (std::isalpha(static_cast<unsigned char>(text[0])))
          text[0] = static_cast<char>(
              std::toupper(static_cast<unsigned char>(text[0])));
        if (std::isalnum(static_cast<unsigned char>(text[0])))
          cap_pending = false;  // sentence may legitimately start with a numeral
      }
    }
    if (s.empty())
      s = text;
    else if (ch.attach_left)
      s += text;
    else
      s += " " + text;
  }
  s += ".";
  return s;
}

const Constituent* last_surviving(const std::vector<Constituent>& row) {
  for (auto it = row.rbegin(); it != row.rend(); ++it)
    if (!it->deleted) return &*it;
  return nullptr;
}

bool first_slot_deleted(const std::vector<Constituent>& row) {
  return !row.empty() && row.front().deleted;
}

}  // namespace

Realization realize_unit(const CoordUnit& unit, const Lexicon& lex,
                         const LayoutPolicy& layout) {
  Realization out;
  if (const auto* simple = std::get_if<SimpleUnit>(&unit)) {
    if (simple->slots.empty()) throw ContractError("realize_unit: empty unit");
    Streams streams;
    for (const auto& c : build_constituents(*simple, lex, layout))
      streams.constituent(c);
    out.text = assemble(streams.chunks, false);
    out.annotated = assemble(streams.chunks, true);
    return out;
  }

  const auto& multi = std::get<MultiUnit>(unit);
  if (multi.conjuncts.empty()) throw ContractError("realize_unit: empty unit");
  SurfacePlan plan = resolve_deletions(build_surface_plan(multi, lex, layout));
  const int n = static_cast<int>(plan.conjuncts.size());

  for (const auto& g : plan.groups)
    out.deletions.push_back(
        {g.slot, g.resolution,
         g.resolution == Direction::DeleteBackward ? n - 1 : 0});

  // A clause-final CoordList flowing into a conjunct whose front material was
  // elided reads as one serial list; its members take comma junctures.
  if (layout.list_upgrade) {
    for (int i = 0; i + 1 < n; ++i) {
      const Constituent* last = last_surviving(plan.conjuncts[i]);
      if (!last || !last->is_coord) continue;
      if (!first_slot_deleted(plan.conjuncts[i + 1])) continue;
      PhraseStyle style;
      style.serial_comma = layout.serial_comma;
      style.comma_list = true;
      const Filler& filler = multi.conjuncts[i].slots.at(last->slot);
      CoordinatedPhrase phrase = coordinate_phrase(
          member_token_lists(std::get<CoordList>(filler), lex), style);
      Constituent* target = plan.find(i, last->slot);
      target->tokens = std::move(phrase.tokens);
      target->annotated_tokens = std::move(phrase.annotated);
    }
  }

  Streams streams;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      bool comma = false;
      if (n > 2) {
        comma = (i + 1 < n) || layout.serial_comma;
      } else {
        const auto& left = plan.conjuncts[i - 1];
        const Constituent* last = last_surviving(left);
        bool left_truncated =
            std::any_of(left.begin(), left.end(),
                        [](const Constituent& c) { return c.deleted; });
        if (layout.gap_comma && left_truncated && last &&
            last->slot == Slot::Pred)
          comma = true;
        if (layout.list_upgrade && last && last->is_coord &&
            first_slot_deleted(plan.conjuncts[i]))
          comma = true;
      }
      if (comma) streams.comma();
      if (i + 1 == n || n == 2) streams.word("and");
    }
    for (const auto& c : plan.conjuncts[i]) streams.constituent(c);
  }
  out.text = assemble(streams.chunks, false);
  out.annotated = assemble(streams.chunks, true);
  return out;
}

std::string realize_proposition(const Proposition& prop, const Lexicon& lex,
                                const LayoutPolicy& layout) {
  CoordUnit unit = SimpleUnit::from_proposition(prop);
  return realize_unit(unit, lex, layout).text;
}

std::string strip_annotations(const std::string& annotated) {
  std::string s;
  size_t i = 0;
  while (i < annotated.size()) {
    if (annotated[i] == '[') {
      size_t close = annotated.find(']', i);
      if (close == std::string::npos) {
        s += annotated.substr(i);
        break;
      }
      i = close + 1;
      continue;
    }
    s += annotated[i++];
  }
  std::string out;
  for (char c : s) {
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    if ((c == ',' || c == '.') && !out.empty() && out.back() == ' ')
      out.pop_back();
    out += c;
  }
  while (!out.empty() && out.front() == ' ') out.erase(out.begin());
  return out;
}

}  // namespace coordgen
