#include "debruijn/stack.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "debruijn/error.hpp"

namespace debruijn {

namespace {

constexpr std::string_view kBuiltinSequence = "0000011101010010001011001101111100000101101111101001";

constexpr std::array<std::string_view, kDeckSize> kBuiltinOrder = {
    "AH", "7H", "3D", "QD", "2D", "KS", "8S", "10S", "2H", "7C", "KD", "3C", "5D",
    "10D", "6C", "6H", "8D", "9H", "QC", "JH", "JS", "5C", "3H", "QH", "AC", "2C",
    "4D", "5S", "9S", "10C", "7S", "4C", "AD", "7D", "6D", "8H", "9D", "QS", "4H",
    "2S", "6S", "JD", "9C", "KC", "8C", "JC", "3S", "5H", "AS", "10H", "KH", "4S"};

char suit_letter(Suit s) {
  switch (s) {
    case Suit::Hearts: return 'H';
    case Suit::Diamonds: return 'D';
    case Suit::Clubs: return 'C';
    case Suit::Spades: return 'S';
  }
  return '?';
}

std::string rank_code(Rank r) {
  switch (r) {
    case Rank::Ace: return "A";
    case Rank::Jack: return "J";
    case Rank::Queen: return "Q";
    case Rank::King: return "K";
    default: return std::to_string(static_cast<int>(r));
  }
}

std::vector<Card> full_deck_in(std::initializer_list<Suit> suits) {
  std::vector<Card> out;
  for (Suit s : suits) {
    for (int r = 1; r <= 13; ++r) out.push_back(Card{static_cast<Rank>(r), s});
  }
  return out;
}

std::vector<Card> parse_card_list(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("crib field '") + field + "' must be an array");
  std::vector<Card> out;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError(std::string("crib field '") + field + "' must hold card codes");
    out.push_back(parse_card(c.get<std::string>()));
  }
  return out;
}

}  // namespace

std::string Card::code() const { return rank_code(rank) + suit_letter(suit); }

Card parse_card(std::string_view code) {
  if (code.size() < 2 || code.size() > 3) throw ParseError("invalid card code '" + std::string(code) + "'");
  Card c;
  switch (code.back()) {
    case 'H': c.suit = Suit::Hearts; break;
    case 'D': c.suit = Suit::Diamonds; break;
    case 'C': c.suit = Suit::Clubs; break;
    case 'S': c.suit = Suit::Spades; break;
    default: throw ParseError("invalid suit in card code '" + std::string(code) + "'");
  }
  const std::string_view r = code.substr(0, code.size() - 1);
  if (r == "A") {
    c.rank = Rank::Ace;
  } else if (r == "J") {
    c.rank = Rank::Jack;
  } else if (r == "Q") {
    c.rank = Rank::Queen;
  } else if (r == "K") {
    c.rank = Rank::King;
  } else if (r == "10") {
    c.rank = Rank::Ten;
  } else if (r.size() == 1 && r[0] >= '2' && r[0] <= '9') {
    c.rank = static_cast<Rank>(r[0] - '0');
  } else {
    throw ParseError("invalid rank in card code '" + std::string(code) + "'");
  }
  return c;
}

std::string_view suit_name(Suit s) {
  switch (s) {
    case Suit::Hearts: return "hearts";
    case Suit::Diamonds: return "diamonds";
    case Suit::Clubs: return "clubs";
    case Suit::Spades: return "spades";
  }
  return "?";
}

std::string_view rank_name(Rank r) {
  static constexpr std::array<std::string_view, 13> kNames = {
      "ace", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "jack", "queen", "king"};
  return kNames[static_cast<std::size_t>(static_cast<int>(r) - 1)];
}

Stack builtin_stack() {
  Stack st{"builtin", CyclicSequence(kBuiltinSequence), {}};
  st.cards.reserve(kDeckSize);
  for (auto code : kBuiltinOrder) st.cards.push_back(parse_card(code));
  return st;
}

std::string StackReport::to_text() const {
  if (violations.empty()) return "stack: valid\n";
  std::ostringstream out;
  out << "stack: invalid (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : violations) {
    out << "  ";
    if (v.position) out << "position " << *v.position << ": ";
    out << v.message << '\n';
  }
  return out.str();
}

StackReport validate_stack(const Stack& st) {
  StackReport report;
  auto add = [&](StackViolation::Kind kind, std::optional<std::size_t> pos, std::string msg) {
    report.violations.push_back({kind, pos, std::move(msg)});
  };

  if (st.sequence.size() != kDeckSize || st.cards.size() != kDeckSize) {
    add(StackViolation::Kind::Length, std::nullopt,
        "expected 52 bits and 52 cards, got " + std::to_string(st.sequence.size()) + " bits and " +
            std::to_string(st.cards.size()) + " cards");
  }

  std::map<Card, std::size_t> first_seen;
  const std::size_t aligned = std::min(st.sequence.size(), st.cards.size());
  for (std::size_t i = 0; i < st.cards.size(); ++i) {
    const Card& c = st.cards[i];
    if (auto [it, fresh] = first_seen.emplace(c, i); !fresh) {
      add(StackViolation::Kind::DuplicateCard, i,
          "duplicate card " + c.code() + " (first at position " + std::to_string(it->second) + ")");
    }
    if (i < aligned) {
      const bool red_bit = st.sequence[i] == 0;
      if (red_bit != (c.color() == CardColor::Red)) {
        add(StackViolation::Kind::ColorMismatch, i,
            "colour mismatch: " + c.code() + " is " + (c.color() == CardColor::Red ? "red" : "black") + " but bit is " +
                std::to_string(st.sequence[i]));
      }
    }
  }

  const WindowHistogram h = window_histogram(st.sequence, kSpectators);
  for (std::size_t i = 0; i < st.sequence.size(); ++i) {
    const Word w = window_at(st.sequence, i, kSpectators);
    if (h.counts[w] > kStackMultiplicity) {
      add(StackViolation::Kind::WindowMultiplicity, i,
          "window " + word_to_string(w, kSpectators) + " occurs " + std::to_string(h.counts[w]) + " times");
    }
  }

  const BalanceReport b = balance(st.sequence);
  if (b.imbalance != 0) {
    add(StackViolation::Kind::Unbalanced, std::nullopt,
        "sequence has " + std::to_string(b.zeros) + " zeros and " + std::to_string(b.ones) + " ones");
  }
  return report;
}

Stack auto_stack(const CyclicSequence& s, std::string name) {
  if (s.size() != kDeckSize || !verify(s, kSpectators, kStackMultiplicity, BalanceMode::Balanced).passed) {
    throw InvalidArgument("auto stack needs a sequence passing verify(s, 5, 2, balanced) of length 52");
  }
  const std::vector<Card> reds = full_deck_in({Suit::Hearts, Suit::Diamonds});
  const std::vector<Card> blacks = full_deck_in({Suit::Clubs, Suit::Spades});
  Stack st{std::move(name), s, {}};
  std::size_t r = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i < s.size(); ++i) st.cards.push_back(s[i] == 0 ? reds[r++] : blacks[b++]);
  return st;
}

CribSheet crib(const Stack& st) {
  if (const StackReport report = validate_stack(st); !report.passed()) {
    throw InvalidStack(report.to_text());
  }
  CribSheet cs{st.name, st.sequence, {}, st.cards};
  for (std::size_t i = 0; i < st.cards.size(); ++i) {
    cs.table[window_at(st.sequence, i, kSpectators)].push_back(st.cards[i]);
  }
  return cs;
}

ColorSignal parse_signal(std::string_view text) {
  if (text.size() != static_cast<std::size_t>(kSpectators)) {
    throw ParseError("colour signal must have exactly 5 characters, got '" + std::string(text) + "'");
  }
  ColorSignal sig{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'R': case 'r': sig[i] = CardColor::Red; break;
      case 'B': case 'b': sig[i] = CardColor::Black; break;
      default: throw ParseError("colour signal may only contain R and B, got '" + std::string(text) + "'");
    }
  }
  return sig;
}

Word signal_word(const ColorSignal& sig) {
  Word w = 0;
  for (CardColor c : sig) w = (w << 1) | (c == CardColor::Black ? 1U : 0U);
  return w;
}

LookupResult lookup(const CribSheet& cs, const ColorSignal& sig) {
  LookupResult r;
  r.window = signal_word(sig);
  const auto it = cs.table.find(r.window);
  if (it == cs.table.end() || it->second.empty()) {
    throw ImpossibleSignal("impossible signal: window " + word_to_string(r.window, kSpectators) +
                           " does not occur in stack '" + cs.name + "'");
  }
  r.candidates = it->second;
  if (r.candidates.size() >= 2) {
    const Card& first = r.candidates[0];
    if (first.suit != r.candidates[1].suit) {
      r.question = Question{Question::Attribute::Suit, std::string(suit_name(first.suit)) + "?"};
    } else {
      r.question = Question{Question::Attribute::Rank, std::string(rank_name(first.rank)) + "?"};
    }
  }
  return r;
}

Card resolve(const LookupResult& r, bool answer_yes) {
  if (r.candidates.empty()) throw InvalidArgument("no candidates to resolve");
  if (r.candidates.size() == 1 || answer_yes) return r.candidates[0];
  return r.candidates[1];
}

std::vector<Card> reveal(const CribSheet& cs, const Card& first_card) {
  const auto it = std::find(cs.order.begin(), cs.order.end(), first_card);
  if (it == cs.order.end()) throw InvalidArgument("card " + first_card.code() + " is not in the stack");
  const auto start = static_cast<std::size_t>(it - cs.order.begin());
  std::vector<Card> out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(kSpectators); ++j) {
    out.push_back(cs.order[(start + j) % cs.order.size()]);
  }
  return out;
}

std::vector<Word> rank_fallback_rows(const CribSheet& cs) {
  std::vector<Word> out;
  for (const auto& [w, cards] : cs.table) {
    if (cards.size() >= 2 && cards[0].suit == cards[1].suit) out.push_back(w);
  }
  return out;
}

std::string cards_to_string(const std::vector<Card>& cards, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (i) out += separator;
    out += cards[i].code();
  }
  return out;
}

std::string crib_to_json(const CribSheet& cs) {
  nlohmann::ordered_json j;
  j["name"] = cs.name;
  j["sequence"] = cs.sequence.str();
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (const auto& [w, cards] : cs.table) {
    auto& row = table[word_to_string(w, kSpectators)] = nlohmann::ordered_json::array();
    for (const Card& c : cards) row.push_back(c.code());
  }
  j["table"] = std::move(table);
  auto& order = j["order"] = nlohmann::ordered_json::array();
  for (const Card& c : cs.order) order.push_back(c.code());
  return j.dump(2);
}

Stack stack_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("crib document must be a JSON object");
  if (!j.contains("sequence") || !j["sequence"].is_string()) throw ParseError("crib document needs a 'sequence' string");

  std::string name = "stack";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("crib field 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  const char* field = j.contains("order") ? "order" : "cards";
  if (!j.contains(field)) throw ParseError("crib document needs an 'order' (or 'cards') array");
  return Stack{name, CyclicSequence(j["sequence"].get<std::string>()), parse_card_list(j[field], field)};
}

CribSheet crib_from_json(std::string_view text) {
  const Stack st = stack_from_json(text);
  const nlohmann::json j = nlohmann::json::parse(text);

  std::map<Word, std::vector<Card>> table;
  const bool has_table = j.contains("table");
  if (has_table) {
    if (!j["table"].is_object()) throw ParseError("crib field 'table' must be an object");
    for (const auto& [key, row] : j["table"].items()) {
      if (key.size() != static_cast<std::size_t>(kSpectators) ||
          key.find_first_not_of("01") != std::string::npos) {
        throw ParseError("table key '" + key + "' is not a 5-bit window");
      }
      std::vector<Card> cards = parse_card_list(row, "table");
      if (cards.empty() || cards.size() > kStackMultiplicity) {
        throw ParseError("table row '" + key + "' must list one or two cards");
      }
      table[window_at(CyclicSequence(key), 0, kSpectators)] = std::move(cards);
    }
  }

  CribSheet cs = crib(st);
  if (has_table && table != cs.table) {
    throw InvalidStack("crib table does not match its sequence and card order");
  }
  return cs;
}

std::string crib_to_text(const CribSheet& cs) {
  std::ostringstream out;
  for (const auto& [w, cards] : cs.table) {
    out << word_to_string(w, kSpectators) << ": " << cards_to_string(cards, ", ") << '\n';
  }
  out << '\n';
  const std::size_t half = (cs.order.size() + 1) / 2;
  out << cards_to_string({cs.order.begin(), cs.order.begin() + static_cast<std::ptrdiff_t>(half)}) << '\n';
  out << cards_to_string({cs.order.begin() + static_cast<std::ptrdiff_t>(half), cs.order.end()}) << '\n';
  return out.str();
}

}  // namespace debruijn
