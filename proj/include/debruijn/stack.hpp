#pragma once

// The 52-card stack built on a balanced (52,5,2) sequence: card model, the
// built-in stack, validation, crib sheets, lookup and reveal.
//
// A card is red exactly when its sequence bit is 0. Five consecutive cards
// therefore spell a 5-bit colour word, and each word appears at most twice.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/seqcore.hpp"

namespace debruijn {

inline constexpr std::size_t kDeckSize = 52;
inline constexpr int kSpectators = 5;
inline constexpr std::uint64_t kStackMultiplicity = 2;

enum class Suit { Hearts, Diamonds, Clubs, Spades };

// Ace = 1 ... King = 13.
enum class Rank : int { Ace = 1, Two, Three, Four, Five, Six, Seven, Eight, Nine, Ten, Jack, Queen, King };

enum class CardColor { Red, Black };

struct Card {
  Rank rank = Rank::Ace;
  Suit suit = Suit::Hearts;

  CardColor color() const noexcept {
    return suit == Suit::Hearts || suit == Suit::Diamonds ? CardColor::Red : CardColor::Black;
  }
  // "AH", "10D", "KS".
  std::string code() const;

  friend auto operator<=>(const Card&, const Card&) = default;
};

// Throws ParseError.
Card parse_card(std::string_view code);
std::string_view suit_name(Suit s);  // "hearts"
std::string_view rank_name(Rank r);  // "ace", "ten", "queen"

struct Stack {
  std::string name;
  CyclicSequence sequence;
  std::vector<Card> cards;  // position-aligned with the sequence
};

Stack builtin_stack();

struct StackViolation {
  enum class Kind { Length, DuplicateCard, ColorMismatch, WindowMultiplicity, Unbalanced };
  Kind kind;
  std::optional<std::size_t> position;
  std::string message;
};

struct StackReport {
  std::vector<StackViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
  std::string to_text() const;
};

StackReport validate_stack(const Stack& st);

// Red cards (hearts then diamonds, ace to king) go to the 0-positions in
// order, black cards (clubs then spades) to the 1-positions. Throws
// InvalidArgument unless s verifies as a balanced (52,5,2) sequence.
Stack auto_stack(const CyclicSequence& s, std::string name = "auto");

struct CribSheet {
  std::string name;
  CyclicSequence sequence;
  // 5-bit colour word -> cards at the positions where it starts, ascending.
  std::map<Word, std::vector<Card>> table;
  std::vector<Card> order;
};

// Throws InvalidStack if the stack does not validate.
CribSheet crib(const Stack& st);

using ColorSignal = std::array<CardColor, kSpectators>;

// Five characters over {R, B}. Throws ParseError.
ColorSignal parse_signal(std::string_view text);
Word signal_word(const ColorSignal& sig);

struct Question {
  enum class Attribute { Suit, Rank };
  Attribute attribute;
  // Asked about the first candidate: "hearts?" or "queen?".
  std::string text;
};

struct LookupResult {
  Word window = 0;
  std::vector<Card> candidates;
  std::optional<Question> question;
};

// Throws ImpossibleSignal when the word is absent from the crib.
LookupResult lookup(const CribSheet& cs, const ColorSignal& sig);

// Chooses the candidate implied by the spectator's answer to the question.
Card resolve(const LookupResult& r, bool answer_yes);

// The first card followed by the next four in cyclic order. Throws
// InvalidArgument if the card is not in the crib.
std::vector<Card> reveal(const CribSheet& cs, const Card& first_card);

// Windows whose two candidates share a suit and so need the rank question.
std::vector<Word> rank_fallback_rows(const CribSheet& cs);

// Crib document: {"name", "sequence", "table": {"01011": ["9H","9D"], ...},
// "order": ["AH", ...]}.
std::string crib_to_json(const CribSheet& cs);
// Parses and fully validates a crib or stack document. Accepts "order" or
// "cards" for the card list; "table", when present, must match the stack.
// Throws ParseError on schema errors, InvalidStack on inconsistent content.
CribSheet crib_from_json(std::string_view text);
Stack stack_from_json(std::string_view text);

// Table rows "00000: AH, AD", a blank line, then the cyclic order in two rows.
std::string crib_to_text(const CribSheet& cs);

std::string cards_to_string(const std::vector<Card>& cards, std::string_view separator = " ");

}  // namespace debruijn
