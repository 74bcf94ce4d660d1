#include <doctest.h>

#include <set>

#include <json.hpp>

#include "debruijn/builder.hpp"
#include "debruijn/error.hpp"
#include "debruijn/stack.hpp"

using namespace debruijn;

namespace {

std::vector<std::string> codes(const std::vector<Card>& cards) {
  std::vector<std::string> out;
  for (const Card& c : cards) out.push_back(c.code());
  return out;
}

Word bits(const char* s) { return static_cast<Word>(std::stoul(s, nullptr, 2)); }

ColorSignal signal_of(const std::vector<Card>& cards) {
  ColorSignal sig{};
  for (int i = 0; i < kSpectators; ++i) sig[static_cast<std::size_t>(i)] = cards[static_cast<std::size_t>(i)].color();
  return sig;
}

// Deal five cards from position i, signal, ask, and reveal.
void check_round_trip(const CribSheet& cs) {
  const std::size_t n = cs.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Card> hand;
    for (std::size_t j = 0; j < kSpectators; ++j) hand.push_back(cs.order[(i + j) % n]);
    const LookupResult r = lookup(cs, signal_of(hand));
    REQUIRE(std::find(r.candidates.begin(), r.candidates.end(), hand[0]) != r.candidates.end());
    bool yes = true;
    if (r.question) {
      const Card& asked = r.candidates[0];
      yes = r.question->attribute == Question::Attribute::Suit ? hand[0].suit == asked.suit
                                                               : hand[0].rank == asked.rank;
    }
    const Card first = resolve(r, yes);
    CHECK(first == hand[0]);
    CHECK(reveal(cs, first) == hand);
  }
}

}  // namespace

TEST_CASE("card codes") {
  CHECK(parse_card("10D") == Card{Rank::Ten, Suit::Diamonds});
  CHECK(parse_card("AH").code() == "AH");
  CHECK(parse_card("KS").color() == CardColor::Black);
  CHECK(parse_card("QH") == Card{Rank::Queen, Suit::Hearts});
  CHECK_THROWS_AS(parse_card("TD"), ParseError);
  CHECK_THROWS_AS(parse_card("1H"), ParseError);
  CHECK_THROWS_AS(parse_card("AX"), ParseError);
  CHECK_THROWS_AS(parse_card(""), ParseError);
  CHECK(suit_name(Suit::Hearts) == "hearts");
  CHECK(rank_name(Rank::Queen) == "queen");
}

TEST_CASE("builtin stack") {
  const Stack st = builtin_stack();
  CHECK(st.name == "builtin");
  CHECK(st.sequence.str() == "0000011101010010001011001101111100000101101111101001");
  REQUIRE(st.cards.size() == 52);
  CHECK(st.cards[0].code() == "AH");
  CHECK(st.cards[1].code() == "7H");
  CHECK(st.cards[51].code() == "4S");
  CHECK(std::set<Card>(st.cards.begin(), st.cards.end()).size() == 52);
  CHECK(validate_stack(st).passed());
  CHECK(validate_stack(st).to_text() == "stack: valid\n");
}

TEST_CASE("validation finds each kind of violation") {
  Stack swapped = builtin_stack();
  std::swap(swapped.cards[0], swapped.cards[48]);  // AH <-> AS
  {
    const auto r = validate_stack(swapped);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violations[0].kind == StackViolation::Kind::ColorMismatch);
    CHECK(r.violations[0].position == 0);
  }

  Stack dup = builtin_stack();
  dup.cards[1] = dup.cards[0];
  bool found = false;
  for (const auto& v : validate_stack(dup).violations) found |= v.kind == StackViolation::Kind::DuplicateCard;
  CHECK(found);

  Stack shorter = builtin_stack();
  shorter.cards.pop_back();
  CHECK(validate_stack(shorter).violations.at(0).kind == StackViolation::Kind::Length);

  Stack repeated = builtin_stack();
  repeated.sequence = CyclicSequence(std::string(26, '0') + std::string(26, '1'));
  bool multiplicity = false;
  for (const auto& v : validate_stack(repeated).violations) {
    multiplicity |= v.kind == StackViolation::Kind::WindowMultiplicity;
  }
  CHECK(multiplicity);
  CHECK_THROWS_AS(crib(repeated), InvalidStack);
}

TEST_CASE("auto_stack") {
  const CyclicSequence s = generate({52, 5, 2}, BalanceMode::Balanced);
  const Stack st = auto_stack(s);
  CHECK(st.name == "auto");
  CHECK(validate_stack(st).passed());
  for (std::size_t i = 0; i < 52; ++i) CHECK((st.cards[i].color() == CardColor::Black) == (s[i] == 1));
  CHECK(auto_stack(builtin_stack().sequence).cards != builtin_stack().cards);
  CHECK_THROWS_AS(auto_stack(CyclicSequence("0011")), InvalidArgument);
}

TEST_CASE("builtin crib table") {
  const CribSheet cs = crib(builtin_stack());
  CHECK(cs.table.size() == 32);
  CHECK(codes(cs.table.at(bits("00000"))) == std::vector<std::string>{"AH", "AD"});
  CHECK(codes(cs.table.at(bits("11000"))) == std::vector<std::string>{"7S"});
  CHECK(codes(cs.table.at(bits("01011"))) == std::vector<std::string>{"9H", "9D"});
  int single = 0;
  int pair = 0;
  for (const auto& [w, cards] : cs.table) {
    (cards.size() == 1 ? single : pair) += 1;
    const CardColor expected = (w >> 4) == 0 ? CardColor::Red : CardColor::Black;
    for (const Card& c : cards) CHECK(c.color() == expected);
  }
  CHECK(single == 12);
  CHECK(pair == 20);
  CHECK(cs.order == builtin_stack().cards);
}

TEST_CASE("rows where the printed table disagrees with the card list") {
  // Rows whose cards follow from the card list but differ from the printed
  // table: two name the wrong card, one lists its pair in reverse.
  const CribSheet cs = crib(builtin_stack());
  CHECK(codes(cs.table.at(bits("01101"))) == std::vector<std::string>{"QH", "4H"});
  CHECK(codes(cs.table.at(bits("01111"))) == std::vector<std::string>{"4D", "JD"});
  CHECK(codes(cs.table.at(bits("10111"))) == std::vector<std::string>{"2C", "6S"});
}

TEST_CASE("rank fallback rows of the builtin crib") {
  const CribSheet cs = crib(builtin_stack());
  CHECK(rank_fallback_rows(cs) == std::vector<Word>{bits("01101"), bits("01111")});
  const LookupResult r = lookup(cs, parse_signal("RBBRB"));
  REQUIRE(r.question.has_value());
  CHECK(r.question->attribute == Question::Attribute::Rank);
  CHECK(r.question->text == "queen?");
}

TEST_CASE("signals") {
  CHECK(signal_word(parse_signal("RBRBB")) == bits("01011"));
  CHECK(signal_word(parse_signal("rbrbb")) == bits("01011"));
  CHECK_THROWS_AS(parse_signal("XYZ"), ParseError);
  CHECK_THROWS_AS(parse_signal("RBRB"), ParseError);
  CHECK_THROWS_AS(parse_signal("RBRBBR"), ParseError);
}

TEST_CASE("lookup, resolve and reveal") {
  const CribSheet cs = crib(builtin_stack());
  const LookupResult r = lookup(cs, parse_signal("RBRBB"));
  CHECK(r.window == bits("01011"));
  CHECK(codes(r.candidates) == std::vector<std::string>{"9H", "9D"});
  REQUIRE(r.question.has_value());
  CHECK(r.question->attribute == Question::Attribute::Suit);
  CHECK(r.question->text == "hearts?");
  CHECK(resolve(r, true).code() == "9H");
  CHECK(resolve(r, false).code() == "9D");
  CHECK(cards_to_string(reveal(cs, resolve(r, false))) == "9D QS 4H 2S 6S");

  const LookupResult one = lookup(cs, parse_signal("BBRRR"));
  CHECK(codes(one.candidates) == std::vector<std::string>{"7S"});
  CHECK_FALSE(one.question.has_value());
  CHECK(resolve(one, true) == resolve(one, false));

  // The cyclic order wraps past the last card.
  CHECK(cards_to_string(reveal(cs, parse_card("4S"))) == "4S AH 7H 3D QD");
}

TEST_CASE("impossible signal") {
  // Drop a row to force a missing window.
  CribSheet cs = crib(builtin_stack());
  cs.table.erase(bits("00000"));
  CHECK_THROWS_AS(lookup(cs, parse_signal("RRRRR")), ImpossibleSignal);
  try {
    lookup(cs, parse_signal("RRRRR"));
  } catch (const ImpossibleSignal& e) {
    CHECK(std::string(e.what()).find("00000") != std::string::npos);
  }
}

TEST_CASE("round trip at every cut") {
  check_round_trip(crib(builtin_stack()));
  check_round_trip(crib(auto_stack(generate({52, 5, 2}, BalanceMode::Balanced))));
}

TEST_CASE("crib JSON") {
  const CribSheet cs = crib(builtin_stack());
  const std::string text = crib_to_json(cs);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["name"] == "builtin");
  CHECK(j["order"][0] == "AH");
  CHECK(j["order"].size() == 52);
  CHECK(j["table"]["01011"] == nlohmann::json::array({"9H", "9D"}));
  CHECK(j["table"].size() == 32);

  const CribSheet back = crib_from_json(text);
  CHECK(back.order == cs.order);
  CHECK(back.table == cs.table);
  CHECK(crib_to_json(back) == text);

  const Stack st = stack_from_json(text);
  CHECK(st.cards == builtin_stack().cards);
  CHECK(st.sequence == builtin_stack().sequence);
}

TEST_CASE("crib JSON rejection") {
  const auto good = nlohmann::json::parse(crib_to_json(crib(builtin_stack())));

  auto short_order = good;
  short_order["order"].erase(short_order["order"].size() - 1);
  CHECK_THROWS_AS(crib_from_json(short_order.dump()), InvalidStack);

  auto three = good;
  three["table"]["00000"] = nlohmann::json::array({"AH", "AD", "2H"});
  CHECK_THROWS_AS(crib_from_json(three.dump()), ParseError);

  auto bad_key = good;
  bad_key["table"]["0000"] = nlohmann::json::array({"AH"});
  CHECK_THROWS_AS(crib_from_json(bad_key.dump()), ParseError);

  auto wrong_row = good;
  wrong_row["table"]["01011"] = nlohmann::json::array({"9D", "9H"});
  CHECK_THROWS_AS(crib_from_json(wrong_row.dump()), InvalidStack);

  auto bad_card = good;
  bad_card["order"][0] = "ZZ";
  CHECK_THROWS_AS(crib_from_json(bad_card.dump()), ParseError);

  CHECK_THROWS_AS(crib_from_json("{"), ParseError);
  CHECK_THROWS_AS(crib_from_json("[]"), ParseError);

  auto no_table = good;
  no_table.erase("table");
  CHECK(crib_from_json(no_table.dump()).table == crib(builtin_stack()).table);
}

TEST_CASE("crib text") {
  const std::string text = crib_to_text(crib(builtin_stack()));
  CHECK(text.rfind("00000: AH, AD\n00001: 7H, 7D\n", 0) == 0);
  CHECK(text.find("\n11000: 7S\n") != std::string::npos);
  CHECK(text.find("\n\nAH 7H 3D") != std::string::npos);
  CHECK(text.substr(text.size() - 3) == "4S\n");
}
