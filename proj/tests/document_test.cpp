#include <doctest.h>

#include <random>
#include <stdexcept>

#include "edit_model.hpp"
#include "oracles.hpp"
#include "sindhikit/document.hpp"
#include "sindhikit/error.hpp"
#include "sindhikit/unicode.hpp"

using namespace sindhikit;

using oracle::EditModel;
using oracle::flat_offset;

TEST_CASE("insert") {
  Document doc;
  CHECK(doc.lines().size() == 1);
  CHECK_FALSE(doc.dirty());
  doc.insert(U"سنڌي");
  CHECK(doc.lines()[0] == std::u32string{0x0633, 0x0646, 0x068C, 0x064A});
  CHECK(doc.cursor() == Position{0, 4});
  CHECK(doc.dirty());
  CHECK(doc.undo_depth() == 1);

  doc.insert(U"");
  CHECK(doc.undo_depth() == 1);

  Document two;
  two.insert(U"a\nb");
  CHECK(two.lines() == std::vector<std::u32string>{U"a", U"b"});
  CHECK(two.cursor() == Position{1, 1});
}

TEST_CASE("insert canonicalizes yeh and presentation forms") {
  Document doc;
  doc.insert(std::u32string{0x0633, 0x0646, 0x068C, 0x06CC});
  CHECK(doc.lines()[0] == std::u32string{0x0633, 0x0646, 0x068C, 0x064A});
  doc.insert(U"ﻻ");
  CHECK(doc.lines()[0].substr(4) == U"لا");
}

TEST_CASE("delete") {
  Document doc;
  doc.insert(U"سنڌي");
  doc.delete_backward();
  CHECK(doc.lines()[0] == U"سنڌ");
  CHECK(doc.cursor() == Position{0, 3});

  Document edge;
  edge.delete_backward();
  edge.delete_forward();
  CHECK(edge.undo_depth() == 0);

  Document join;
  join.insert(U"ab\ncd");
  join.set_cursor({0, 2});
  join.delete_forward();
  CHECK(join.lines() == std::vector<std::u32string>{U"abcd"});
  join.set_cursor({0, 2});
  join.insert(U"\n");
  join.delete_backward();
  CHECK(join.lines() == std::vector<std::u32string>{U"abcd"});
  CHECK(join.cursor() == Position{0, 2});
}

TEST_CASE("undo and redo") {
  Document doc;
  CHECK_FALSE(doc.undo());
  CHECK(doc.text().empty());

  doc.insert(U"س");
  CHECK(doc.undo());
  CHECK(doc.text().empty());
  CHECK(doc.cursor() == Position{0, 0});
  CHECK(doc.redo());
  CHECK(doc.text() == U"س");
  CHECK(doc.cursor() == Position{0, 1});

  doc.undo();
  doc.insert(U"ن");
  CHECK_FALSE(doc.redo());  // new edit cleared the redo stack

  Document del;
  del.insert(U"ab\ncd");
  del.set_cursor({1, 0});
  del.delete_backward();
  CHECK(del.text() == U"abcd");
  del.undo();
  CHECK(del.text() == U"ab\ncd");
  CHECK(del.cursor() == Position{1, 0});
}

TEST_CASE("find") {
  Document doc;
  doc.insert(U"سنڌي");
  CHECK(doc.find(U"ڌي", {0, 0}) == Position{0, 2});
  CHECK_FALSE(doc.find(U"ب", {0, 0}).has_value());
  CHECK(doc.find(std::u32string{0x068C, 0x06CC}, {0, 0}) == Position{0, 2});
  CHECK_FALSE(doc.find(U"س", {0, 1}).has_value());
  CHECK_THROWS_AS(doc.find(U"", {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(doc.find(U"س", {3, 0}), RangeError);

  Document multi;
  multi.insert(U"ab\ncab");
  CHECK(multi.find(U"ab", {0, 1}) == Position{1, 1});
  CHECK(multi.find(U"b\nc", {0, 0}) == Position{0, 1});
}

TEST_CASE("save and load") {
  Document doc;
  doc.insert(U"سنڌي");
  const std::string bytes = doc.save();
  CHECK(bytes == "\xD8\xB3\xD9\x86\xDA\x8C\xD9\x8A");
  CHECK_FALSE(doc.dirty());

  Document loaded = Document::load("ab\n\xD8\xB3\n");
  CHECK(loaded.lines() == std::vector<std::u32string>{U"ab", U"س", U""});
  CHECK(loaded.cursor() == Position{0, 0});
  CHECK_FALSE(loaded.dirty());
  CHECK(loaded.serialize() == "ab\n\xD8\xB3\n");

  CHECK(Document::load("\xDB\x8C").lines()[0] == std::u32string{0x064A});

  try {
    Document::load("ab\xFF");
    FAIL("expected EncodingError");
  } catch (const EncodingError& e) {
    CHECK(e.byte_offset() == 2);
    CHECK(e.code() == ErrorCode::Encoding);
  }
  CHECK_THROWS_AS(Document::load("\xC0\x80"), EncodingError);      // overlong
  CHECK_THROWS_AS(Document::load("\xED\xA0\x80"), EncodingError);  // surrogate
  CHECK_THROWS_AS(Document::load("\xE2\x82"), EncodingError);      // truncated
}

TEST_CASE("cursor motion") {
  Document doc;
  doc.insert(U"ab\ncd");
  doc.move_home();
  CHECK(doc.cursor() == Position{1, 0});
  doc.move_left();
  CHECK(doc.cursor() == Position{0, 2});
  doc.move_right();
  CHECK(doc.cursor() == Position{1, 0});
  doc.move_end();
  CHECK(doc.cursor() == Position{1, 2});
  doc.move_right();
  CHECK(doc.cursor() == Position{1, 2});
  CHECK_THROWS_AS(doc.set_cursor({0, 3}), RangeError);
  CHECK_THROWS_AS(doc.set_cursor({2, 0}), RangeError);
}

TEST_CASE("random edit scripts agree with the snapshot model and fully undo") {
  std::mt19937 rng(2024);
  const std::u32string alphabet = U"سنڌيبلءa1 \nی";
  std::uniform_int_distribution<int> op(0, 9);
  for (int script = 0; script < 200; ++script) {
    Document doc;
    EditModel model;
    for (int step = 0; step < 200; ++step) {
      switch (op(rng)) {
        case 0:
        case 1:
        case 2: {
          const auto s = testgen::random_string(rng, alphabet, 4);
          doc.insert(s);
          model.insert(s);
          break;
        }
        case 3: doc.delete_backward(); model.backspace(); break;
        case 4: doc.delete_forward(); model.del(); break;
        case 5: doc.move_left(); model.left(); break;
        case 6: doc.move_right(); model.right(); break;
        case 7: doc.move_home(); model.home(); break;
        case 8: doc.undo(); model.do_undo(); break;
        case 9: doc.redo(); model.do_redo(); break;
      }
      REQUIRE(doc.text() == model.now.text);
      REQUIRE(flat_offset(doc) == model.now.cursor);
    }
    for (int k = 0; k < 200; ++k) doc.undo();
    CHECK(doc.text().empty());
    CHECK(doc.cursor() == Position{0, 0});

    // Storage purity: every stored scalar is logical-order text.
    for (const auto& line : doc.lines()) {
      for (char32_t c : line) CHECK_FALSE(is_presentation_form(c));
    }
  }
}

TEST_CASE("find agrees with the naive scan") {
  std::mt19937 rng(31);
  const std::u32string alphabet = U"سنڌيa\n";
  for (int iter = 0; iter < 500; ++iter) {
    Document doc;
    doc.insert(testgen::random_string(rng, alphabet, 40));
    auto needle = testgen::random_string(rng, alphabet, 3);
    if (needle.empty()) needle = U"س";
    std::uniform_int_distribution<std::size_t> line(0, doc.lines().size() - 1);
    const std::size_t l = line(rng);
    std::uniform_int_distribution<std::size_t> col(0, doc.lines()[l].size());
    const Position from{l, col(rng)};
    CHECK(doc.find(needle, from) == oracle::find(doc.lines(), needle, from));
  }
}

TEST_CASE("save/load round trip for random documents") {
  std::mt19937 rng(8);
  const std::u32string alphabet = U"سنڌيلاa1 \n.ّ";
  for (int iter = 0; iter < 300; ++iter) {
    Document doc;
    doc.insert(testgen::random_string(rng, alphabet, 50));
    const std::string bytes = doc.save();
    const Document back = Document::load(bytes);
    CHECK(back.lines() == doc.lines());
    CHECK(back.serialize() == bytes);
  }
}
