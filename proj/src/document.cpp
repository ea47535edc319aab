#include "sindhikit/document.hpp"

#include <stdexcept>

#include "sindhikit/charset.hpp"
#include "sindhikit/error.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {

Document::Document() : lines_(1) {}

Document Document::load(std::string_view bytes) {
  const std::u32string decoded = canonicalize(unicode::decode_utf8(bytes));
  Document doc;
  doc.raw_insert({0, 0}, decoded);
  return doc;
}

std::string Document::serialize() const { return unicode::encode_utf8(text()); }

std::string Document::save() {
  std::string bytes = serialize();
  dirty_ = false;
  return bytes;
}

std::u32string Document::text() const {
  std::u32string out;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (i > 0) out.push_back(U'\n');
    out += lines_[i];
  }
  return out;
}

void Document::validate(Position p) const {
  if (p.line >= lines_.size() || p.column > lines_[p.line].size()) {
    throw RangeError("position (" + std::to_string(p.line) + "," + std::to_string(p.column) +
                     ") is outside the document");
  }
}

std::size_t Document::offset_of(Position p) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < p.line; ++i) offset += lines_[i].size() + 1;
  return offset + p.column;
}

Position Document::position_of(std::size_t offset) const {
  std::size_t line = 0;
  while (offset > lines_[line].size()) {
    offset -= lines_[line].size() + 1;
    ++line;
  }
  return {line, offset};
}

Position Document::raw_insert(Position at, std::u32string_view text) {
  std::u32string& line = lines_[at.line];
  const std::u32string tail = line.substr(at.column);
  line.erase(at.column);

  Position end = at;
  std::size_t start = 0;
  while (true) {
    const auto nl = text.find(U'\n', start);
    const auto piece = text.substr(start, nl == std::u32string_view::npos ? nl : nl - start);
    lines_[end.line] += piece;
    end.column = lines_[end.line].size();
    if (nl == std::u32string_view::npos) break;
    lines_.insert(lines_.begin() + static_cast<std::ptrdiff_t>(end.line) + 1, std::u32string{});
    ++end.line;
    end.column = 0;
    start = nl + 1;
  }
  lines_[end.line] += tail;
  return end;
}

std::u32string Document::slice(Position at, std::size_t count) const {
  return text().substr(offset_of(at), count);
}

void Document::raw_erase(Position at, std::size_t count) {
  std::u32string all = text();
  all.erase(offset_of(at), count);
  lines_.assign(1, std::u32string{});
  raw_insert({0, 0}, all);
}

void Document::record(Edit edit) {
  undo_.push_back(std::move(edit));
  redo_.clear();
  dirty_ = true;
}

void Document::insert(std::u32string_view text) {
  const std::u32string clean = canonicalize(text);
  if (clean.empty()) return;
  const Position before = cursor_;
  cursor_ = raw_insert(before, clean);
  record({EditKind::Insert, before, clean, before});
}

void Document::delete_backward() {
  if (cursor_ == Position{0, 0}) return;
  const Position before = cursor_;
  const Position at = position_of(offset_of(cursor_) - 1);
  std::u32string removed = slice(at, 1);
  raw_erase(at, 1);
  cursor_ = at;
  record({EditKind::Delete, at, std::move(removed), before});
}

void Document::delete_forward() {
  const std::size_t offset = offset_of(cursor_);
  if (offset == offset_of({lines_.size() - 1, lines_.back().size()})) return;
  std::u32string removed = slice(cursor_, 1);
  raw_erase(cursor_, 1);
  record({EditKind::Delete, cursor_, std::move(removed), cursor_});
}

bool Document::undo() {
  if (undo_.empty()) return false;
  Edit edit = std::move(undo_.back());
  undo_.pop_back();
  if (edit.kind == EditKind::Insert) {
    raw_erase(edit.position, edit.payload.size());
  } else {
    raw_insert(edit.position, edit.payload);
  }
  cursor_ = edit.cursor_before;
  dirty_ = true;
  redo_.push_back(std::move(edit));
  return true;
}

bool Document::redo() {
  if (redo_.empty()) return false;
  Edit edit = std::move(redo_.back());
  redo_.pop_back();
  if (edit.kind == EditKind::Insert) {
    cursor_ = raw_insert(edit.position, edit.payload);
  } else {
    raw_erase(edit.position, edit.payload.size());
    cursor_ = edit.position;
  }
  dirty_ = true;
  undo_.push_back(std::move(edit));
  return true;
}

std::optional<Position> Document::find(std::u32string_view needle, Position from) const {
  if (needle.empty()) throw std::invalid_argument("find needle must not be empty");
  validate(from);
  const std::u32string normalized = canonicalize(needle);
  const std::u32string all = text();
  const auto hit = all.find(normalized, offset_of(from));
  if (hit == std::u32string::npos) return std::nullopt;
  return position_of(hit);
}

void Document::move_left() {
  if (cursor_.column > 0) {
    --cursor_.column;
  } else if (cursor_.line > 0) {
    --cursor_.line;
    cursor_.column = lines_[cursor_.line].size();
  }
}

void Document::move_right() {
  if (cursor_.column < lines_[cursor_.line].size()) {
    ++cursor_.column;
  } else if (cursor_.line + 1 < lines_.size()) {
    ++cursor_.line;
    cursor_.column = 0;
  }
}

void Document::move_home() { cursor_.column = 0; }

void Document::move_end() { cursor_.column = lines_[cursor_.line].size(); }

void Document::set_cursor(Position p) {
  validate(p);
  cursor_ = p;
}

}  // namespace sindhikit
