#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sindhikit {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

enum class EditKind { Insert, Delete };

/// One undoable change. `payload` is the inserted or removed text (may hold
/// newlines); `cursor_before` is where the cursor was when it was applied.
struct Edit {
  EditKind kind;
  Position position;
  std::u32string payload;
  Position cursor_before;
};

/// Logical-order text buffer. Lines never contain U+000A; there is always at
/// least one line. Inserted text is canonicalized (presentation forms folded,
/// U+06CC stored as U+064A) so only logical-order scalars are ever stored.
class Document {
 public:
  Document();

  /// Parses UTF-8 (no BOM handling beyond treating U+FEFF as text). Throws
  /// EncodingError. Cursor at (0,0), clean, empty history.
  static Document load(std::string_view bytes);

  /// UTF-8 bytes with '\n' separators, no BOM.
  std::string serialize() const;
  /// serialize() and mark the buffer clean.
  std::string save();

  void insert(std::u32string_view text);
  void delete_backward();
  void delete_forward();

  /// Return false when the respective stack is empty.
  bool undo();
  bool redo();

  /// First match at or after `from`, line-major. Throws std::invalid_argument
  /// for an empty needle and RangeError for an invalid `from`.
  std::optional<Position> find(std::u32string_view needle, Position from) const;

  void move_left();
  void move_right();
  void move_home();
  void move_end();
  /// Throws RangeError when `p` is outside the buffer.
  void set_cursor(Position p);

  const std::vector<std::u32string>& lines() const noexcept { return lines_; }
  std::u32string text() const;
  Position cursor() const noexcept { return cursor_; }
  bool dirty() const noexcept { return dirty_; }
  const std::optional<std::string>& path() const noexcept { return path_; }
  void set_path(std::string path) { path_ = std::move(path); }
  std::size_t undo_depth() const noexcept { return undo_.size(); }
  std::size_t redo_depth() const noexcept { return redo_.size(); }

 private:
  std::size_t offset_of(Position p) const;
  Position position_of(std::size_t offset) const;
  void validate(Position p) const;

  // Raw mutations; they neither record history nor touch the cursor.
  Position raw_insert(Position at, std::u32string_view text);
  void raw_erase(Position at, std::size_t count);
  std::u32string slice(Position at, std::size_t count) const;

  void record(Edit edit);

  std::vector<std::u32string> lines_;
  Position cursor_;
  std::vector<Edit> undo_;
  std::vector<Edit> redo_;
  bool dirty_ = false;
  std::optional<std::string> path_;
};

}  // namespace sindhikit
