#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace sindhikit {

enum class RunDirection { RTL, LTR };

/// Maximal same-direction span of a line, in logical indices.
struct Run {
  std::size_t start;
  std::size_t length;
  RunDirection direction;

  friend bool operator==(const Run&, const Run&) = default;
};

// Single-level reordering for an RTL paragraph:
//  - repertoire characters are RTL; ASCII letters and digits are LTR;
//  - a run of neutrals takes the direction of the strong characters on
//    both sides when they agree, otherwise RTL. Line edges count as RTL.
//  - runs are laid out right to left; RTL runs are reversed internally.

/// Throws RangeError if `line` contains U+000A.
std::vector<Run> segment_runs(std::u32string_view line);

/// visual[v] = logical index shown at visual position v (0 = leftmost).
std::vector<std::size_t> logical_to_visual(std::u32string_view line);

/// Visual boundary (0 = left edge, size = right edge) at which a caret sitting
/// before logical index `logical_index` is drawn. Throws RangeError when the
/// index exceeds the line length.
std::size_t caret_visual_position(std::u32string_view line, std::size_t logical_index);

/// Arrow-key motion in visual space: the logical caret index whose boundary
/// is the nearest one strictly left (or right) of the current caret, or
/// `logical_index` itself when already at that edge.
std::size_t move_caret_visually(std::u32string_view line, std::size_t logical_index,
                                bool leftward);

}  // namespace sindhikit
