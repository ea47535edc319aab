#include "sindhikit/ordering.hpp"

#include <optional>

#include "sindhikit/charset.hpp"
#include "sindhikit/error.hpp"

namespace sindhikit {
namespace {

std::optional<RunDirection> strong_direction(char32_t cp) {
  switch (classify(cp).direction) {
    case Direction::RTL: return RunDirection::RTL;
    case Direction::LTR:
    case Direction::Digit: return RunDirection::LTR;
    case Direction::Neutral: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<RunDirection> resolve(std::u32string_view line) {
  const std::size_t n = line.size();
  std::vector<std::optional<RunDirection>> strong(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (line[i] == U'\n') throw RangeError("line must not contain a newline");
    strong[i] = strong_direction(line[i]);
  }

  std::vector<RunDirection> resolved(n, RunDirection::RTL);
  std::size_t i = 0;
  while (i < n) {
    if (strong[i]) {
      resolved[i] = *strong[i];
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !strong[j]) ++j;
    const RunDirection before = i == 0 ? RunDirection::RTL : resolved[i - 1];
    const RunDirection after = j == n ? RunDirection::RTL : *strong[j];
    const RunDirection dir = before == after ? before : RunDirection::RTL;
    for (std::size_t k = i; k < j; ++k) resolved[k] = dir;
    i = j;
  }
  return resolved;
}

}  // namespace

std::vector<Run> segment_runs(std::u32string_view line) {
  const auto resolved = resolve(line);
  std::vector<Run> runs;
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    if (!runs.empty() && runs.back().direction == resolved[i]) {
      ++runs.back().length;
    } else {
      runs.push_back({i, 1, resolved[i]});
    }
  }
  return runs;
}

std::vector<std::size_t> logical_to_visual(std::u32string_view line) {
  const auto runs = segment_runs(line);
  std::vector<std::size_t> visual;
  visual.reserve(line.size());
  for (auto run = runs.rbegin(); run != runs.rend(); ++run) {
    if (run->direction == RunDirection::RTL) {
      for (std::size_t k = run->length; k-- > 0;) visual.push_back(run->start + k);
    } else {
      for (std::size_t k = 0; k < run->length; ++k) visual.push_back(run->start + k);
    }
  }
  return visual;
}

namespace {

// boundary[i] = caret boundary before logical index i, for i in [0, n].
std::vector<std::size_t> caret_boundaries(std::u32string_view line) {
  const std::size_t n = line.size();
  std::vector<std::size_t> boundary(n + 1, 0);
  if (n == 0) return boundary;

  const auto resolved = resolve(line);
  const auto visual = logical_to_visual(line);
  std::vector<std::size_t> position(n);
  for (std::size_t v = 0; v < n; ++v) position[visual[v]] = v;

  // Before a character: its leading edge. At the end: the trailing edge of
  // the last character.
  for (std::size_t i = 0; i < n; ++i) {
    boundary[i] = resolved[i] == RunDirection::RTL ? position[i] + 1 : position[i];
  }
  boundary[n] = resolved[n - 1] == RunDirection::RTL ? position[n - 1] : position[n - 1] + 1;
  return boundary;
}

}  // namespace

std::size_t caret_visual_position(std::u32string_view line, std::size_t logical_index) {
  if (logical_index > line.size()) throw RangeError("caret index out of range");
  return caret_boundaries(line)[logical_index];
}

std::size_t move_caret_visually(std::u32string_view line, std::size_t logical_index,
                                bool leftward) {
  if (logical_index > line.size()) throw RangeError("caret index out of range");
  const auto boundary = caret_boundaries(line);
  const std::size_t here = boundary[logical_index];
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    const std::size_t b = boundary[j];
    if (j == logical_index || (leftward ? b >= here : b <= here)) continue;
    if (!best || (leftward ? b > boundary[*best] : b < boundary[*best])) best = j;
  }
  return best.value_or(logical_index);
}

}  // namespace sindhikit
