#include "sindhikit/shaping.hpp"

#include "sindhikit/unicode.hpp"

namespace sindhikit {

std::string_view to_string(Form f) {
  switch (f) {
    case Form::Isolated: return "Isolated";
    case Form::Initial: return "Initial";
    case Form::Medial: return "Medial";
    case Form::Final: return "Final";
  }
  return "Isolated";
}

std::vector<ShapedGlyph> shape(std::u32string_view text) {
  const std::size_t n = text.size();
  std::vector<bool> joins_previous(n, false);
  std::vector<bool> joins_next(n, false);
  std::vector<JoiningClass> classes(n, JoiningClass::NonJoining);

  // Single pass: `previous` is the last non-transparent letter of the
  // current word, if any.
  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t cp = text[i];
    const JoiningClass cls = joining_class(cp);
    classes[i] = cls;
    if (cls == JoiningClass::Transparent) continue;
    if (!is_letter(cp)) {
      previous.reset();
      continue;
    }
    if (previous && classes[*previous] == JoiningClass::Dual &&
        (cls == JoiningClass::Dual || cls == JoiningClass::RightJoining)) {
      joins_previous[i] = true;
      joins_next[*previous] = true;
    }
    previous = i;
  }

  std::vector<ShapedGlyph> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({text[i], form_of(joins_previous[i], joins_next[i], classes[i]), std::nullopt,
                   {i, i + 1}});
  }
  return out;
}

std::vector<ShapedGlyph> apply_ligatures(std::span<const ShapedGlyph> shaped) {
  std::vector<ShapedGlyph> out;
  out.reserve(shaped.size());
  for (std::size_t i = 0; i < shaped.size(); ++i) {
    const ShapedGlyph& g = shaped[i];
    const bool lam_joins_next =
        !g.ligature_of && g.base == kLam && (g.form == Form::Initial || g.form == Form::Medial);
    if (lam_joins_next && i + 1 < shaped.size() && shaped[i + 1].base == kAlif &&
        !shaped[i + 1].ligature_of) {
      const bool joins_previous = g.form == Form::Medial;
      out.push_back({joins_previous ? kLamAlifFinal : kLamAlifIsolated,
                     joins_previous ? Form::Final : Form::Isolated,
                     std::pair{kLam, kAlif},
                     {g.source.start, shaped[i + 1].source.end}});
      ++i;
      continue;
    }
    out.push_back(g);
  }
  return out;
}

std::vector<ShapedGlyph> shape_text(std::u32string_view text) {
  return apply_ligatures(shape(text));
}

std::u32string unshape(std::span<const ShapedGlyph> shaped) {
  std::u32string out;
  out.reserve(shaped.size());
  for (const auto& g : shaped) {
    if (g.ligature_of) {
      out.push_back(g.ligature_of->first);
      out.push_back(g.ligature_of->second);
    } else {
      out.push_back(g.base);
    }
  }
  return out;
}

std::string glyph_name(const ShapedGlyph& g) {
  if (g.ligature_of) return "lamAlif";
  if (auto info = lookup(g.base)) return std::string(info->name);
  return "-";
}

std::string format_debug(std::span<const ShapedGlyph> shaped) {
  std::string out;
  for (const auto& g : shaped) {
    out += unicode::format_code_point(g.base);
    out += '\t';
    out += glyph_name(g);
    out += '\t';
    out += to_string(g.form);
    out += '\n';
  }
  return out;
}

}  // namespace sindhikit
