#include "sindhikit/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "sindhikit/charset.hpp"
#include "sindhikit/document.hpp"
#include "sindhikit/error.hpp"
#include "sindhikit/input.hpp"
#include "sindhikit/ordering.hpp"
#include "sindhikit/service.hpp"
#include "sindhikit/shaping.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_keys(const std::string& keys) {
  std::istringstream in(keys);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

// "Shift+x" or a lone uppercase letter absent from the layout means shifted.
std::pair<std::string, bool> parse_key_token(const Layout& layout, std::string token) {
  constexpr std::string_view kShift = "Shift+";
  if (token.starts_with(kShift) && token.size() > kShift.size()) {
    return {token.substr(kShift.size()), true};
  }
  if (token.size() == 1 && token[0] >= 'A' && token[0] <= 'Z' && !layout.find(token)) {
    return {std::string(1, static_cast<char>(token[0] - 'A' + 'a')), true};
  }
  return {std::move(token), false};
}

std::u32string typed_text(const Layout& layout, const std::string& keys) {
  Document doc;
  for (auto& token : split_keys(keys)) {
    auto [key_id, shift] = parse_key_token(layout, token);
    const KeyAction action = translate_key(layout, key_id, shift);
    if (std::holds_alternative<NoAction>(action)) {
      throw UsageError("key '" + token + "' is not mapped in layout '" + layout.name() + "'");
    }
    if (const auto* ins = std::get_if<InsertAction>(&action)) {
      doc.insert(std::u32string(1, ins->code_point));
      continue;
    }
    switch (std::get<ControlKey>(action)) {
      case ControlKey::Backspace: doc.delete_backward(); break;
      case ControlKey::Delete: doc.delete_forward(); break;
      case ControlKey::Left: doc.move_left(); break;
      case ControlKey::Right: doc.move_right(); break;
      case ControlKey::Home: doc.move_home(); break;
      case ControlKey::End: doc.move_end(); break;
      case ControlKey::Enter: doc.insert(U"\n"); break;
    }
  }
  return doc.text();
}

std::string read_all(std::istream& in) {
  std::string s{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void print_inspect(std::ostream& out, std::u32string_view text) {
  for (char32_t cp : text) {
    const auto info = lookup(cp);
    out << unicode::format_code_point(cp) << ' ' << (info ? info->name : std::string_view("-"))
        << ' ' << to_string(classify(cp).category) << ' ' << to_string(joining_class(cp)) << '\n';
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Sindhi text toolkit: shaping, ordering, input and dictionaries", "sindhikit"};
  app.require_subcommand(1);

  auto* shape_cmd = app.add_subcommand("shape", "Contextual forms of each character");
  bool debug = false;
  std::string shape_text_arg;
  shape_cmd->add_flag("--debug", debug, "U+XXXX<TAB>name<TAB>Form per glyph");
  shape_cmd->add_option("text", shape_text_arg, "Text to shape, or - for stdin")->required();

  auto* order_cmd = app.add_subcommand("order", "Visual permutation of a line");
  std::string order_text;
  order_cmd->add_option("text", order_text)->required();

  auto* inspect_cmd = app.add_subcommand("inspect", "Per-character repertoire information");
  std::string inspect_text;
  inspect_cmd->add_option("text", inspect_text)->required();

  auto* type_cmd = app.add_subcommand("type", "Replay key presses through a layout");
  std::string layout_name;
  std::string keys;
  type_cmd->add_option("--layout", layout_name, "Layout name")->required();
  type_cmd->add_option("keys", keys, "Space-separated key ids (Shift+k for shifted)")->required();

  auto* dict_cmd = app.add_subcommand("dict", "Dictionary lookup");
  std::string dict_name;
  std::string word;
  std::size_t prefix_limit = 0;
  dict_cmd->add_option("name", dict_name)->required();
  dict_cmd->add_option("word", word)->required();
  dict_cmd->add_option("--prefix", prefix_limit, "List up to N headwords starting with word");

  auto* repertoire_cmd = app.add_subcommand("repertoire", "Export the repertoire as TSV");

  auto* layout_cmd = app.add_subcommand("layout", "Print a layout in the layout file format");
  std::string print_layout;
  bool generated = false;
  layout_cmd->add_option("name", print_layout);
  layout_cmd->add_flag("--generate-sequential", generated,
                       "Print the sequential layout generated from the repertoire");

  auto* serve_cmd = app.add_subcommand("serve", "Run the local editing service");
  int port = 8765;
  std::string file;
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--file", file, "Document to open (created on first save)");

  std::vector<std::string> argv_storage{"sindhikit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*shape_cmd) {
      const std::string raw = shape_text_arg == "-" ? read_all(in) : shape_text_arg;
      const auto glyphs = shape_text(unicode::decode_utf8(raw));
      if (debug) {
        out << format_debug(glyphs);
      } else if (!glyphs.empty()) {
        for (std::size_t i = 0; i < glyphs.size(); ++i) {
          out << (i ? " " : "") << glyph_name(glyphs[i]) << ':' << to_string(glyphs[i].form);
        }
        out << '\n';
      }
    } else if (*order_cmd) {
      const auto visual = logical_to_visual(unicode::decode_utf8(order_text));
      for (std::size_t i = 0; i < visual.size(); ++i) out << (i ? " " : "") << visual[i];
      out << '\n';
    } else if (*inspect_cmd) {
      print_inspect(out, unicode::decode_utf8(inspect_text));
    } else if (*type_cmd) {
      const auto registry = LayoutRegistry::from_environment();
      const Layout* layout = registry.find(layout_name);
      if (!layout) throw UsageError("unknown layout '" + layout_name + "'");
      out << unicode::encode_utf8(typed_text(*layout, keys)) << '\n';
    } else if (*dict_cmd) {
      const DictionaryRegistry registry;
      const Dictionary* dict = registry.find(dict_name);
      if (!dict) throw Error(ErrorCode::NotFound, "unknown dictionary '" + dict_name + "'");
      unicode::decode_utf8(word);
      const auto results =
          prefix_limit > 0 ? dict->prefix_search(word, prefix_limit) : dict->lookup(word);
      for (const auto& r : results) out << r << '\n';
    } else if (*repertoire_cmd) {
      out << export_repertoire_tsv();
    } else if (*layout_cmd) {
      if (generated) {
        out << generate_sequential_layout().serialize();
      } else {
        const auto registry = LayoutRegistry::from_environment();
        const Layout* layout = registry.find(print_layout);
        if (!layout) throw UsageError("unknown layout '" + print_layout + "'");
        out << layout->serialize();
      }
    } else if (*serve_cmd) {
      Session session;
      if (!file.empty()) session.attach_file(file);
      HttpServer server(session);
      const int bound = server.bind(port);
      if (bound < 0) throw Error(ErrorCode::Internal, "cannot bind port " + std::to_string(port));
      out << "listening on http://127.0.0.1:" << bound << "/api" << std::endl;
      if (!server.listen()) throw Error(ErrorCode::Internal, "server stopped unexpectedly");
    }
  } catch (const UsageError& e) {
    err << "sindhikit: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "sindhikit: " << e.what();
    if (!e.detail().empty()) err << " (" << e.detail() << ')';
    err << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "sindhikit: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sindhikit
