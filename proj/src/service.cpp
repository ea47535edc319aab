#include "sindhikit/service.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>

#include "sindhikit/error.hpp"
#include "sindhikit/ordering.hpp"
#include "sindhikit/shaping.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {

using nlohmann::json;

namespace {

/// Bad or missing request arguments.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message) : Error(ErrorCode::Parse, message) {}
};

const json& require(const json& args, const char* key) {
  auto it = args.find(key);
  if (it == args.end()) throw ArgumentError(std::string("missing argument '") + key + "'");
  return *it;
}

std::string string_arg(const json& args, const char* key) {
  const json& v = require(args, key);
  if (!v.is_string()) throw ArgumentError(std::string("argument '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string_arg(const json& args, const char* key) {
  auto it = args.find(key);
  if (it == args.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ArgumentError(std::string("argument '") + key + "' must be a string");
  return it->get<std::string>();
}

bool bool_arg(const json& args, const char* key, bool fallback) {
  auto it = args.find(key);
  if (it == args.end()) return fallback;
  if (!it->is_boolean()) throw ArgumentError(std::string("argument '") + key + "' must be a boolean");
  return it->get<bool>();
}

std::size_t index_arg(const json& v, const char* key) {
  if (!v.is_number_integer()) {
    throw ArgumentError(std::string("argument '") + key + "' must be an integer");
  }
  const auto n = v.get<std::int64_t>();
  if (n < 0) throw RangeError(std::string("argument '") + key + "' must be non-negative");
  return static_cast<std::size_t>(n);
}

Position position_arg(const json& v, const char* key) {
  if (!v.is_object()) throw ArgumentError(std::string("argument '") + key + "' must be an object");
  return {index_arg(require(v, "line"), "line"), index_arg(require(v, "column"), "column")};
}

json position_json(Position p) { return {{"line", p.line}, {"column", p.column}}; }

std::u32string decode_arg(const std::string& s) { return unicode::decode_utf8(s); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Internal, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Internal, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Internal, "short write to " + path.string());
}

json glyph_json(const ShapedGlyph& g) {
  json lig = nullptr;
  if (g.ligature_of) {
    lig = json::array({unicode::format_code_point(g.ligature_of->first),
                       unicode::format_code_point(g.ligature_of->second)});
  }
  return {{"base", unicode::format_code_point(g.base)},
          {"name", glyph_name(g)},
          {"form", std::string(to_string(g.form))},
          {"ligature", lig},
          {"span", json::array({g.source.start, g.source.end})}};
}

std::string cp_label(char32_t cp) {
  std::string out;
  unicode::append_utf8(out, cp);
  return out;
}

}  // namespace

// --- registries -------------------------------------------------------------

LayoutRegistry::LayoutRegistry(std::optional<std::filesystem::path> extra_dir) {
  for (const auto& layout : builtin_layouts()) layouts_.emplace(layout.name(), layout);
  if (!extra_dir) return;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(*extra_dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".layout") continue;
    const std::string name = entry.path().stem().string();
    layouts_.insert_or_assign(name, load_layout(read_file(entry.path()), name));
  }
}

LayoutRegistry LayoutRegistry::from_environment() {
  if (const char* dir = std::getenv("SINDHIKIT_LAYOUT_DIR"); dir && *dir) {
    return LayoutRegistry(std::filesystem::path(dir));
  }
  return LayoutRegistry();
}

const Layout* LayoutRegistry::find(std::string_view name) const {
  auto it = layouts_.find(name);
  return it == layouts_.end() ? nullptr : &it->second;
}

std::vector<std::string> LayoutRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : layouts_) out.push_back(name);
  return out;
}

DictionaryRegistry::DictionaryRegistry() {
  for (const auto& src : builtin_dictionary_sources()) {
    dictionaries_.emplace(std::string(src.name),
                          Dictionary::load(std::string(src.name), src.direction, src.tsv));
  }
}

const Dictionary* DictionaryRegistry::find(std::string_view name) const {
  auto it = dictionaries_.find(name);
  return it == dictionaries_.end() ? nullptr : &it->second;
}

std::vector<std::string> DictionaryRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : dictionaries_) out.push_back(name);
  return out;
}

// --- views ------------------------------------------------------------------

json shaped_line_json(std::u32string_view line) {
  json out = json::array();
  for (const auto& g : shape_text(line)) out.push_back(glyph_json(g));
  return out;
}

json make_doc_view(const Document& doc) {
  json lines = json::array();
  json shaped = json::array();
  json visual = json::array();
  for (const auto& line : doc.lines()) {
    lines.push_back(unicode::encode_utf8(line));
    shaped.push_back(shaped_line_json(line));
    visual.push_back(logical_to_visual(line));
  }
  const Position cursor = doc.cursor();
  return {{"lines", lines},
          {"cursor", position_json(cursor)},
          {"dirty", doc.dirty()},
          {"path", doc.path() ? json(*doc.path()) : json(nullptr)},
          {"shaped", shaped},
          {"visual", visual},
          {"caretVisual", caret_visual_position(doc.lines()[cursor.line], cursor.column)},
          {"canUndo", doc.undo_depth() > 0},
          {"canRedo", doc.redo_depth() > 0}};
}

json layout_json(const Layout& layout) {
  json rows = json::array();
  for (const auto& row : layout.rows()) {
    json keys = json::array();
    for (const auto& key : row) {
      json k = {{"key", key.key_id},
                {"insert", unicode::format_code_point(key.base)},
                {"label", cp_label(key.base)},
                {"shift", nullptr},
                {"shiftLabel", nullptr}};
      if (key.shifted) {
        k["shift"] = unicode::format_code_point(*key.shifted);
        k["shiftLabel"] = cp_label(*key.shifted);
      }
      keys.push_back(std::move(k));
    }
    rows.push_back(std::move(keys));
  }
  json controls = json::array();
  for (auto k : {ControlKey::Backspace, ControlKey::Delete, ControlKey::Left, ControlKey::Right,
                 ControlKey::Home, ControlKey::End, ControlKey::Enter}) {
    controls.push_back(std::string(to_string(k)));
  }
  controls.push_back(std::string(kSpaceKey));
  return {{"name", layout.name()}, {"rows", rows}, {"controls", controls}};
}

json error_response(ErrorCode code, std::string_view message, std::string_view detail) {
  return {{"ok", false},
          {"error",
           {{"code", std::string(to_string(code))},
            {"message", std::string(message)},
            {"detail", std::string(detail)}}}};
}

// --- session ----------------------------------------------------------------

Session::Session(LayoutRegistry layouts, DictionaryRegistry dictionaries)
    : layouts_(std::move(layouts)), dictionaries_(std::move(dictionaries)) {}

const std::vector<std::string>& Session::operations() {
  static const std::vector<std::string> ops{
      "doc.get",      "doc.new",        "doc.insert", "doc.deleteBackward", "doc.deleteForward",
      "doc.moveCursor", "doc.setCursor", "doc.undo",   "doc.redo",           "doc.find",
      "doc.open",     "doc.save",       "shape.text", "layout.list",        "layout.get",
      "layout.keypress", "dict.list",   "dict.lookup", "dict.prefix",
  };
  return ops;
}

void Session::attach_file(const std::filesystem::path& path) {
  std::lock_guard lock(doc_mutex_);
  if (std::filesystem::exists(path)) {
    doc_ = Document::load(read_file(path));
  } else {
    doc_ = Document();
  }
  doc_.set_path(path.string());
}

json Session::handle_text(std::string_view body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(ErrorCode::Parse, "request is not valid JSON", e.what());
  }
  return handle(request);
}

json Session::handle(const json& request) {
  try {
    if (!request.is_object()) throw ArgumentError("request must be a JSON object");
    auto op = request.find("op");
    if (op == request.end() || !op->is_string()) throw ArgumentError("request needs a string 'op'");
    json args = json::object();
    if (auto a = request.find("args"); a != request.end() && !a->is_null()) {
      if (!a->is_object()) throw ArgumentError("'args' must be an object");
      args = *a;
    }
    return {{"ok", true}, {"value", dispatch(op->get<std::string>(), args)}};
  } catch (const Error& e) {
    return error_response(e.code(), e.what(), e.detail());
  } catch (const json::exception& e) {
    return error_response(ErrorCode::Parse, "malformed arguments", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(ErrorCode::Parse, e.what(), "");
  } catch (const std::out_of_range& e) {
    return error_response(ErrorCode::Range, e.what(), "");
  } catch (const std::exception& e) {
    return error_response(ErrorCode::Internal, e.what(), "");
  }
}

json Session::apply_key_action(const KeyAction& action) {
  if (const auto* ins = std::get_if<InsertAction>(&action)) {
    doc_.insert(std::u32string(1, ins->code_point));
  } else if (const auto* ctl = std::get_if<ControlKey>(&action)) {
    const Position c = doc_.cursor();
    switch (*ctl) {
      case ControlKey::Backspace: doc_.delete_backward(); break;
      case ControlKey::Delete: doc_.delete_forward(); break;
      case ControlKey::Home: doc_.move_home(); break;
      case ControlKey::End: doc_.move_end(); break;
      case ControlKey::Enter: doc_.insert(U"\n"); break;
      case ControlKey::Left:
      case ControlKey::Right: {
        const bool leftward = *ctl == ControlKey::Left;
        const auto& line = doc_.lines()[c.line];
        const std::size_t col = move_caret_visually(line, c.column, leftward);
        if (col != c.column) {
          doc_.set_cursor({c.line, col});
        } else if (leftward && c.line + 1 < doc_.lines().size()) {
          doc_.set_cursor({c.line + 1, 0});
        } else if (!leftward && c.line > 0) {
          doc_.set_cursor({c.line - 1, doc_.lines()[c.line - 1].size()});
        }
        break;
      }
    }
  }
  return make_doc_view(doc_);
}

json Session::dispatch(const std::string& op, const json& args) {
  // Stateless operations.
  if (op == "shape.text") {
    const auto text = decode_arg(string_arg(args, "text"));
    json glyphs = json::array();
    for (const auto& g : shape_text(text)) glyphs.push_back(glyph_json(g));
    return {{"glyphs", glyphs}, {"debug", format_debug(shape_text(text))}};
  }
  if (op == "layout.list") return {{"layouts", layouts_.names()}};
  if (op == "layout.get") {
    const std::string name = string_arg(args, "name");
    const Layout* layout = layouts_.find(name);
    if (!layout) throw Error(ErrorCode::NotFound, "unknown layout '" + name + "'");
    return layout_json(*layout);
  }
  if (op == "dict.list") {
    json out = json::array();
    for (const auto& name : dictionaries_.names()) {
      out.push_back({{"name", name},
                     {"direction", std::string(to_string(dictionaries_.find(name)->direction()))},
                     {"entries", dictionaries_.find(name)->size()}});
    }
    return {{"dictionaries", out}};
  }
  if (op == "dict.lookup" || op == "dict.prefix") {
    const std::string name = string_arg(args, "name");
    const Dictionary* dict = dictionaries_.find(name);
    if (!dict) throw Error(ErrorCode::NotFound, "unknown dictionary '" + name + "'");
    if (op == "dict.lookup") {
      const std::string word = string_arg(args, "word");
      decode_arg(word);
      return {{"word", word}, {"glosses", dict->lookup(word)}};
    }
    const std::string prefix = string_arg(args, "prefix");
    decode_arg(prefix);
    std::size_t limit = 10;
    if (auto it = args.find("limit"); it != args.end()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 1) {
        throw ArgumentError("'limit' must be a positive integer");
      }
      limit = it->get<std::size_t>();
    }
    return {{"prefix", prefix}, {"headwords", dict->prefix_search(prefix, limit)}};
  }

  std::lock_guard lock(doc_mutex_);
  if (op == "doc.get") return make_doc_view(doc_);
  if (op == "doc.new") {
    doc_ = Document();
    return make_doc_view(doc_);
  }
  if (op == "doc.insert") {
    doc_.insert(decode_arg(string_arg(args, "text")));
    return make_doc_view(doc_);
  }
  if (op == "doc.deleteBackward") {
    doc_.delete_backward();
    return make_doc_view(doc_);
  }
  if (op == "doc.deleteForward") {
    doc_.delete_forward();
    return make_doc_view(doc_);
  }
  if (op == "doc.moveCursor") {
    const std::string dir = string_arg(args, "dir");
    const std::string mode = optional_string_arg(args, "mode").value_or("logical");
    if (mode != "logical" && mode != "visual") throw ArgumentError("'mode' must be logical or visual");
    if (dir == "home") {
      doc_.move_home();
    } else if (dir == "end") {
      doc_.move_end();
    } else if (dir == "left" || dir == "right") {
      if (mode == "visual") {
        return apply_key_action(dir == "left" ? ControlKey::Left : ControlKey::Right);
      }
      dir == "left" ? doc_.move_left() : doc_.move_right();
    } else {
      throw ArgumentError("'dir' must be one of left, right, home, end");
    }
    return make_doc_view(doc_);
  }
  if (op == "doc.setCursor") {
    doc_.set_cursor(position_arg(require(args, "position"), "position"));
    return make_doc_view(doc_);
  }
  if (op == "doc.undo") {
    doc_.undo();
    return make_doc_view(doc_);
  }
  if (op == "doc.redo") {
    doc_.redo();
    return make_doc_view(doc_);
  }
  if (op == "doc.find") {
    const auto needle = decode_arg(string_arg(args, "needle"));
    if (needle.empty()) throw ArgumentError("'needle' must not be empty");
    Position from{};
    if (auto it = args.find("from"); it != args.end() && !it->is_null()) {
      from = position_arg(*it, "from");
    }
    const auto hit = doc_.find(needle, from);
    return {{"position", hit ? position_json(*hit) : json(nullptr)},
            {"length", canonicalize(needle).size()}};
  }
  if (op == "doc.open") {
    const std::filesystem::path path = string_arg(args, "path");
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorCode::NotFound, "no such file: " + path.string());
    }
    Document loaded = Document::load(read_file(path));
    loaded.set_path(path.string());
    doc_ = std::move(loaded);
    return make_doc_view(doc_);
  }
  if (op == "doc.save") {
    auto path = optional_string_arg(args, "path");
    if (!path) path = doc_.path();
    if (!path) throw ArgumentError("document has no path; pass 'path'");
    write_file(*path, doc_.serialize());
    doc_.save();
    doc_.set_path(*path);
    return make_doc_view(doc_);
  }
  if (op == "layout.keypress") {
    const std::string name = string_arg(args, "name");
    const Layout* layout = layouts_.find(name);
    if (!layout) throw Error(ErrorCode::NotFound, "unknown layout '" + name + "'");
    return apply_key_action(translate_key(*layout, string_arg(args, "key"),
                                          bool_arg(args, "shift", false)));
  }
  throw Error(ErrorCode::NotFound, "unknown op '" + op + "'");
}

// --- HTTP -------------------------------------------------------------------

struct HttpServer::Impl {
  Session& session;
  httplib::Server server;
  explicit Impl(Session& s) : session(s) {}
};

HttpServer::HttpServer(Session& session) : impl_(std::make_unique<Impl>(session)) {
  auto& srv = impl_->server;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  srv.Options("/api", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.Post("/api", [this](const httplib::Request& req, httplib::Response& res) {
    res.set_content(impl_->session.handle_text(req.body).dump(), "application/json");
  });
  srv.Get("/api/ops", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(json(Session::operations()).dump(), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(int port, const std::string& host) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace sindhikit
