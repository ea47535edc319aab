#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sindhikit/dictionary.hpp"
#include "sindhikit/document.hpp"
#include "sindhikit/input.hpp"

namespace sindhikit {

/// Built-in layouts plus `*.layout` files from an extra directory (the
/// layout name is the file stem). Immutable after construction.
class LayoutRegistry {
 public:
  explicit LayoutRegistry(std::optional<std::filesystem::path> extra_dir = std::nullopt);

  /// Honours SINDHIKIT_LAYOUT_DIR.
  static LayoutRegistry from_environment();

  const Layout* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Layout, std::less<>> layouts_;
};

class DictionaryRegistry {
 public:
  DictionaryRegistry();  // loads the built-in samples

  const Dictionary* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Dictionary, std::less<>> dictionaries_;
};

/// JSON rendering of the document together with its derived shaping and
/// visual-order data, recomputed on every call.
nlohmann::json make_doc_view(const Document& doc);

/// Per-line shaping records as they appear in DocView.shaped.
nlohmann::json shaped_line_json(std::u32string_view line);

nlohmann::json layout_json(const Layout& layout);

/// Request dispatcher behind the HTTP endpoint. One document per session;
/// every operation touching the document runs under a single lock, so
/// mutations are applied in some total order.
class Session {
 public:
  Session(LayoutRegistry layouts = LayoutRegistry::from_environment(),
          DictionaryRegistry dictionaries = {});

  /// {op, args} -> {ok: true, value} | {ok: false, error: {code, message, detail}}.
  nlohmann::json handle(const nlohmann::json& request);
  /// Same, from raw request bytes; malformed JSON yields a PARSE response.
  nlohmann::json handle_text(std::string_view body);

  /// Opens `path` if it exists, otherwise starts an empty document bound to it.
  void attach_file(const std::filesystem::path& path);

  /// Operation names accepted by handle().
  static const std::vector<std::string>& operations();

 private:
  nlohmann::json dispatch(const std::string& op, const nlohmann::json& args);
  nlohmann::json apply_key_action(const KeyAction& action);

  LayoutRegistry layouts_;
  DictionaryRegistry dictionaries_;
  std::mutex doc_mutex_;
  Document doc_;
};

nlohmann::json error_response(ErrorCode code, std::string_view message, std::string_view detail);

/// HTTP front end: POST /api carries one request per call, GET /api/ops
/// lists the operations. Binds to localhost only.
class HttpServer {
 public:
  explicit HttpServer(Session& session);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(int port, const std::string& host = "127.0.0.1");
  /// Blocks until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sindhikit
