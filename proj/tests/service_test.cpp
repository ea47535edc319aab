#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <httplib.h>

#include "schema.hpp"
#include "sindhikit/service.hpp"
#include "sindhikit/unicode.hpp"

using namespace sindhikit;
using nlohmann::json;

namespace {

json call(Session& s, const std::string& op, json args = json::object()) {
  json r = s.handle({{"op", op}, {"args", args}});
  CHECK(schema::valid_response(op, r));
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sindhikit_test_" + name);
}

}  // namespace

TEST_CASE("insert then get") {
  Session s;
  call(s, "doc.insert", {{"text", "سنڌي"}});
  const json view = call(s, "doc.get")["value"];
  CHECK(view["cursor"]["column"] == 4);
  CHECK(unicode::decode_utf8(view["lines"][0].get<std::string>()) ==
        std::u32string{0x0633, 0x0646, 0x068C, 0x064A});
  CHECK(view["dirty"] == true);
  CHECK(view["shaped"][0][0]["form"] == "Initial");
  CHECK(view["visual"][0] == json::array({3, 2, 1, 0}));
  CHECK(view["caretVisual"] == 0);
}

TEST_CASE("undo on a fresh document is a no-op") {
  Session s;
  const json before = call(s, "doc.get")["value"];
  const json r = call(s, "doc.undo");
  CHECK(r["ok"] == true);
  CHECK(r["value"] == before);
}

TEST_CASE("error codes") {
  Session s;
  CHECK(call(s, "dict.lookup", {{"name", "nope"}, {"word", "x"}})["error"]["code"] == "NOT_FOUND");
  CHECK(call(s, "no.such.op")["error"]["code"] == "NOT_FOUND");
  CHECK(call(s, "doc.insert", {{"txt", "x"}})["error"]["code"] == "PARSE");
  CHECK(call(s, "doc.insert", {{"text", 5}})["error"]["code"] == "PARSE");
  CHECK(call(s, "doc.setCursor", {{"position", {{"line", 3}, {"column", 0}}}})["error"]["code"] ==
        "RANGE");
  CHECK(call(s, "doc.find", {{"needle", ""}})["error"]["code"] == "PARSE");
  CHECK(call(s, "doc.find", {{"needle", "a"}, {"from", {{"line", 0}, {"column", 9}}}})["error"]
            ["code"] == "RANGE");
  CHECK(call(s, "doc.moveCursor", {{"dir", "up"}})["error"]["code"] == "PARSE");
  CHECK(call(s, "doc.save")["error"]["code"] == "PARSE");
  CHECK(call(s, "doc.open", {{"path", "/nonexistent/zz.txt"}})["error"]["code"] == "NOT_FOUND");
  CHECK(call(s, "layout.get", {{"name", "dvorak"}})["error"]["code"] == "NOT_FOUND");
  CHECK(call(s, "dict.prefix", {{"name", "computer"}, {"prefix", ""}, {"limit", 0}})["error"]
            ["code"] == "PARSE");
  CHECK(call(s, "doc.insert", {{"text", "\xFF"}})["error"]["code"] == "ENCODING");

  const json bad = s.handle_text("{not json");
  CHECK(schema::valid_error(bad));
  CHECK(bad["error"]["code"] == "PARSE");
  CHECK(s.handle(json::array())["error"]["code"] == "PARSE");
  CHECK(s.handle({{"op", "doc.get"}, {"args", 3}})["error"]["code"] == "PARSE");
}

TEST_CASE("every documented op yields a schema-valid response") {
  Session s;
  const auto path = temp_path("ops.txt");
  std::filesystem::remove(path);
  const std::vector<std::pair<std::string, json>> calls{
      {"doc.get", json::object()},
      {"doc.new", json::object()},
      {"doc.insert", {{"text", "سنڌي 2011\nلا"}}},
      {"doc.deleteBackward", json::object()},
      {"doc.deleteForward", json::object()},
      {"doc.moveCursor", {{"dir", "left"}, {"mode", "visual"}}},
      {"doc.moveCursor", {{"dir", "home"}}},
      {"doc.setCursor", {{"position", {{"line", 0}, {"column", 2}}}}},
      {"doc.undo", json::object()},
      {"doc.redo", json::object()},
      {"doc.find", {{"needle", "ڌي"}, {"from", {{"line", 0}, {"column", 0}}}}},
      {"doc.save", {{"path", path.string()}}},
      {"doc.open", {{"path", path.string()}}},
      {"shape.text", {{"text", "سنڌي"}}},
      {"layout.list", json::object()},
      {"layout.get", {{"name", "standard"}}},
      {"layout.keypress", {{"name", "standard"}, {"key", "s"}, {"shift", false}}},
      {"dict.list", json::object()},
      {"dict.lookup", {{"name", "sindhi-english"}, {"word", "سنڌ"}}},
      {"dict.prefix", {{"name", "computer"}, {"prefix", "ف"}, {"limit", 3}}},
  };
  std::set<std::string> covered;
  for (const auto& [op, args] : calls) {
    CAPTURE(op);
    const json r = call(s, op, args);
    CHECK(r["ok"] == true);
    covered.insert(op);
  }
  for (const auto& op : Session::operations()) CHECK(covered.count(op) == 1);
  std::filesystem::remove(path);
}

TEST_CASE("find reports the normalized match") {
  Session s;
  call(s, "doc.insert", {{"text", "سنڌي"}});
  const json r = call(s, "doc.find", {{"needle", "ڌی"}})["value"];
  CHECK(r["position"] == json{{"line", 0}, {"column", 2}});
  CHECK(r["length"] == 2);
  CHECK(call(s, "doc.find", {{"needle", "ب"}})["value"]["position"].is_null());
}

TEST_CASE("save and open") {
  Session s;
  const auto path = temp_path("save.txt");
  call(s, "doc.insert", {{"text", "سنڌي"}});
  const json saved = call(s, "doc.save", {{"path", path.string()}})["value"];
  CHECK(saved["dirty"] == false);
  CHECK(saved["path"] == path.string());
  {
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(bytes == "\xD8\xB3\xD9\x86\xDA\x8C\xD9\x8A");
  }
  call(s, "doc.insert", {{"text", "x"}});
  CHECK(call(s, "doc.save")["value"]["dirty"] == false);  // reuses the bound path

  call(s, "doc.new");
  const json opened = call(s, "doc.open", {{"path", path.string()}})["value"];
  CHECK(opened["lines"][0] == "سنڌيx");
  CHECK(opened["cursor"] == json{{"line", 0}, {"column", 0}});

  {
    std::ofstream out(path, std::ios::binary);
    out << "ab\xFF";
  }
  const json bad = call(s, "doc.open", {{"path", path.string()}});
  CHECK(bad["error"]["code"] == "ENCODING");
  CHECK(bad["error"]["detail"] == "byte offset 2");
  std::filesystem::remove(path);
}

TEST_CASE("keypress drives the document") {
  Session s;
  for (auto [key, shift] : {std::pair{"s", false}, {"n", false}, {"d", true}, {"y", false}}) {
    call(s, "layout.keypress", {{"name", "standard"}, {"key", key}, {"shift", shift}});
  }
  json view = call(s, "doc.get")["value"];
  CHECK(view["lines"][0] == "سنڌي");
  view = call(s, "layout.keypress", {{"name", "standard"}, {"key", "Backspace"}})["value"];
  CHECK(view["lines"][0] == "سنڌ");
  view = call(s, "layout.keypress", {{"name", "sequential"}, {"key", "k1"}})["value"];
  CHECK(unicode::decode_utf8(view["lines"][0].get<std::string>()).back() == 0x0622);
  view = call(s, "layout.keypress", {{"name", "standard"}, {"key", "Enter"}})["value"];
  CHECK(view["lines"].size() == 2);
  // visual Left in an RTL line moves logically forward; here we are at a line start
  call(s, "doc.setCursor", {{"position", {{"line", 0}, {"column", 0}}}});
  view = call(s, "layout.keypress", {{"name", "standard"}, {"key", "Left"}})["value"];
  CHECK(view["cursor"]["column"] == 1);
  view = call(s, "layout.keypress", {{"name", "standard"}, {"key", "unmapped"}})["value"];
  CHECK(view["cursor"]["column"] == 1);
}

TEST_CASE("extra layouts from a directory") {
  const auto dir = temp_path("layouts");
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "mini.layout") << "q\tU+0642\n";
  }
  Session s{LayoutRegistry(dir)};
  CHECK(call(s, "layout.get", {{"name", "mini"}})["value"]["rows"][0][0]["insert"] == "U+0642");
  std::filesystem::remove_all(dir);
}

TEST_CASE("DocView.shaped always matches a fresh recomputation") {
  std::mt19937 rng(77);
  const std::vector<std::string> texts{"س", "لا", "ن", "ڌ", "ي", " ", "a", "1", "\n", "َ"};
  const std::vector<std::string> keys{"s", "n", "a", "l", "Backspace", "Left", "Right", "Enter"};
  std::uniform_int_distribution<int> op(0, 6);
  for (int seq = 0; seq < 100; ++seq) {
    Session s;
    for (int step = 0; step < 20; ++step) {
      json r;
      switch (op(rng)) {
        case 0:
          r = call(s, "doc.insert", {{"text", texts[rng() % texts.size()]}});
          break;
        case 1: r = call(s, "doc.deleteBackward"); break;
        case 2: r = call(s, "doc.undo"); break;
        case 3: r = call(s, "doc.redo"); break;
        case 4:
          r = call(s, "doc.moveCursor", {{"dir", rng() % 2 ? "left" : "right"}});
          break;
        default:
          r = call(s, "layout.keypress",
                   {{"name", "standard"}, {"key", keys[rng() % keys.size()]}, {"shift", false}});
      }
      REQUIRE(r["ok"] == true);
      const json& view = r["value"];
      for (std::size_t i = 0; i < view["lines"].size(); ++i) {
        const auto line = unicode::decode_utf8(view["lines"][i].get<std::string>());
        CHECK(view["shaped"][i] == shaped_line_json(line));
      }
    }
  }
}

TEST_CASE("concurrent mutations serialize") {
  Session s;
  constexpr int kThreads = 8;
  constexpr int kPerThread = 50;
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&s] {
      for (int i = 0; i < kPerThread; ++i) {
        s.handle({{"op", "doc.insert"}, {"args", {{"text", "سن"}}}});
        s.handle({{"op", "shape.text"}, {"args", {{"text", "سنڌي"}}}});
      }
    });
  }
  for (auto& th : threads) th.join();
  const json view = s.handle({{"op", "doc.get"}})["value"];
  const auto text = unicode::decode_utf8(view["lines"][0].get<std::string>());
  REQUIRE(text.size() == 2 * kThreads * kPerThread);
  // Each insert landed whole: the text is "سن" repeated.
  for (std::size_t i = 0; i < text.size(); i += 2) {
    CHECK(text[i] == 0x0633);
    CHECK(text[i + 1] == 0x0646);
  }
}

TEST_CASE("HTTP endpoint") {
  Session s;
  HttpServer server(s);
  const int port = server.bind(0);
  REQUIRE(port > 0);
  std::thread runner([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result res;
  for (int attempt = 0; attempt < 50 && !res; ++attempt) {
    res = client.Post("/api", R"({"op":"doc.insert","args":{"text":"سنڌي"}})", "application/json");
    if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(res);
  CHECK(res->status == 200);
  const json r = json::parse(res->body);
  CHECK(schema::valid_response("doc.insert", r));
  CHECK(r["value"]["cursor"]["column"] == 4);

  auto bad = client.Post("/api", "nope", "application/json");
  REQUIRE(bad);
  CHECK(json::parse(bad->body)["error"]["code"] == "PARSE");

  auto ops = client.Get("/api/ops");
  REQUIRE(ops);
  CHECK(json::parse(ops->body).size() == Session::operations().size());

  server.stop();
  runner.join();
}
