#pragma once

// JSON-over-HTTP facade for the panel workbench. Projects live as
// `<root>/<id>.mcdm.json`; writes to one project are serialized by its lock and
// guarded by the project's revision token.

#include <filesystem>
#include <memory>
#include <string>

#include "mcdm/error.hpp"

namespace mcdm {

struct ServiceOptions {
  std::filesystem::path root = ".";
  std::string host = "127.0.0.1";
  int port = 0;  // 0 picks a free port
  // Static UI bundle served at "/"; a built-in index page when empty or absent.
  std::filesystem::path ui_dir;
};

class ApiService {
 public:
  explicit ApiService(ServiceOptions options);
  ~ApiService();
  ApiService(const ApiService&) = delete;
  ApiService& operator=(const ApiService&) = delete;

  // Binds the listening socket and returns the port. Throws Io on failure.
  int bind();
  // Serves until stop(); bind() must have succeeded.
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

int http_status(const Error& e);

}  // namespace mcdm
