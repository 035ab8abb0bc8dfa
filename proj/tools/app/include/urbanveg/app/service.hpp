#pragma once

#include <memory>
#include <string>

#include "urbanveg/io/json_common.hpp"

namespace urbanveg::app {

struct Response {
  int status = 200;
  io::json body;
};

// Request handlers. Each is a pure function of the request body.
Response handle_place(const std::string& body);
Response handle_grow(const std::string& body);
Response handle_strategies();
Response handle_polygonize(const std::string& body);

/// Routes a request to its handler; 404 for unknown paths, 405 for a known
/// path with the wrong method.
Response dispatch(const std::string& method, const std::string& path, const std::string& body);

/// HTTP front end over `dispatch`.
class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds to `port` (0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace urbanveg::app
