#pragma once

#include <memory>
#include <string>
#include <thread>

namespace httplib {
class Server;
}

namespace penta {

// Local JSON-over-HTTP front end.  Every endpoint is stateless; rationals
// are accepted on input and converted to floats at this boundary.
class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Blocks until stop().  Returns false if the socket could not be bound.
  bool listen(const std::string& host, int port);

  // Binds (port 0 = any free port) and serves on a background thread.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread worker_;
};

// --port value with PENTA_PORT taking precedence when set.
int service_port(int requested);

}  // namespace penta
