// SPDX-License-Identifier: Apache-2.0
#include "simkit/server.hpp"

#include <httplib.h>

#include <stdexcept>
#include <thread>

namespace ami::sim {

struct LocalServer::Impl {
    httplib::Server server;
    std::thread thread;
    int port = 0;
    Handler handler;
};

LocalServer::LocalServer(Handler handler) : impl_(std::make_unique<Impl>()) {
    impl_->handler = std::move(handler);

    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
        SimRequest sim_req{req.method, req.path, req.body};
        SimResponse sim_res = impl_->handler(sim_req);
        if (sim_res.drop_connection) {
            // advertise a body, then abort mid-stream: the client sees a read error
            res.status = 200;
            res.set_content_provider(
                1024, "application/octet-stream",
                [](size_t, size_t, httplib::DataSink&) { return false; });
            return;
        }
        res.status = sim_res.status;
        res.set_content(sim_res.body, sim_res.content_type);
    };
    impl_->server.Get(".*", dispatch);
    impl_->server.Post(".*", dispatch);

    impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
    if (impl_->port <= 0) throw std::runtime_error("mock server: failed to bind");
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

LocalServer::~LocalServer() { stop(); }

int LocalServer::port() const { return impl_->port; }

std::string LocalServer::base_url() const {
    return "http://127.0.0.1:" + std::to_string(impl_->port);
}

void LocalServer::stop() {
    if (impl_ && impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

}  // namespace ami::sim
