#include "corefkg/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace corefkg {

namespace {

std::mutex g_mutex;
WarnSink g_sink = [](const std::string& msg) { std::cerr << "[warn] " << msg << "\n"; };

}  // namespace

WarnSink set_warn_sink(WarnSink sink) {
    std::lock_guard lock(g_mutex);
    WarnSink previous = std::move(g_sink);
    g_sink = std::move(sink);
    return previous;
}

void warn(const std::string& message) {
    WarnSink sink;
    {
        std::lock_guard lock(g_mutex);
        sink = g_sink;
    }
    if (sink) sink(message);
}

WarnCapture::WarnCapture() {
    previous_ = set_warn_sink([this](const std::string& msg) { messages_.push_back(msg); });
}

WarnCapture::~WarnCapture() {
    set_warn_sink(previous_);
}

}  // namespace corefkg
