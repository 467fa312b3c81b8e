#pragma once

#include <functional>
#include <string>
#include <vector>

namespace corefkg {

using WarnSink = std::function<void(const std::string&)>;

// Replaces the global warning sink (default writes to stderr). Returns the previous sink.
WarnSink set_warn_sink(WarnSink sink);

void warn(const std::string& message);

// RAII capture of warnings, used by tests and by the CLI provenance log.
class WarnCapture {
public:
    WarnCapture();
    ~WarnCapture();
    const std::vector<std::string>& messages() const { return messages_; }

private:
    std::vector<std::string> messages_;
    WarnSink previous_;
};

}  // namespace corefkg
