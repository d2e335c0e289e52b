#ifndef BBF_TESTS_PROCESS_HPP
#define BBF_TESTS_PROCESS_HPP

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testing
{

struct CommandResult {
    int exit_code = -1;
    std::string out; // stdout only
};

inline CommandResult run_command(const std::string &command)
{
    FILE *pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed: " + command);
    }
    CommandResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Drops the wall-clock lines, the only nondeterministic part of a report.
inline std::string strip_wall_time(const std::string &report)
{
    std::istringstream in(report);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        if (line.find("wall_time") == std::string::npos) {
            out += line;
            out += '\n';
        }
    }
    return out;
}

} // namespace testing

#endif
