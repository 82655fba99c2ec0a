#ifndef STOPSET_TESTS_CLI_RUNNER_HH
#define STOPSET_TESTS_CLI_RUNNER_HH

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace stopset::testing
{
    struct CliResult
    {
        int exit_code = -1;
        std::string out;
    };

    /// Runs the CLI binary with `args`; stderr is discarded.
    inline auto run_cli(const std::string & args) -> CliResult
    {
        auto command = std::string(STOPSET_CLI) + " " + args + " 2>/dev/null";
        CliResult result;
        auto pipe = ::popen(command.c_str(), "r");
        if (! pipe)
            return result;
        std::array<char, 4096> buffer;
        std::size_t got;
        while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            result.out.append(buffer.data(), got);
        auto status = ::pclose(pipe);
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return result;
    }

    inline auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), { });
    }
}

#endif
