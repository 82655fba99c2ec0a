#ifndef STOPSET_ERRORS_HH
#define STOPSET_ERRORS_HH

#include <stdexcept>
#include <string>

namespace stopset
{
    /// Bad input or a violated precondition. The CLI maps this to exit code 2.
    class InputError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed text input; `line()` is 1-based, 0 when not tied to a line.
    class ParseError : public InputError
    {
    public:
        ParseError(const std::string & message, std::size_t line = 0);

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /// An internal postcondition failed. Never expected; indicates a bug.
    class InvariantViolation : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}

#endif
