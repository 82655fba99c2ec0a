#include <stopset/errors.hh>

using namespace stopset;

ParseError::ParseError(const std::string & message, std::size_t line) :
    InputError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    _line(line)
{
}
