#include <stopset/errors.hh>
#include <stopset/var_set.hh>

#include <algorithm>
#include <bit>
#include <charconv>

using namespace stopset;

using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr size_t word_bits = 64;

    auto word_count(size_t universe) -> size_t
    {
        return (universe + word_bits - 1) / word_bits;
    }
}

VarSet::VarSet(size_t universe_size) :
    _universe(universe_size),
    _words(word_count(universe_size), 0)
{
}

VarSet::VarSet(size_t universe_size, std::initializer_list<size_t> members) :
    VarSet(universe_size)
{
    for (auto i : members)
        insert(i);
}

auto VarSet::from_indices(size_t universe_size, const vector<size_t> & members) -> VarSet
{
    VarSet result(universe_size);
    for (auto i : members)
        result.insert(i);
    return result;
}

auto VarSet::full(size_t universe_size) -> VarSet
{
    return VarSet(universe_size).complement();
}

auto VarSet::parse(string_view text, size_t universe_size) -> VarSet
{
    VarSet result(universe_size);
    size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == string_view::npos ? string_view::npos : comma - pos);
        while (! token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (! token.empty() && (token.back() == ' ' || token.back() == '\n' || token.back() == '\r'))
            token.remove_suffix(1);

        size_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{ } || end != token.data() + token.size())
            throw ParseError("bad index '" + string(token) + "' in set '" + string(text) + "'");
        if (value >= universe_size)
            throw InputError("index " + std::to_string(value) + " out of range for universe of size " + std::to_string(universe_size));
        result.insert(value);

        if (comma == string_view::npos)
            break;
        pos = comma + 1;
    }
    return result;
}

auto VarSet::size() const -> size_t
{
    size_t result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VarSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [] (uint64_t w) { return w == 0; });
}

auto VarSet::check_index(size_t i) const -> void
{
    if (i >= _universe)
        throw InputError("index " + std::to_string(i) + " out of range for universe of size " + std::to_string(_universe));
}

auto VarSet::check_universe(const VarSet & other) const -> void
{
    if (other._universe != _universe)
        throw InputError("set universe mismatch: " + std::to_string(_universe) + " vs " + std::to_string(other._universe));
}

auto VarSet::contains(size_t i) const -> bool
{
    return i < _universe && ((_words[i / word_bits] >> (i % word_bits)) & 1) != 0;
}

auto VarSet::insert(size_t i) -> void
{
    check_index(i);
    _words[i / word_bits] |= uint64_t{ 1 } << (i % word_bits);
}

auto VarSet::erase(size_t i) -> void
{
    check_index(i);
    _words[i / word_bits] &= ~(uint64_t{ 1 } << (i % word_bits));
}

auto VarSet::unite(const VarSet & other) const -> VarSet
{
    check_universe(other);
    VarSet result = *this;
    for (size_t w = 0 ; w < _words.size() ; ++w)
        result._words[w] |= other._words[w];
    return result;
}

auto VarSet::intersect(const VarSet & other) const -> VarSet
{
    check_universe(other);
    VarSet result = *this;
    for (size_t w = 0 ; w < _words.size() ; ++w)
        result._words[w] &= other._words[w];
    return result;
}

auto VarSet::complement() const -> VarSet
{
    VarSet result = *this;
    for (auto & w : result._words)
        w = ~w;
    if (auto tail = _universe % word_bits ; tail != 0)
        result._words.back() &= (uint64_t{ 1 } << tail) - 1;
    return result;
}

auto VarSet::is_subset_of(const VarSet & other) const -> bool
{
    check_universe(other);
    for (size_t w = 0 ; w < _words.size() ; ++w)
        if ((_words[w] & ~other._words[w]) != 0)
            return false;
    return true;
}

auto VarSet::members() const -> vector<size_t>
{
    vector<size_t> result;
    for (size_t w = 0 ; w < _words.size() ; ++w) {
        auto bits = _words[w];
        while (bits != 0) {
            result.push_back(w * word_bits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return result;
}

auto VarSet::to_string() const -> string
{
    string result;
    for (auto i : members()) {
        if (! result.empty())
            result += ',';
        result += std::to_string(i);
    }
    return result;
}

auto VarSet::size_lex_less(const VarSet & a, const VarSet & b) -> bool
{
    auto sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}
