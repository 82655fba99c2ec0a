#include <stopset/random.hh>

using namespace stopset;

auto stopset::make_rng(std::uint64_t seed, std::uint64_t stream) -> Rng
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32) };
    return Rng(seq);
}

auto stopset::uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
{
    auto limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

auto stopset::uniform_unit(Rng & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

auto stopset::bernoulli(Rng & rng, double p) -> bool
{
    return uniform_unit(rng) < p;
}
