// Regenerates the seeded CSV fixtures under tests/data.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <span>
#include <string>

#include "mband/random.hpp"
#include "mband/report.hpp"
#include "mband/simulate.hpp"

namespace {

constexpr std::uint64_t kWalkSeed = 7;
constexpr std::uint64_t kSkewSeed = 11;

void write_series(const std::filesystem::path& path, std::span<const double> values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "month,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << "m" << (i + 1) << ',' << mband::format_real(values[i]) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "tests/data";
    std::filesystem::create_directories(dir);

    const auto walk = mband::generate_walk(100.0, 1.0, 60, kWalkSeed);
    write_series(dir / "gaussian_walk.csv", walk.values());

    // Exponential(1) increments: strongly right-skewed errors.
    mband::RandomStream rng(kSkewSeed, 0);
    std::vector<double> skewed{50.0};
    for (int k = 1; k < 60; ++k) skewed.push_back(skewed.back() - std::log(rng.next_uniform()));
    write_series(dir / "skewed_walk.csv", skewed);

    std::cout << "wrote fixtures to " << dir << '\n';
}
