#include "qhom/numeric.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace qhom {

namespace {
constexpr std::uint64_t kBinomialCap = std::uint64_t{1} << 62;
}

double pow_int(double base, int exponent) {
    double r = 1.0;
    for (int i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    std::uint64_t c = 1;
    for (int i = 1; i <= r; ++i) {
        // c * (n - r + i) is exact in 128 bits; division is always exact here.
        unsigned __int128 t = static_cast<unsigned __int128>(c) * static_cast<std::uint64_t>(n - r + i);
        t /= static_cast<std::uint64_t>(i);
        if (t >= kBinomialCap)
            return kBinomialCap;
        c = static_cast<std::uint64_t>(t);
    }
    return c;
}

double subset_cost_estimate(long long edge_count, int k, int order) {
    if (order <= 0)
        return 0.0;
    if (order > edge_count)
        return 0.0;
    double log_c = std::lgamma(static_cast<double>(edge_count) + 1.0)
                 - std::lgamma(static_cast<double>(order) + 1.0)
                 - std::lgamma(static_cast<double>(edge_count - order) + 1.0);
    double log_cost = log_c + 2.0 * order * std::log(static_cast<double>(k));
    if (log_cost > 700.0)
        return std::numeric_limits<double>::infinity();
    return std::exp(log_cost);
}

void first_combination(std::vector<int>& combo, int m) {
    combo.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        combo[static_cast<std::size_t>(i)] = i;
}

bool next_combination(std::vector<int>& combo, int n) {
    int m = static_cast<int>(combo.size());
    for (int i = m - 1; i >= 0; --i) {
        if (combo[static_cast<std::size_t>(i)] < n - m + i) {
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

void unrank_combination(std::uint64_t rank, int n, int m, std::vector<int>& combo) {
    combo.clear();
    combo.reserve(static_cast<std::size_t>(m));
    int x = 0;
    for (int i = 0; i < m; ++i) {
        for (;;) {
            std::uint64_t block = binomial(n - x - 1, m - i - 1);
            if (rank < block)
                break;
            rank -= block;
            ++x;
        }
        combo.push_back(x);
        ++x;
    }
}

void run_chunked(std::uint64_t total, std::uint64_t chunk_size, unsigned threads,
                 const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& work) {
    if (total == 0)
        return;
    if (chunk_size == 0)
        throw std::invalid_argument("run_chunked: chunk_size must be positive");
    std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;

    auto run_chunk = [&](std::uint64_t c) {
        std::uint64_t begin = c * chunk_size;
        std::uint64_t end = std::min(total, begin + chunk_size);
        work(static_cast<std::size_t>(c), begin, end);
    };

    if (threads <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            run_chunk(c);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    unsigned worker_count = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, chunks));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
        workers.emplace_back([&]() {
            for (;;) {
                std::uint64_t c = next.fetch_add(1);
                if (c >= chunks)
                    return;
                run_chunk(c);
            }
        });
    }
    for (auto& w : workers)
        w.join();
}

} // namespace qhom
