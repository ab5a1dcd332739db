#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace qhom {

using Complex = std::complex<double>;

// Neumaier-compensated accumulator. Adding the same values in the same order
// always yields the same bits, which the deterministic reductions rely on.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexSum {
public:
    void add(const Complex& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    Complex value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// k^e by repeated multiplication; exact while the result stays below 2^53.
double pow_int(double base, int exponent);

// Exact binomial coefficient, saturating at 2^62 to keep unranking arithmetic safe.
std::uint64_t binomial(int n, int r);

// log-domain estimate of C(n, r) * k^(2r), used by cost guards. Returns +inf on overflow.
double subset_cost_estimate(long long edge_count, int k, int order);

// Lexicographic m-combinations of {0..n-1}.
void first_combination(std::vector<int>& combo, int m);
bool next_combination(std::vector<int>& combo, int n);
// Combination with the given lexicographic rank (combinatorial number system).
void unrank_combination(std::uint64_t rank, int n, int m, std::vector<int>& combo);

// Runs `work(chunk_index, begin, end)` over [0, total) split into fixed-size
// chunks. Chunk boundaries depend only on `chunk_size`, never on `threads`,
// so per-chunk partial results merged in chunk order are bit-identical for
// every thread count.
void run_chunked(std::uint64_t total, std::uint64_t chunk_size, unsigned threads,
                 const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& work);

} // namespace qhom
