#ifndef FOFANA_UTIL_HPP
#define FOFANA_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fofana {

// Fixed-shape pairwise (tree) reduction: the summation order depends only on
// the element count, so results are bit-stable and the rounding error grows
// like log2(n) instead of n.
inline double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
    return pairwise_sum(std::span<const double>(xs));
}

// Accumulator that keeps a scratch buffer and reduces it pairwise on demand.
class PairwiseAccumulator {
public:
    void add(double x) { terms_.push_back(x); }
    double total() const { return pairwise_sum(terms_); }
    void reset() { terms_.clear(); }

private:
    std::vector<double> terms_;
};

// True when x = 2^k for some integer k (including negative k).
inline bool is_dyadic(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) return false;
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    return mant == 0.5;
}

inline int dyadic_log2(double x) {
    if (!is_dyadic(x)) throw std::invalid_argument("expected a power of two, got " + std::to_string(x));
    int exp = 0;
    std::frexp(x, &exp);
    return exp - 1;
}

inline bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

inline double relative_l2_error(std::span<const double> got, std::span<const double> want) {
    if (got.size() != want.size()) throw std::invalid_argument("relative_l2_error: size mismatch");
    std::vector<double> num(got.size()), den(got.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        const double d = got[i] - want[i];
        num[i] = d * d;
        den[i] = want[i] * want[i];
    }
    const double nn = std::sqrt(pairwise_sum(num));
    const double dd = std::sqrt(pairwise_sum(den));
    return dd > 0.0 ? nn / dd : nn;
}

}  // namespace fofana

#endif
