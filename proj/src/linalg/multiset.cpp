#include "ptp/linalg/multiset.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace ptp::linalg {

namespace {

// Kuhn's augmenting-path matching on the graph {(i, j) : |a_i − b_j| ≤ d}.
class ThresholdMatcher {
public:
    ThresholdMatcher(std::span<const Complex> a, std::span<const Complex> b) : a_(a), b_(b) {}

    bool perfect(double d) {
        d_ = d;
        match_.assign(b_.size(), npos);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            seen_.assign(b_.size(), false);
            if (!augment(i)) return false;
        }
        return true;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t i) {
        for (std::size_t j = 0; j < b_.size(); ++j) {
            if (seen_[j] || std::abs(a_[i] - b_[j]) > d_) continue;
            seen_[j] = true;
            if (match_[j] == npos || augment(match_[j])) {
                match_[j] = i;
                return true;
            }
        }
        return false;
    }

    std::span<const Complex> a_, b_;
    double d_ = 0.0;
    std::vector<std::size_t> match_;
    std::vector<bool> seen_;
};

}  // namespace

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    std::vector<double> candidates;
    candidates.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) candidates.push_back(std::abs(x - y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ThresholdMatcher matcher(a, b);
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (matcher.perfect(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

bool multisets_close(std::span<const Complex> a, std::span<const Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    return ThresholdMatcher(a, b).perfect(tol);
}

}  // namespace ptp::linalg
