#include "asyncburst/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace asyncburst {

namespace {
constexpr double kSumTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

Channel::Channel(Rows rows, std::size_t star) : rows_(std::move(rows)), star_(star) {
    if (rows_.empty() || rows_.front().empty())
        fail(errc::invalid_params, "channel needs a nonempty transition matrix");
    if (rows_.size() > 256) fail(errc::invalid_params, "input alphabet larger than 256");
    const std::size_t ny = rows_.front().size();
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        const auto& r = rows_[x];
        if (r.size() != ny) fail(errc::row_not_stochastic, "ragged transition matrix");
        double sum = 0.0;
        for (double v : r) {
            if (v < 0.0 || !std::isfinite(v))
                fail(errc::row_not_stochastic, "negative or non-finite entry in row " + std::to_string(x));
            sum += v;
        }
        if (std::abs(sum - 1.0) > kSumTol)
            fail(errc::row_not_stochastic,
                 "row " + std::to_string(x) + " sums to " + std::to_string(sum));
    }
    if (star_ >= rows_.size()) fail(errc::bad_star_index, "star index out of range");
    for (double v : rows_[star_])
        if (v <= 0.0) fail(errc::star_not_positive, "idle row must be strictly positive");
}

InputDistribution::InputDistribution(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) fail(errc::invalid_params, "empty input distribution");
    double sum = 0.0;
    for (double v : w_) {
        if (v < 0.0 || !std::isfinite(v)) fail(errc::invalid_params, "negative weight");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        fail(errc::invalid_params, "weights sum to " + std::to_string(sum));
}

InputDistribution InputDistribution::uniform(std::size_t k) {
    return InputDistribution(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

InputDistribution InputDistribution::point_mass(std::size_t k, std::size_t x) {
    std::vector<double> w(k, 0.0);
    w.at(x) = 1.0;
    return InputDistribution(std::move(w));
}

Composition::Composition(std::vector<int> counts, int n) : counts_(std::move(counts)), n_(n) {
    if (counts_.empty() || n_ <= 0) fail(errc::invalid_params, "empty composition");
    long long sum = 0;
    for (int c : counts_) {
        if (c < 0) fail(errc::invalid_params, "negative count");
        sum += c;
    }
    if (sum != n_) fail(errc::invalid_params, "composition counts must sum to n");
}

InputDistribution Composition::induced() const {
    std::vector<double> w(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        w[i] = static_cast<double>(counts_[i]) / static_cast<double>(n_);
    return InputDistribution(std::move(w));
}

Composition Composition::quantize(const InputDistribution& p, int n) {
    if (n <= 0) fail(errc::invalid_params, "blocklength must be positive");
    const std::size_t k = p.size();
    std::vector<int> counts(k);
    std::vector<std::pair<double, std::size_t>> rem(k);
    int assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double target = p[i] * n;
        counts[i] = static_cast<int>(std::floor(target));
        assigned += counts[i];
        rem[i] = {target - std::floor(target), i};
    }
    // distribute leftovers by largest remainder, ties to the lower symbol
    std::stable_sort(rem.begin(), rem.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int j = 0; j < n - assigned; ++j) counts[rem[static_cast<std::size_t>(j)].second] += 1;
    return Composition(std::move(counts), n);
}

double kl(const std::vector<double>& p1, const std::vector<double>& p2) {
    if (p1.size() != p2.size()) fail(errc::dimension_mismatch, "kl length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (p1[i] == 0.0) continue;
        if (p2[i] == 0.0) return kInf;
        sum += p1[i] * std::log(p1[i] / p2[i]);
    }
    return sum;
}

double cond_kl(const Rows& q1, const Rows& q2, const InputDistribution& p) {
    if (q1.size() != q2.size() || q1.size() != p.size())
        fail(errc::dimension_mismatch, "cond_kl shape mismatch");
    double sum = 0.0;
    for (std::size_t x = 0; x < q1.size(); ++x) {
        if (p[x] == 0.0) continue;
        const double row = kl(q1[x], q2[x]);
        if (row == kInf) return kInf;
        sum += p[x] * row;
    }
    return sum;
}

std::vector<double> output_marginal(const InputDistribution& p, const Rows& rows) {
    if (p.size() != rows.size()) fail(errc::dimension_mismatch, "marginal shape mismatch");
    std::vector<double> out(rows.front().size(), 0.0);
    for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = 0; y < out.size(); ++y) out[y] += p[x] * rows[x][y];
    return out;
}

std::vector<double> output_marginal(const InputDistribution& p, const Channel& q) {
    return output_marginal(p, q.rows());
}

double mutual_info(const InputDistribution& p, const Rows& rows) {
    const std::vector<double> marginal = output_marginal(p, rows);
    double sum = 0.0;
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (p[x] == 0.0) continue;
        for (std::size_t y = 0; y < marginal.size(); ++y) {
            const double v = rows[x][y];
            if (v == 0.0) continue;
            sum += p[x] * v * std::log(v / marginal[y]);
        }
    }
    return std::max(sum, 0.0);
}

double mutual_info(const InputDistribution& p, const Channel& q) {
    return mutual_info(p, q.rows());
}

std::vector<double> tilt_row(const std::vector<double>& row, const std::vector<double>& star_row,
                             double lambda) {
    std::vector<double> out(row.size());
    double z = 0.0;
    for (std::size_t y = 0; y < row.size(); ++y) {
        out[y] = std::pow(row[y], lambda) * std::pow(star_row[y], 1.0 - lambda);
        z += out[y];
    }
    for (double& v : out) v /= z;
    return out;
}

Rows tilt(const Channel& q, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        fail(errc::lambda_out_of_range, "lambda must lie in [0,1]");
    Rows out(q.num_inputs());
    for (std::size_t x = 0; x < q.num_inputs(); ++x)
        out[x] = tilt_row(q.row(x), q.star_row(), lambda);
    return out;
}

Rows constant_star_rows(const Channel& q) {
    return Rows(q.num_inputs(), q.star_row());
}

CapacityResult capacity(const Channel& q, double tol, int max_iter) {
    const std::size_t nx = q.num_inputs();
    std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
    std::vector<double> d(nx, 0.0);
    int it = 0;
    for (; it < max_iter; ++it) {
        const std::vector<double> marginal = output_marginal(InputDistribution(p), q);
        double lo = 0.0, hi = -kInf;
        for (std::size_t x = 0; x < nx; ++x) {
            d[x] = kl(q.row(x), marginal);
            lo += p[x] * d[x];
            hi = std::max(hi, d[x]);
        }
        if (hi - lo <= tol) return {lo, p, it};
        double z = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            p[x] *= std::exp(d[x] - hi); // shift by hi to avoid overflow
            z += p[x];
        }
        for (double& v : p) v /= z;
    }
    const std::vector<double> marginal = output_marginal(InputDistribution(p), q);
    double lo = 0.0;
    for (std::size_t x = 0; x < nx; ++x) lo += p[x] * kl(q.row(x), marginal);
    return {lo, p, it};
}

} // namespace asyncburst
