#ifndef ASYNCBURST_CHANNEL_HPP
#define ASYNCBURST_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "asyncburst/errors.hpp"

namespace asyncburst {

using Symbol = std::uint8_t;
using Prob = double;
using Rows = std::vector<std::vector<double>>;

// Finite-alphabet DMC with a designated idle symbol whose output law is
// strictly positive.
class Channel {
public:
    Channel(Rows rows, std::size_t star);

    std::size_t num_inputs() const { return rows_.size(); }
    std::size_t num_outputs() const { return rows_.front().size(); }
    std::size_t star() const { return star_; }

    const std::vector<double>& row(std::size_t x) const { return rows_[x]; }
    const std::vector<double>& star_row() const { return rows_[star_]; }
    const Rows& rows() const { return rows_; }

    double prob(std::size_t x, std::size_t y) const { return rows_[x][y]; }

private:
    Rows rows_;
    std::size_t star_;
};

inline Channel validate_channel(Rows rows, std::size_t star) {
    return Channel(std::move(rows), star);
}

// Probability vector on the input alphabet.
class InputDistribution {
public:
    explicit InputDistribution(std::vector<double> weights);

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t x) const { return w_[x]; }
    const std::vector<double>& weights() const { return w_; }

    static InputDistribution uniform(std::size_t k);
    static InputDistribution point_mass(std::size_t k, std::size_t x);

private:
    std::vector<double> w_;
};

// Exact n-type: per-symbol counts summing to the blocklength.
class Composition {
public:
    Composition(std::vector<int> counts, int n);

    int blocklength() const { return n_; }
    const std::vector<int>& counts() const { return counts_; }
    InputDistribution induced() const;

    // largest-remainder quantization of P to an n-type, ties to lower index
    static Composition quantize(const InputDistribution& p, int n);

private:
    std::vector<int> counts_;
    int n_;
};

double kl(const std::vector<double>& p1, const std::vector<double>& p2);
double cond_kl(const Rows& q1, const Rows& q2, const InputDistribution& p);

std::vector<double> output_marginal(const InputDistribution& p, const Channel& q);
std::vector<double> output_marginal(const InputDistribution& p, const Rows& rows);

double mutual_info(const InputDistribution& p, const Channel& q);
double mutual_info(const InputDistribution& p, const Rows& rows);

// Q_lambda(.|x): geometric interpolation Q(.|x)^lambda Qstar(.)^(1-lambda), normalized per row.
Rows tilt(const Channel& q, double lambda);
std::vector<double> tilt_row(const std::vector<double>& row, const std::vector<double>& star_row,
                             double lambda);

// rows of a channel that emits the idle law regardless of input
Rows constant_star_rows(const Channel& q);

struct CapacityResult {
    double capacity;        // nats
    std::vector<double> p;  // maximizing input distribution
    int iterations;
};

// Blahut-Arimoto fixed point, stops when the capacity bracket is below tol.
CapacityResult capacity(const Channel& q, double tol = 1e-12, int max_iter = 20000);

} // namespace asyncburst

#endif
