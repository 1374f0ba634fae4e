#pragma once

#include <cstddef>
#include <vector>

#include "evifuse/errors.hpp"

namespace evifuse {

// Unit-norm feature vector from the external metric-learning net.
struct Embedding {
    std::vector<double> v;

    // Normalizes to unit length; rejects empty or zero vectors.
    static Embedding normalized(std::vector<double> raw);
};

struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> d;  // n*n, symmetric, zero diagonal

    double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

// Euclidean distances between the (unit-norm) vectors.
DistanceMatrix pairwise_distances(const std::vector<Embedding>& embeddings);

// density[i] = |{ j != i : D[i,j] < lambda_d }|, strict inequality.
std::vector<int> densities(const DistanceMatrix& dist, double lambda_d);

struct ClusterResult {
    std::vector<int> densities;
    std::size_t seed = 0;
    std::vector<std::size_t> members;   // includes the seed
    std::vector<std::size_t> outliers;  // complement of members
};

// Single-cluster growth: rank by density descending (ties by ascending
// index), seed the top instance, then admit i in rank order iff
// density[i] > n/4 and min distance to the current members < lambda_d.
// Single pass; the seed is exempt from the density floor.
ClusterResult density_cluster(const DistanceMatrix& dist, double lambda_d);

}  // namespace evifuse
