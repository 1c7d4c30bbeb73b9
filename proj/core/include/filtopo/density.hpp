#pragma once

#include <cstddef>
#include <vector>

#include "filtopo/point_cloud.hpp"

namespace filtopo {

/// Density-filtration configuration: k-th nearest neighbor rank and the
/// retained fraction p in (0, 1].
struct FiltrationParams {
    std::size_t k = 1;
    double p = 1.0;
};

/// Distance from each point to its k-th nearest other point (self excluded,
/// ties broken by ascending point index). Small values mean high density.
/// Throws KTooLargeError when k >= n.
std::vector<double> knn_distance(const PointCloud& cloud, std::size_t k, MetricMode mode);

/// Indices (ascending) of the max(1, floor(p*n)) densest points, i.e. the
/// points with the smallest knn_distance; ties broken by ascending index.
std::vector<std::size_t> density_filtration_indices(const PointCloud& cloud,
                                                    const FiltrationParams& params,
                                                    MetricMode mode);

/// The densest-point subset as a cloud, original relative order and labels
/// preserved.
PointCloud density_filtration(const PointCloud& cloud, const FiltrationParams& params,
                              MetricMode mode);

}  // namespace filtopo
