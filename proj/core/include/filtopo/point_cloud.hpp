#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "filtopo/errors.hpp"

namespace filtopo {

/// Distance mode used by every metric-dependent operation. The VNE modes
/// rescale each coordinate column of the data set before taking Euclidean
/// distances: vne_variance divides by the population variance, vne_stddev by
/// its square root.
enum class MetricMode { euclidean, vne_variance, vne_stddev };

/// n points of identical dimension, stored row-major. Labels are optional
/// provenance strings; when present there is exactly one per point.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::size_t dim) : dim_(dim) {}

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return size() == 0; }

    std::span<const double> point(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<double> point(std::size_t i) { return {data_.data() + i * dim_, dim_}; }

    void push_back(std::span<const double> coords, std::string label = {});

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& data() const { return data_; }

    void reserve(std::size_t n) { data_.reserve(n * dim_); }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
    std::vector<std::string> labels_;  // empty, or one entry per point
};

/// Raw convolutional-layer weights: `maps` output maps over `channels` input
/// channels, each a height x width slice. Values are stored map-major, then
/// channel, then row, then column (the WTS1 on-disk order).
struct WeightTensor {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint32_t channels = 0;
    std::uint32_t maps = 0;
    std::vector<float> values;

    std::size_t value_count() const {
        return std::size_t{width} * height * channels * maps;
    }
    float at(std::size_t map, std::size_t chan, std::size_t row, std::size_t col) const {
        return values[((map * channels + chan) * height + row) * width + col];
    }
    /// Throws ShapeError if any dimension is zero or the value count is off.
    void validate() const;
};

enum class ConstantPointPolicy { fail, drop };

struct NormalizeResult {
    PointCloud cloud;
    std::size_t dropped = 0;
};

/// Mean-center and unit-normalize every point. Constant points either abort
/// (fail, the default for direct calls) or are dropped and counted (the
/// pipeline policy; dead all-zero filters occur in real weight dumps).
NormalizeResult center_normalize(const PointCloud& cloud,
                                 ConstantPointPolicy policy = ConstantPointPolicy::fail);

/// Symmetric nonnegative distance matrix with zero diagonal, packed lower
/// triangle.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * (n - 1) / 2, 0.0) {}

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i < j) std::swap(i, j);
        return values_[i * (i - 1) / 2 + j];
    }
    /// Mutable access, requires i > j.
    double& at(std::size_t i, std::size_t j) { return values_[i * (i - 1) / 2 + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

/// Per-column multipliers realizing a metric mode: all ones for euclidean,
/// 1/variance or 1/stddev otherwise (population variance, divide by n).
/// Throws ZeroVarianceColumnError for degenerate columns in VNE modes.
std::vector<double> metric_column_scales(const PointCloud& cloud, MetricMode mode);

/// Copy of the cloud with metric_column_scales applied, so that plain
/// Euclidean distances on the result realize the requested mode.
PointCloud apply_metric_scaling(const PointCloud& cloud, MetricMode mode);

DistanceMatrix pairwise_distances(const PointCloud& cloud, MetricMode mode);

/// Euclidean distance between two equal-length coordinate spans.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Slice a weight tensor into its maps*channels spatial filters, each a
/// height x width point flattened row-major (rows outer, columns inner).
/// Labels record provenance as "map<i>/chan<j>". No normalization is applied;
/// pipelines call center_normalize explicitly.
PointCloud extract_spatial_filters(const WeightTensor& tensor);

}  // namespace filtopo
