#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "filtopo/point_cloud.hpp"

namespace filtopo {

/// One barcode interval. An infinite death marks an essential class.
struct PersistenceInterval {
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    bool finite() const { return death != std::numeric_limits<double>::infinity(); }
    double lifetime() const { return death - birth; }

    friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

/// Persistence barcode in dimensions 0 and 1. Intervals are sorted by
/// (birth, death), finite before infinite at equal birth.
struct Barcode {
    std::vector<PersistenceInterval> dim0;
    std::vector<PersistenceInterval> dim1;

    const std::vector<PersistenceInterval>& dim(int d) const { return d == 0 ? dim0 : dim1; }

    friend bool operator==(const Barcode&, const Barcode&) = default;
};

struct RipsParams {
    int maxdim = 1;                       // 0 or 1
    std::optional<double> maxscale;       // nullopt: use the cloud diameter
    std::size_t edge_cap = 2'000'000;     // guard before building the complex
    bool keep_zero_length = false;        // retain zero-length intervals (oracle tests)
};

/// Vietoris-Rips persistence over Z/2. Dimension 0 uses union-find over the
/// ascending edge filtration; dimension 1 reduces triangle boundary columns
/// over the edge basis. Deterministic: ties are ordered by value, then
/// dimension, then lexicographic vertices.
/// Throws ComplexTooLargeError when the edge count under maxscale exceeds the
/// cap, EmptyCloudError for an empty cloud.
Barcode rips_barcodes(const PointCloud& cloud, MetricMode mode, const RipsParams& params = {});

/// Longest finite lifetime (death - birth) in the given dimension; 0 when the
/// dimension has no finite intervals. Infinite intervals never count, in
/// particular the essential dim-0 component.
double max_lifetime(const Barcode& barcode, int dim);

}  // namespace filtopo
