#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filtopo {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A point is constant, i.e. the zero vector after mean-centering.
class ConstantPointError : public Error {
public:
    explicit ConstantPointError(std::size_t index)
        : Error("point " + std::to_string(index) + " is constant (zero after centering)"),
          index(index) {}
    std::size_t index;
};

// A coordinate column has zero variance; VNE scaling is undefined for it.
class ZeroVarianceColumnError : public Error {
public:
    explicit ZeroVarianceColumnError(std::size_t column)
        : Error("column " + std::to_string(column) + " has zero variance"), column(column) {}
    std::size_t column;
};

class KTooLargeError : public Error {
public:
    KTooLargeError(std::size_t k, std::size_t n)
        : Error("k = " + std::to_string(k) + " must be < point count " + std::to_string(n)),
          k(k), n(n) {}
    std::size_t k, n;
};

// Covariance rank is below the requested number of lens dimensions.
class DegenerateCovarianceError : public Error {
public:
    explicit DegenerateCovarianceError(const std::string& detail)
        : Error("degenerate covariance: " + detail) {}
};

// All lens values coincide on an axis; a standard cover cannot be built.
class ZeroRangeError : public Error {
public:
    explicit ZeroRangeError(std::size_t axis)
        : Error("lens axis " + std::to_string(axis) + " has zero range"), axis(axis) {}
    std::size_t axis;
};

class EmptyCloudError : public Error {
public:
    EmptyCloudError() : Error("operation requires a nonempty point cloud") {}
};

// The Rips complex guard tripped: too many edges below the scale cutoff.
class ComplexTooLargeError : public Error {
public:
    ComplexTooLargeError(std::size_t edge_count, std::size_t cap)
        : Error("Rips complex has " + std::to_string(edge_count) + " edges (cap " +
                std::to_string(cap) + "); lower maxscale or density-filter the cloud"),
          edge_count(edge_count), cap(cap) {}
    std::size_t edge_count, cap;
};

class ChannelMismatchError : public Error {
public:
    explicit ChannelMismatchError(std::size_t channels)
        : Error("expected a single-channel image, got " + std::to_string(channels) +
                " channels"),
          channels(channels) {}
    std::size_t channels;
};

class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& reason)
        : Error("parse error at " + where + ": " + reason) {}
};

// Structurally inconsistent data, e.g. ragged CSV rows or a bad tensor shape.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& reason) : Error("shape error: " + reason) {}
};

}  // namespace filtopo
