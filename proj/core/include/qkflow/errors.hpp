#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace qkflow {

/// Base class for all qkflow errors so callers can catch the whole family.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// k outside [0, n] or similar argument-range violations.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// S_{k-1}(lambda) vanished (or nearly so); carries the offending curvatures.
class DegenerateDenominatorError : public Error {
public:
    DegenerateDenominatorError(const std::string& what, Eigen::VectorXd lam)
        : Error(what), lambda(std::move(lam)) {}
    Eigen::VectorXd lambda;
};

/// A principal radius of curvature dropped to <= 0 at a grid node.
class ConvexityLossError : public Error {
public:
    ConvexityLossError(const std::string& what, int node_i, int node_j = 0)
        : Error(what), i(node_i), j(node_j) {}
    int i, j;
};

/// Explicit step would move a node farther than the grid can resolve.
class CflViolationError : public Error {
public:
    CflViolationError(const std::string& what, double suggested)
        : Error(what), suggested_dt(suggested) {}
    double suggested_dt;
};

/// Mismatched grids, bad config values, missing files.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Interface too coarse to certify, non-monotone chart slice, etc.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& what) : Error(what) {}
};

/// Non-degeneracy condition fell below the certified threshold mid-run.
class DegeneracyAlarm : public Error {
public:
    DegeneracyAlarm(const std::string& what, double t_alarm)
        : Error(what), t(t_alarm) {}
    double t;
};

} // namespace qkflow
