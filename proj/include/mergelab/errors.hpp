#pragma once

#include <stdexcept>
#include <string>

namespace mergelab {

/// Invalid dimensions or mismatched tensor shapes.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: temperatures, densities, weights, probabilities.
class ParamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure, e.g. SVD non-convergence or non-finite intermediates.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Training produced a non-finite loss.
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Statistic is undefined for the given input (degenerate correlation).
class StatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pipeline-level failure: empty pools, missing artifacts, unusable configs.
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Experiment preconditions not met (e.g. a required score bin is empty).
class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FormatIssue {
    BadMagic,
    BadVersion,
    BadHeader,
    Truncated,
    LengthMismatch,
    BadData,
};

/// Container-format violation; carries which rule was broken.
class FormatError : public std::runtime_error {
public:
    FormatError(FormatIssue issue, const std::string& msg)
        : std::runtime_error(msg), issue_(issue) {}

    FormatIssue issue() const noexcept { return issue_; }

private:
    FormatIssue issue_;
};

}  // namespace mergelab
