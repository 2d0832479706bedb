#ifndef BATHY_EXCEPTIONS_HPP
#define BATHY_EXCEPTIONS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bathy {

// File-format violation. Carries the byte offset where parsing stopped.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Requested a dense representation beyond the configured size cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative solve did not reach the requested tolerance.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::vector<double> residual_history)
        : std::runtime_error(what), history_(std::move(residual_history)) {}
    const std::vector<double>& residual_history() const { return history_; }

private:
    std::vector<double> history_;
};

// Nearly singular recovery system; carries the offending determinant value.
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& what, double determinant)
        : std::runtime_error(what), determinant_(determinant) {}
    double determinant() const { return determinant_; }

private:
    double determinant_;
};

} // namespace bathy

#endif
