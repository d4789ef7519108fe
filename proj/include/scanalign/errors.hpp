#pragma once

#include <stdexcept>
#include <string>

namespace scanalign {

// File and format problems; carries the offending path. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    IoError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

enum class PgmErrorKind { UnsupportedMagic, MalformedHeader, TruncatedData };

class PgmError : public IoError {
public:
    PgmError(std::string path, PgmErrorKind kind, const std::string& what)
        : IoError(std::move(path), what), kind_(kind) {}
    PgmErrorKind kind() const { return kind_; }

private:
    PgmErrorKind kind_;
};

// The two pose sequences share no matching views. CLI exit code 2.
class NoOverlapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ill-conditioned or invalid geometry (collinear correspondences, too few
// points, broken rotation matrices). CLI exit code 4.
class DegenerateGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scanalign
