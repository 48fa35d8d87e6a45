#pragma once

#include <stdexcept>
#include <string>

namespace beq {

struct SingularError : std::runtime_error {
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentError : std::runtime_error {
    explicit InconsistentError(const std::string& what) : std::runtime_error(what) {}
};

struct RadicandMismatchError : std::runtime_error {
    explicit RadicandMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct GroundMismatchError : std::runtime_error {
    explicit GroundMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnElementError : std::runtime_error {
    explicit NotAnElementError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyDownSetError : std::runtime_error {
    explicit EmptyDownSetError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyCategoryError : std::runtime_error {
    explicit EmptyCategoryError(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatchError : std::runtime_error {
    explicit LengthMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatchError : std::runtime_error {
    explicit SizeMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentMomentsError : std::runtime_error {
    explicit InconsistentMomentsError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beq
