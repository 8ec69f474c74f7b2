#pragma once

#include <stdexcept>
#include <string>

namespace g2lab {

struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

struct DivergentK : std::domain_error {
    explicit DivergentK(const std::string& what) : std::domain_error(what) {}
};

struct OutsideSupport : std::domain_error {
    explicit OutsideSupport(const std::string& what) : std::domain_error(what) {}
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

struct NonIntegerEntry : std::runtime_error {
    explicit NonIntegerEntry(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::invalid_argument {
    explicit BadParameter(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace g2lab
