#pragma once

#include <stdexcept>
#include <string>

namespace lis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct ToleranceExceeded : Error { using Error::Error; };
struct TruncationWarning : Error { using Error::Error; };

}  // namespace lis
