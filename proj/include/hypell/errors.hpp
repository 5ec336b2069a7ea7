#pragma once

#include <stdexcept>
#include <string>

namespace hypell {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// Iterative scheme hit its iteration cap.
class iteration_error : public error {
public:
    using error::error;
};

/// Quadrature tolerance not reached at the maximum refinement depth.
class accuracy_error : public error {
public:
    using error::error;
};

/// Root bracket endpoints have the same sign.
class bracket_error : public error {
public:
    using error::error;
};

/// Series did not converge within its term cap.
class convergence_error : public error {
public:
    using error::error;
};

/// Evaluation point lies within the exclusion radius of a pole.
class pole_error : public error {
public:
    using error::error;
};

/// Numerically unstable configuration (vanishing denominators, unstable limits).
class conditioning_error : public error {
public:
    using error::error;
};

} // namespace hypell
