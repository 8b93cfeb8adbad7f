#pragma once

#include <stdexcept>
#include <string>

namespace gt {

// Argument outside the mathematical domain of an operation (poles, empty
// brackets, zero vectors, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Gamma evaluated at a non-positive integer; carries the pole index k >= 0
// (the argument was -k).
class pole_error : public domain_error {
public:
    pole_error(const std::string& what, int pole_index)
        : domain_error(what), pole_index_(pole_index) {}
    int pole_index() const { return pole_index_; }

private:
    int pole_index_;
};

// Requested accuracy could not be reached; carries the partial result and
// the running error estimate.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double partial, double err_est)
        : std::runtime_error(what), partial_(partial), err_est_(err_est) {}
    double partial() const { return partial_; }
    double err_est() const { return err_est_; }

private:
    double partial_;
    double err_est_;
};

// Operation not available for this body kind / derivative source.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A value of q fell inside the odd-integer window of radial_power_ft; the
// caller should use the odd-order moment route instead of the fractional one.
class redirect_error : public std::runtime_error {
public:
    redirect_error(const std::string& what, int odd_k)
        : std::runtime_error(what), odd_k_(odd_k) {}
    int odd_k() const { return odd_k_; }

private:
    int odd_k_;
};

} // namespace gt
