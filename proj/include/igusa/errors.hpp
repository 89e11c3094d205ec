#pragma once

#include <stdexcept>
#include <string>

namespace igusa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroValuation : Error {
    ZeroValuation() : Error("p-adic valuation of zero is undefined") {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NegativeValuation : Error {
    explicit NegativeValuation(const std::string& what) : Error(what) {}
};

struct ConstantPolynomial : Error {
    explicit ConstantPolynomial(const std::string& what) : Error(what) {}
};

/// A non-constant cofactor without rational roots remains: the splitting
/// field of the input is not Q.  The offending cofactor is carried along
/// for reporting.
struct NotSplitOverQ : Error {
    std::string cofactor;
    explicit NotSplitOverQ(std::string cofactor_text)
        : Error("splitting field is not Q; rational-root-free cofactor: " + cofactor_text),
          cofactor(std::move(cofactor_text)) {}
};

struct EmptyRootList : Error {
    EmptyRootList() : Error("root list is empty") {}
};

struct DuplicateRoot : Error {
    explicit DuplicateRoot(const std::string& what) : Error(what) {}
};

struct RecursionBudgetExceeded : Error {
    explicit RecursionBudgetExceeded(const std::string& what) : Error(what) {}
};

struct NonIntegralCount : Error {
    explicit NonIntegralCount(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

}  // namespace igusa
