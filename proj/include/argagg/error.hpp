#ifndef ARGAGG_ERROR_HPP
#define ARGAGG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argagg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t line, const std::string& what)
        : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UndeclaredArgument : public ParseError {
public:
    explicit UndeclaredArgument(std::string name)
        : ParseError("undeclared argument '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DuplicateArgument : public ParseError {
public:
    explicit DuplicateArgument(std::string name)
        : ParseError("duplicate argument '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownArgument : public Error {
public:
    explicit UnknownArgument(const std::string& what) : Error("unknown argument " + what) {}
};

class FrameworkMismatch : public Error {
public:
    FrameworkMismatch() : Error("labelling is bound to a different framework") {}
};

class TooLarge : public Error {
public:
    TooLarge(std::size_t size, std::size_t cap)
        : Error("framework has " + std::to_string(size) + " arguments, enumeration cap is " +
                std::to_string(cap)),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(double required, std::size_t budget)
        : Error("domain needs " + std::to_string(static_cast<unsigned long long>(required)) +
                " profiles, budget is " + std::to_string(budget)) {}
};

class HypothesisUnmet : public Error {
public:
    using Error::Error;
};

}  // namespace argagg

#endif
