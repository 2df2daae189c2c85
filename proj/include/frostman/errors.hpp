#pragma once

#include <stdexcept>
#include <string>

namespace frostman {

// Base class for all library errors. `code()` is a stable machine-readable
// tag; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

class ScaleTooCoarse : public Error {
  public:
    explicit ScaleTooCoarse(const std::string& msg) : Error("ScaleTooCoarse", msg) {}
};

class RegimeMismatch : public Error {
  public:
    explicit RegimeMismatch(const std::string& msg) : Error("RegimeMismatch", msg) {}
};

class MixedScales : public Error {
  public:
    explicit MixedScales(const std::string& msg) : Error("MixedScales", msg) {}
};

class CertificationFailure : public Error {
  public:
    explicit CertificationFailure(const std::string& msg) : Error("CertificationFailure", msg) {}
};

class DegenerateSeries : public Error {
  public:
    explicit DegenerateSeries(const std::string& msg) : Error("DegenerateSeries", msg) {}
};

class ParameterOrder : public Error {
  public:
    explicit ParameterOrder(const std::string& msg) : Error("ParameterOrder", msg) {}
};

class UnalignedScale : public Error {
  public:
    explicit UnalignedScale(const std::string& msg) : Error("UnalignedScale", msg) {}
};

class TooLarge : public Error {
  public:
    explicit TooLarge(const std::string& msg) : Error("TooLarge", msg) {}
};

// Raised when a requested build would exceed what a single desk machine can
// hold (stick counts, never the dyadic grid itself).
class DeskScaleExceeded : public Error {
  public:
    explicit DeskScaleExceeded(const std::string& msg) : Error("DeskScaleExceeded", msg) {}
};

}  // namespace frostman
