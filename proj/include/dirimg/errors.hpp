#ifndef DIRIMG_ERRORS_HPP
#define DIRIMG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirimg {

// Error taxonomy. `input` covers anything a caller can fix by changing the
// configuration (bad file, violated precondition, degenerate curve);
// `numeric` covers failures of the numerical machinery itself.
enum class ErrorKind {
    input,            // bad config / precondition violated
    unsupported_model,
    degenerate_curve,
    unsupported_configuration,
    quadrature_path,
    stencil_too_coarse,
    orientation,
    conditioning,
    solver,
    accuracy,
    internal
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::input: return "input";
        case ErrorKind::unsupported_model: return "unsupported-model";
        case ErrorKind::degenerate_curve: return "degenerate-curve";
        case ErrorKind::unsupported_configuration: return "unsupported-configuration";
        case ErrorKind::quadrature_path: return "quadrature-path";
        case ErrorKind::stencil_too_coarse: return "stencil-too-coarse";
        case ErrorKind::orientation: return "orientation";
        case ErrorKind::conditioning: return "conditioning";
        case ErrorKind::solver: return "solver";
        case ErrorKind::accuracy: return "accuracy";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

} // namespace dirimg

#endif
