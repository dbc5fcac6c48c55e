#pragma once

#include <stdexcept>
#include <string>

namespace hdpot {

enum class errc {
    domain_mismatch,
    invalid_measure,
    invalid_coupling,
    invalid_parameter,
    partition_gap,
    invalid_ensemble,
    numerical_underflow,
    empty_data,
    numerical_failure,
    empty_support,
    support_mismatch,
    degenerate_dirichlet,
    supports_overlap,
    unknown_experiment,
    kernel_not_invertible,
    insufficient_signal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) raise(code, what);
}

}  // namespace hdpot
