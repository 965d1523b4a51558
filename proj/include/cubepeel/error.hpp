#ifndef CUBEPEEL_ERROR_HPP
#define CUBEPEEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cubepeel {

// Exit statuses shared with the CLI: 0 ok, 1 verification failure,
// 2 input error, 3 internal consistency error.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, int exit_status,
          std::string witness = "")
        : std::runtime_error(message),
          code(std::move(code)),
          witness(std::move(witness)),
          exit_status(exit_status) {}

    std::string code;
    std::string witness;
    int exit_status;
};

inline Error input_error(const std::string& code, const std::string& msg,
                         const std::string& witness = "") {
    return Error(code, msg, 2, witness);
}

inline Error verification_error(const std::string& code, const std::string& msg,
                                const std::string& witness = "") {
    return Error(code, msg, 1, witness);
}

inline Error internal_error(const std::string& code, const std::string& msg,
                            const std::string& witness = "") {
    return Error(code, msg, 3, witness);
}

} // namespace cubepeel

#endif
