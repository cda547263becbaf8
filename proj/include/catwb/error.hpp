#ifndef CATWB_ERROR_HPP
#define CATWB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace catwb {

// Every failure carries a stable machine-readable code (e.g. "MissingComposite")
// next to the human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace catwb

#endif
