#pragma once

#include <stdexcept>
#include <string>

namespace surfres {

// Error categories, mapped to CLI exit codes in tools/surfres_cli.cpp:
//   usage, domain        -> 2  (bad input)
//   out_of_scope         -> 3  (valid but unsupported: singular point,
//                               oversized field, uncertifiable precision)
//   precision            -> 3  (window/precision cannot certify the answer)
enum class errc { usage, domain, out_of_scope, precision };

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw error(c, msg);
}

}  // namespace surfres
