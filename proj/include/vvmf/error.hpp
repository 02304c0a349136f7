#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

// Error categories, aligned with the CLI exit statuses: parse failures map to
// status 2, violated mathematical preconditions to status 3.
enum class errc { parse, precondition, internal };

class error : public std::runtime_error {
 public:
  error(errc kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw error(errc::parse, msg); }
[[noreturn]] inline void fail_pre(const std::string& msg) { throw error(errc::precondition, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw error(errc::internal, msg); }

inline void require_pre(bool cond, const std::string& msg) {
  if (!cond) fail_pre(msg);
}

}  // namespace vvmf
