#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2p {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

// Error kinds map onto the CLI exit-code contract:
// Input -> 2, Budget -> 3, Counterexample/Internal -> 1.
enum class ErrKind { Input, Budget, Counterexample, Internal };

struct Error : std::runtime_error {
    ErrKind kind;
    Error(ErrKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

[[noreturn]] inline void fail_input(const std::string& m) { throw Error(ErrKind::Input, m); }
[[noreturn]] inline void fail_budget(const std::string& m) { throw Error(ErrKind::Budget, m); }
[[noreturn]] inline void fail_counterexample(const std::string& m) {
    throw Error(ErrKind::Counterexample, m);
}
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrKind::Internal, m); }

inline void require_internal(bool ok, const std::string& m) {
    if (!ok) fail_internal(m);
}

}  // namespace g2p
