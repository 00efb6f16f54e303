#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "vscan/errors.hpp"

namespace vscan_test {

// Asserts that fn() throws vscan::Error carrying exactly `code`.
template <typename Fn>
void check_raises(vscan::ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected error " << vscan::error_name(code) << ", nothing thrown");
  } catch (const vscan::Error& e) {
    INFO(e.what());
    CHECK(e.code() == code);
  } catch (const std::exception& e) {
    FAIL_CHECK("expected vscan::Error, got: " << e.what());
  }
}

}  // namespace vscan_test
