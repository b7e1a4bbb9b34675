#include <gtest/gtest.h>

#include "latticekit/errors.hpp"

int main(int argc, char** argv) {
  latticekit::set_warnings_enabled(false);
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
