#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"
#include "lowdeg/parallel.hpp"

int main(int argc, char** argv) {
  lowdeg::init_threads_from_env();
  return doctest::Context(argc, argv).run();
}
