// Builds the amalgamated Catch2 translation unit once for all test targets.
#include <catch2/catch_amalgamated.cpp>
