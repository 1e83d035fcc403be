#include "millerzeros/cli.hpp"

int main(int argc, char** argv) { return mz::run(argc, argv); }
