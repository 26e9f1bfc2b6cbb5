#include "wedgeworks/cli.hpp"

int main(int argc, char** argv) { return wedgeworks::run(argc, argv); }
