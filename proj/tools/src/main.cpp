#include "tangentlab_tools/cli.hpp"

int main(int argc, char** argv) {
    return tangentlab::tools::run(argc, argv);
}
