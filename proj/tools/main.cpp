#include "commands.hpp"

int main(int argc, char** argv) {
    return qmpgrover::cli::run_cli(argc, argv);
}
