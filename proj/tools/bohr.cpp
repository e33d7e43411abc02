#include "bohr/cli.hpp"

int main(int argc, char **argv)
{
    return bohr::cli::main_entry(argc, argv);
}
