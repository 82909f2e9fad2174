// CLI entry point; subcommands land together with the library modules.
#include <iostream>

int main() {
    std::cout << "qso4: subcommands not wired yet\n";
    return 2;
}
