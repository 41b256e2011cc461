#include <iostream>

#include "cli.hpp"

namespace {

void emit(std::ostream& os, const std::string& text) {
    if (text.empty()) return;
    os << text;
    if (text.back() != '\n') os << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = divisum::cli::run(args);
    emit(std::cout, result.out);
    emit(std::cerr, result.err);
    return result.exit_code;
}
