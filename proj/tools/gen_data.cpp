// Regenerates the bundled category data files from the built-in tables.
#include <fstream>
#include <iostream>
#include <string>

#include "mtc/builtin.hpp"
#include "mtc/category.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    for (const auto& name : mtc::builtin_names()) {
        std::string path = dir + "/" + name + ".json";
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << mtc::save_category(mtc::builtin_by_name(name)) << "\n";
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}
