// Regenerates the reference fixtures under data/appendix_a: for every case
// and matrix, one file holding the literal table transcription and one
// holding the operator built from the definitions. Run from anywhere; paths
// are compiled in.

#include "qudigit/golden.hpp"
#include "qudigit/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main() {
    using namespace qudigit;

    int written = 0;
    for (GoldenCase c : golden_cases())
        for (GoldenMatrix m : golden_matrices(c)) {
            for (FixtureKind kind : {FixtureKind::printed, FixtureKind::oracle}) {
                const ComplexMatrix mat =
                    kind == FixtureKind::printed
                        ? golden_transcription(c, m, Transcription::as_printed)
                        : golden_oracle(c, m);
                const std::string path = golden_fixture_path(c, m, kind);
                std::filesystem::create_directories(
                    std::filesystem::path(path).parent_path());
                std::ofstream f(path, std::ios::binary);
                f << matrix_to_json(mat).dump(2) << "\n";
                if (!f) {
                    std::cerr << "cannot write " << path << "\n";
                    return 1;
                }
                ++written;
            }
        }
    std::cout << "wrote " << written << " fixtures\n";
    return 0;
}
