#ifndef BSDLAB_CORPUS_HPP
#define BSDLAB_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsdlab/curve.hpp"

namespace bsdlab {

// One line of the bundled curve file:
//   label:[a1,a2,a3,a4,a6] | rank=r torsion=t tamagawa=c sha=s gens=(x,y);(x,y)
// Metadata are oracle expectations only, never computational inputs.
struct CorpusEntry {
    std::string label;
    std::array<Int, 5> coefficients;
    std::optional<int> known_rank;
    std::vector<RationalPoint> known_generators;
    std::optional<int> known_sha;
    std::optional<Int> known_tamagawa;
    std::optional<int> known_torsion;
    std::optional<double> known_lstar;  // external leading coefficient, order >= 2

    CurveQ curve() const;
};

std::vector<CorpusEntry> parse_corpus(const std::string& text);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

// resolve the bundled corpus: explicit path, $BSDLAB_DATA/curves.txt, ./data/curves.txt
std::string default_corpus_path();

}  // namespace bsdlab

#endif
