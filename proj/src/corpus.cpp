#include "bsdlab/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bsdlab {

CurveQ CorpusEntry::curve() const {
    return CurveQ(coefficients[0], coefficients[1], coefficients[2],
                  coefficients[3], coefficients[4], label);
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        const auto bar = s.find('|');
        const std::string head = strip(bar == std::string::npos ? s : s.substr(0, bar));
        CorpusEntry ent;
        try {
            const CurveQ c = CurveQ::parse(head);
            ent.label = c.label();
            ent.coefficients = c.a();
        } catch (const ParseError& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
        if (ent.label.empty())
            throw ParseError("corpus line " + std::to_string(lineno) + ": missing label");
        if (bar != std::string::npos) {
            std::istringstream meta(s.substr(bar + 1));
            std::string tok;
            while (meta >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw ParseError("corpus line " + std::to_string(lineno) +
                                     ": bad token '" + tok + "'");
                const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                try {
                    if (key == "rank") ent.known_rank = std::stoi(val);
                    else if (key == "torsion") ent.known_torsion = std::stoi(val);
                    else if (key == "sha") ent.known_sha = std::stoi(val);
                    else if (key == "tamagawa") ent.known_tamagawa = Int(val);
                    else if (key == "lstar") ent.known_lstar = std::stod(val);
                    else if (key == "gens") {
                        std::string rest = val;
                        while (!rest.empty()) {
                            const auto semi = rest.find(';');
                            const std::string one =
                                semi == std::string::npos ? rest : rest.substr(0, semi);
                            ent.known_generators.push_back(parse_point(one));
                            if (semi == std::string::npos) break;
                            rest = rest.substr(semi + 1);
                        }
                    } else {
                        throw ParseError("unknown key '" + key + "'");
                    }
                } catch (const std::exception& e) {
                    throw ParseError("corpus line " + std::to_string(lineno) + ": " +
                                     e.what());
                }
            }
        }
        // metadata sanity against the curve itself
        const CurveQ c = ent.curve();
        for (const auto& g : ent.known_generators)
            if (!c.contains(g))
                throw ParseError("corpus line " + std::to_string(lineno) +
                                 ": generator off curve");
        out.push_back(std::move(ent));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_corpus(ss.str());
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("BSDLAB_DATA")) {
        return std::string(env) + "/curves.txt";
    }
    return "data/curves.txt";
}

}  // namespace bsdlab
