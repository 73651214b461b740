#pragma once

#include <ncsf/ncpoly.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ncsf {

// Vector files: one "<scalar> <word>" pair per line, '#' comments.
inline NcPolyQ parse_vector(const std::string& text)
{
    NcPolyQ out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string coeff, word;
        if (!(ls >> coeff)) continue;
        if (!(ls >> word))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected <scalar> <word>");
        out.add_term(Word::parse(word), rat_from_string(coeff));
    }
    return out;
}

inline std::string format_vector(const NcPolyQ& f)
{
    std::string s;
    for (auto& [w, c] : f.terms()) s += to_string(c) + " " + w.str() + "\n";
    return s;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace ncsf
