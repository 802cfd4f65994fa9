#include "sortic/instance.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sortic {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line_no) {
    try {
        size_t used = 0;
        int v = std::stoi(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
    }
}

} // namespace

ParsedInstance parse_instance(std::string_view text, std::string id) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    std::optional<int> n;
    std::vector<FaceMask> facets;
    std::vector<IntervalPart> parts;
    int last_line = 1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<Token> toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        last_line = line_no;
        const std::string& head = toks[0].text;

        if (head == "n") {
            if (n) throw ParseError(line_no, toks[0].column, "duplicate n header");
            if (toks.size() != 2)
                throw ParseError(line_no, toks[0].column, "expected: n <int>");
            int value = parse_int(toks[1], line_no);
            if (value < 1 || value > kMaxVertices)
                throw ParseError(line_no, toks[1].column,
                                 "vertex count must be in [1,64]");
            n = value;
            continue;
        }
        if (!n)
            throw ParseError(line_no, toks[0].column,
                             "the n header must come before " + head + " lines");

        if (head == "facet") {
            if (!parts.empty())
                throw ParseError(line_no, toks[0].column,
                                 "facet and interval lines cannot be mixed");
            if (toks.size() < 2)
                throw ParseError(line_no, toks[0].column, "facet needs vertices");
            FaceMask f = 0;
            for (size_t i = 1; i < toks.size(); ++i) {
                int v = parse_int(toks[i], line_no);
                if (v < 1 || v > *n)
                    throw ParseError(line_no, toks[i].column,
                                     "vertex " + std::to_string(v) +
                                         " out of range [1," + std::to_string(*n) + "]");
                if (face_contains_vertex(f, v))
                    throw ParseError(line_no, toks[i].column,
                                     "repeated vertex " + std::to_string(v));
                f = face_with_vertex(f, v);
            }
            if (std::find(facets.begin(), facets.end(), f) != facets.end())
                throw ParseError(line_no, toks[0].column,
                                 "duplicate facet " + face_to_string(f));
            facets.push_back(f);
            continue;
        }
        if (head == "interval") {
            if (!facets.empty())
                throw ParseError(line_no, toks[0].column,
                                 "facet and interval lines cannot be mixed");
            if (toks.size() != 4)
                throw ParseError(line_no, toks[0].column,
                                 "expected: interval lo hi rank");
            int lo = parse_int(toks[1], line_no);
            int hi = parse_int(toks[2], line_no);
            int rank = parse_int(toks[3], line_no);
            parts.push_back({lo, hi, rank});
            continue;
        }
        throw ParseError(line_no, toks[0].column, "unknown directive '" + head + "'");
    }

    if (!n) throw ParseError(std::max(1, line_no), 1, "missing n header");
    if (facets.empty() && parts.empty())
        throw ParseError(last_line, 1, "no facet or interval lines");

    ParsedInstance inst{std::move(id), SimplicialComplex::void_complex(*n),
                        std::nullopt};
    if (!parts.empty()) {
        try {
            inst.spec = IntervalComplexSpec(*n, parts);
        } catch (const PreconditionError& e) {
            throw ParseError(last_line, 1, e.what());
        }
        inst.delta = build_interval_complex(*inst.spec);
    } else {
        inst.delta = SimplicialComplex::build(*n, facets);
    }
    return inst;
}

std::string instance_to_text(const ParsedInstance& inst) {
    std::string out = "# " + inst.id + "\n";
    out += "n " + std::to_string(inst.delta.n()) + "\n";
    if (inst.spec) {
        for (const IntervalPart& p : inst.spec->parts()) {
            out += "interval " + std::to_string(p.lo) + " " + std::to_string(p.hi) +
                   " " + std::to_string(p.rank) + "\n";
        }
    } else {
        for (FaceMask f : inst.delta.facets()) {
            out += "facet";
            for (int v : face_vertices(f)) out += " " + std::to_string(v);
            out += "\n";
        }
    }
    return out;
}

} // namespace sortic
