#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cloud.hpp"

namespace pmod {

namespace detail {

inline std::vector<std::string> nonblank_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

inline int parse_mult(const std::string& s) {
    try {
        std::size_t pos = 0;
        int m = std::stoi(s, &pos);
        if (pos != s.size() || m < 1) throw ValidationError("");
        return m;
    } catch (...) {
        throw ValidationError("bad multiplicity: " + s);
    }
}

}  // namespace detail

// Poset file: line 1 `b <decimal>`, then one point per line, strictly increasing.
inline WeightedPoset parse_poset(std::istream& in) {
    auto lines = detail::nonblank_lines(in);
    if (lines.empty()) throw ValidationError("empty poset file");
    auto head = detail::split_ws(lines[0]);
    if (head.size() != 2 || head[0] != "b") throw ValidationError("poset file must start with `b <decimal>`");
    Rat b = parse_rational(head[1]);
    std::vector<Rat> pts;
    for (std::size_t i = 1; i < lines.size(); ++i) pts.push_back(parse_rational(lines[i]));
    return WeightedPoset(pts, b);
}

inline void print_poset(std::ostream& out, const WeightedPoset& P) {
    out << "b " << format_rational(P.b()) << "\n";
    for (const Rat& x : P.points()) out << format_rational(x) << "\n";
}

// Barcode file: `<lo-coordinate> <hi-coordinate> <multiplicity>` per line.
inline Barcode parse_barcode(std::istream& in, const WeightedPoset& P) {
    Barcode out;
    for (const auto& line : detail::nonblank_lines(in)) {
        auto tok = detail::split_ws(line);
        if (tok.size() != 3) throw ValidationError("barcode line needs `<lo> <hi> <mult>`: " + line);
        auto lo = P.index_of(parse_rational(tok[0])), hi = P.index_of(parse_rational(tok[1]));
        if (!lo || !hi) throw ValidationError("barcode endpoint is not a poset point: " + line);
        Interval iv{*lo, *hi};
        check_interval(P, iv);
        out.push_back({iv, detail::parse_mult(tok[2])});
    }
    return canonical_barcode(out);
}

inline void print_barcode(std::ostream& out, const WeightedPoset& P, const Barcode& B) {
    for (const auto& bar : canonical_barcode(B))
        out << format_rational(P.coord(bar.iv.lo)) << " " << format_rational(P.coord(bar.iv.hi)) << " "
            << bar.mult << "\n";
}

// Continuous barcode file: `<r> <R|inf> <mult>` per line, half-open bars.
inline ContinuousBarcode parse_continuous(std::istream& in) {
    ContinuousBarcode out;
    for (const auto& line : detail::nonblank_lines(in)) {
        auto tok = detail::split_ws(line);
        if (tok.size() != 3) throw ValidationError("continuous bar needs `<r> <R|inf> <mult>`: " + line);
        ContinuousBar bar;
        bar.r = parse_rational(tok[0]);
        if (tok[1] != "inf") bar.death = parse_rational(tok[1]);
        bar.mult = detail::parse_mult(tok[2]);
        check_continuous_bar(bar);
        out.push_back(bar);
    }
    return out;
}

inline void print_continuous(std::ostream& out, const ContinuousBarcode& B) {
    for (const auto& bar : B) {
        check_continuous_bar(bar);
        out << format_rational(bar.r) << " " << (bar.death ? format_rational(*bar.death) : std::string("inf"))
            << " " << bar.mult << "\n";
    }
}

// Point cloud CSV: one point per line, comma-separated decimals.
inline PointCloud parse_cloud(std::istream& in, Metric metric = Metric::LInf) {
    PointCloud c;
    c.metric = metric;
    for (const auto& line : detail::nonblank_lines(in)) {
        std::vector<Rat> pt;
        std::string cell;
        std::istringstream row(line);
        while (std::getline(row, cell, ',')) pt.push_back(parse_rational(cell));
        c.points.push_back(std::move(pt));
    }
    check_cloud(c);
    return c;
}

inline void print_cloud(std::ostream& out, const PointCloud& c) {
    for (const auto& pt : c.points) {
        for (std::size_t k = 0; k < pt.size(); ++k) out << (k ? "," : "") << format_rational(pt[k]);
        out << "\n";
    }
}

// Matching report: MATCH lines, then UNMATCHED-LEFT/RIGHT, then HEIGHT.
inline void print_matching_report(std::ostream& out, const WeightedPoset& P, const MatchingRecord& m,
                                  const Barcode& B1, const Barcode& B2) {
    std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
    auto fmt = [&](const Interval& iv) {
        return format_rational(P.coord(iv.lo)) + "," + format_rational(P.coord(iv.hi));
    };
    for (auto& [a, b] : m.pairs)
        out << "MATCH " << fmt(e1[a]) << " " << fmt(e2[b])
            << " dist=" << format_rational(pairwise_distance(P, e1[a], e2[b])) << "\n";
    for (int a : m.unmatched1)
        out << "UNMATCHED-LEFT " << fmt(e1[a]) << " width=" << format_rational(width(P, e1[a])) << "\n";
    for (int b : m.unmatched2)
        out << "UNMATCHED-RIGHT " << fmt(e2[b]) << " width=" << format_rational(width(P, e2[b])) << "\n";
    out << "HEIGHT " << format_rational(matching_height(P, m, B1, B2)) << "\n";
}

// Limit report: TSV `step |X| mesh lower upper classical`.
inline void print_limit_table(std::ostream& out, const std::vector<LimitRow>& rows) {
    out << "step\t|X|\tmesh\tlower\tupper\tclassical\n";
    for (const auto& r : rows)
        out << r.step << "\t" << r.size << "\t" << format_rational(r.mesh_value) << "\t"
            << format_rational(r.lower) << "\t" << format_rational(r.upper) << "\t"
            << format_rational(r.classical) << "\n";
}

}  // namespace pmod
