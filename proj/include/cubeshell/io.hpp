#pragma once

// Point files: one point per line, fields separated by commas or blanks,
// decimal or "a/b" literals, '#' starts a comment.

#include "cubeshell/geometry.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace cubeshell {

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, std::size_t lineno) {
    std::vector<std::string> out;
    std::size_t start = 0;
    const bool commas = line.find(',') != std::string::npos;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string part = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::istringstream ss(part);
        std::string tok;
        std::size_t count = 0;
        while (ss >> tok) {
            out.push_back(tok);
            ++count;
        }
        if (commas && count == 0) throw ParseError("empty field", lineno);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string plain_number(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    // Terminating decimals are written as decimals, everything else as a/b.
    mpz_class den = q.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1) return to_exact(q);
    std::string s = to_decimal(q, static_cast<int>(std::max(twos, fives)));
    return s;
}

}  // namespace detail

/// Reads a point set. With `dim` set, every row must have that many fields;
/// otherwise the first data row fixes the dimension.
inline PointSet parse_points(std::istream& in, std::optional<std::size_t> dim = std::nullopt) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n,") == std::string::npos) {
            if (line.find(',') != std::string::npos) throw ParseError("empty field", lineno);
            continue;
        }
        auto fields = detail::split_fields(line, lineno);
        if (!dim) dim = fields.size();
        if (fields.size() != *dim)
            throw ParseError("expected " + std::to_string(*dim) + " coordinates, found " +
                                 std::to_string(fields.size()),
                             lineno);
        std::vector<Scalar> c;
        c.reserve(fields.size());
        for (const auto& f : fields) {
            try {
                c.push_back(parse_scalar(f));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        pts.emplace_back(std::move(c));
    }
    if (pts.empty()) throw UsageError("no points in input");
    return PointSet(std::move(pts));
}

inline PointSet read_points(const std::string& path, std::optional<std::size_t> dim = std::nullopt) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    return parse_points(f, dim);
}

/// Writes one point per line in a form parse_points reads back exactly.
inline void write_points(std::ostream& out, const PointSet& P) {
    for (const auto& p : P) {
        for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? " " : "") << detail::plain_number(p[i]);
        out << '\n';
    }
}

}  // namespace cubeshell
