#pragma once

// Command-line front end. run() takes its streams as arguments so the whole
// tool can be driven from tests.
//
// Exit codes: 0 success, 1 infeasible or empty result, 2 usage or input
// error, 3 internal error.

#include "cubeshell/io.hpp"
#include "cubeshell/oracle.hpp"
#include "cubeshell/solver.hpp"
#include "cubeshell/square_union.hpp"
#include "cubeshell/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <future>
#include <random>
#include <sstream>

namespace cubeshell::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string subcommand;
    std::string input = "-";
    std::size_t dim = 0;  // 0: infer from the input
    std::uint64_t seed = 7;
    std::string format = "json";
    int precision = 6;
    std::string svg_path;
    bool oracle = false;
    std::vector<std::size_t> sizes{1000, 4000, 16000};
    std::size_t jobs = 1;
    std::string level;
    std::size_t n = 0;
    std::string dist = "uniform";
};

/// Reproducible instances with coordinates k/100, k an integer in [-10000, 10000].
inline PointSet generate(std::size_t n, std::size_t dim, const std::string& dist, std::uint64_t seed) {
    if (n == 0) throw UsageError("gen: --n must be positive");
    if (dim == 0) throw UsageError("gen: --dim must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-10000, 10000);
    std::vector<Point> pts;
    pts.reserve(n);
    if (dist == "uniform") {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Scalar> c(dim);
            for (auto& x : c) x = Scalar(coord(rng), 100);
            pts.emplace_back(std::move(c));
        }
    } else if (dist == "clustered") {
        const std::size_t k = std::min<std::size_t>(8, 1 + n / 100);
        std::uniform_int_distribution<long> centre(-8000, 8000);
        std::normal_distribution<double> spread(0.0, 600.0);
        std::vector<std::vector<long>> centres(k, std::vector<long>(dim));
        for (auto& c : centres)
            for (auto& x : c) x = centre(rng);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = centres[i % k];
            std::vector<Scalar> p(dim);
            for (std::size_t a = 0; a < dim; ++a) {
                long v = c[a] + std::lround(spread(rng));
                p[a] = Scalar(std::clamp(v, -10000L, 10000L), 100);
            }
            pts.emplace_back(std::move(p));
        }
    } else {
        throw UsageError("gen: unknown distribution '" + dist + "'");
    }
    for (auto& p : pts)
        for (std::size_t a = 0; a < p.dim(); ++a) p[a].canonicalize();
    return PointSet(std::move(pts));
}

namespace detail {

class Emitter {
public:
    explicit Emitter(int precision) : prec_(precision) {}

    std::string text(const Scalar& q) const { return to_decimal(q, prec_); }

    // JSON number holding the rounded decimal.
    double dec(const Scalar& q) const { return std::stod(text(q)); }

    void scalar(json& j, const std::string& key, const Scalar& q) const {
        j[key] = dec(q);
        j[key + "_exact"] = to_exact(q);
    }

    void optional_scalar(json& j, const std::string& key, const std::optional<Scalar>& q) const {
        if (q) {
            scalar(j, key, *q);
        } else {
            j[key] = nullptr;
            j[key + "_exact"] = nullptr;
        }
    }

    void point(json& j, const std::string& key, const std::vector<Scalar>& c) const {
        json d = json::array(), e = json::array();
        for (const auto& x : c) {
            d.push_back(dec(x));
            e.push_back(to_exact(x));
        }
        j[key] = std::move(d);
        j[key + "_exact"] = std::move(e);
    }

    json vec(const Vec2& v) const { return json::array({dec(v.x), dec(v.y)}); }
    static json vec_exact(const Vec2& v) { return json::array({to_exact(v.x), to_exact(v.y)}); }

private:
    int prec_;
};

inline void print(std::ostream& out, const json& j, const std::string& format) {
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [k, v] : j.items()) {
        out << k << ':';
        if (v.is_string()) {
            out << ' ' << v.get<std::string>();
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
            for (const auto& x : v) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
        } else {
            out << ' ' << v.dump();
        }
        out << '\n';
    }
}

inline json shell_json(const Emitter& em, const PointSet& P, const Shell& shell, const std::string& tag) {
    json j;
    j["dimension"] = P.dim();
    j["n"] = P.size();
    em.point(j, "center", shell.center.coords());
    em.scalar(j, "outer_radius", shell.outer_radius);
    em.scalar(j, "inner_radius", shell.inner_radius);
    em.scalar(j, "width", shell.width());
    j["case"] = tag;
    return j;
}

inline json solve_json(const Emitter& em, const PointSet& P, const SolveResult& r) {
    json j = shell_json(em, P, r.shell, to_string(r.tag));
    em.optional_scalar(j, "r1", r.r1);
    em.optional_scalar(j, "r2", r.r2);
    j["candidate_count"] = r.candidate_count;
    j["outer_contacts"] = r.outer_contacts;
    j["inner_contacts"] = r.inner_contacts;
    return j;
}

/// Optimal shell by brute force, in original coordinates.
inline std::pair<Shell, std::string> oracle_shell(const PointSet& P) {
    switch (P.dim()) {
        case 1: {
            auto r = solve1d(P);
            return {r.shell, "direct"};
        }
        case 2: {
            auto [Pn, norm] = normalize(P);
            auto [r, x] = breakpoint_oracle_2d(Pn);
            return {best_shell_at(P, lift(Point{x}, norm)), "breakpoints"};
        }
        case 3: {
            auto [Pn, norm] = normalize(P);
            auto o = exact_oracle_3d(Pn);
            return {best_shell_at(P, lift(to_point(o.center), norm)), to_string(o.tag)};
        }
        default: throw UnsupportedDimension(P.dim());
    }
}

inline void require_3d(const PointSet& P, const std::string& what) {
    if (P.dim() != 3) throw UsageError(what + " works on 3-d inputs; got d = " + std::to_string(P.dim()));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Minimum-width axis-aligned cubic shells, computed exactly.", "cubeshell"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--precision", cfg.precision, "decimal places in decimal renderings")->check(CLI::Range(0, 200));
    app.add_option("--format", cfg.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--dim", cfg.dim, "input dimension (gen: output dimension)")->check(CLI::PositiveNumber);

    auto input_opt = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "point file, '-' for stdin"); };
    auto* solve_cmd = app.add_subcommand("solve", "minimum-width shell");
    input_opt(solve_cmd);
    solve_cmd->add_flag("--oracle", cfg.oracle, "cross-check against the brute-force oracle");
    auto* decide_cmd = app.add_subcommand("decide", "is some center of C at inner level >= r?");
    input_opt(decide_cmd);
    decide_cmd->add_option("--level", cfg.level, "inner-radius level r")->required();
    auto* vor_cmd = app.add_subcommand("voronoi", "L-inf Voronoi diagram of the (projected) points");
    input_opt(vor_cmd);
    auto* union_cmd = app.add_subcommand("union", "boundary of the union of plane sections at level r");
    input_opt(union_cmd);
    union_cmd->add_option("--level", cfg.level, "section radius w")->required();
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum (same schema as solve)");
    input_opt(oracle_cmd);
    auto* gen_cmd = app.add_subcommand("gen", "emit a random point file");
    gen_cmd->add_option("--n", cfg.n, "number of points")->required();
    gen_cmd->add_option("--dist", cfg.dist, "uniform or clustered")->check(CLI::IsMember({"uniform", "clustered"}));
    gen_cmd->add_option("--seed", cfg.seed, "random seed");
    auto* bench_cmd = app.add_subcommand("bench", "timing table for solve on uniform instances");
    bench_cmd->add_option("--sizes", cfg.sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--jobs", cfg.jobs, "parallel workers")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", cfg.seed, "random seed");
    auto* render_cmd = app.add_subcommand("render", "solve and draw an SVG figure");
    input_opt(render_cmd);
    render_cmd->add_option("--svg", cfg.svg_path, "output path")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    const detail::Emitter em(cfg.precision);
    std::optional<std::size_t> dim;
    if (cfg.dim) dim = cfg.dim;
    auto load = [&] { return cfg.input == "-" ? parse_points(in, dim) : read_points(cfg.input, dim); };

    try {
        if (app.got_subcommand(solve_cmd)) {
            PointSet P = load();
            SolveResult r = solve(P);
            json j = detail::solve_json(em, P, r);
            if (cfg.oracle) {
                auto [shell, tag] = detail::oracle_shell(P);
                json o;
                em.scalar(o, "width", shell.width());
                o["source"] = tag;
                o["agrees"] = shell.width() == r.width();
                j["oracle"] = std::move(o);
            }
            detail::print(out, j, cfg.format);
            return 0;
        }
        if (app.got_subcommand(oracle_cmd)) {
            PointSet P = load();
            auto [shell, tag] = detail::oracle_shell(P);
            json j = detail::shell_json(em, P, shell, "oracle");
            j["oracle_source"] = tag;
            detail::print(out, j, cfg.format);
            return 0;
        }
        if (app.got_subcommand(decide_cmd)) {
            PointSet P = load();
            detail::require_3d(P, "decide");
            const Scalar r = parse_scalar(cfg.level);
            auto [Pn, norm] = normalize(P);
            DecideResult d = decide(Pn, r);
            json j;
            em.scalar(j, "level", r);
            j["feasible"] = d.feasible;
            if (d.witness) {
                j["witness"] = em.vec(*d.witness);
                j["witness_exact"] = detail::Emitter::vec_exact(*d.witness);
                em.point(j, "center", lift(to_point(*d.witness), norm).coords());
            } else {
                j["witness"] = nullptr;
                j["witness_exact"] = nullptr;
            }
            detail::print(out, j, cfg.format);
            return d.feasible ? 0 : 1;
        }
        if (app.got_subcommand(vor_cmd)) {
            PointSet P = load();
            std::vector<Site> sites;
            if (P.dim() == 3) {
                sites = make_sites(normalize(P).first);
            } else if (P.dim() == 2) {
                std::vector<Vec2> pts;
                for (const auto& p : P) pts.push_back(to_vec2(p));
                sites = make_sites(pts);
            } else {
                throw UsageError("voronoi works on 2-d or 3-d inputs");
            }
            VoronoiDiagram vd = build_vd(std::move(sites));
            json j;
            json js = json::array();
            for (const auto& s : vd.sites())
                js.push_back({{"location", em.vec(s.location)},
                              {"location_exact", detail::Emitter::vec_exact(s.location)},
                              {"sources", s.sources}});
            j["sites"] = std::move(js);
            json jv = json::array();
            for (const auto& v : vd.vertices())
                jv.push_back({{"point", em.vec(v.point)},
                              {"point_exact", detail::Emitter::vec_exact(v.point)},
                              {"nearest", v.nearest}});
            j["vertices"] = std::move(jv);
            json je = json::array();
            for (const auto& e : vd.edges()) {
                json chain = json::array(), exact = json::array();
                for (const auto& p : e.chain) {
                    chain.push_back(em.vec(p));
                    exact.push_back(detail::Emitter::vec_exact(p));
                }
                je.push_back({{"sites", {e.a, e.b}}, {"chain", chain}, {"chain_exact", exact}, {"nearest", e.nearest}});
            }
            j["edges"] = std::move(je);
            const Rect& f = vd.frame();
            j["frame"] = {em.dec(f.xlo), em.dec(f.xhi), em.dec(f.ylo), em.dec(f.yhi)};
            detail::print(out, j, cfg.format);
            return 0;
        }
        if (app.got_subcommand(union_cmd)) {
            PointSet P = load();
            detail::require_3d(P, "union");
            const Scalar w = parse_scalar(cfg.level);
            if (sgn(w) < 0) throw UsageError("union: negative level");
            auto [Pn, norm] = normalize(P);
            std::vector<Square> squares;
            for (std::size_t i = 0; i < Pn.size(); ++i)
                if (auto s = clip_ball(Pn[i], w, i)) squares.push_back(*s);
            json j;
            em.scalar(j, "level", w);
            j["squares"] = squares.size();
            if (squares.empty()) {
                j["components"] = 0;
                em.scalar(j, "area", Scalar(0));
                j["vertices"] = json::array();
                j["edges"] = json::array();
                detail::print(out, j, cfg.format);
                return 1;
            }
            UnionBoundary u = union_of_squares(std::move(squares));
            j["components"] = u.component_count;
            em.scalar(j, "area", u.area);
            j["vertex_count"] = u.vertices.size();
            json jv = json::array(), je = json::array();
            for (const auto& v : u.vertices) jv.push_back(em.vec(v));
            for (const auto& e : u.edges) je.push_back({em.vec(e.a), em.vec(e.b)});
            j["vertices"] = std::move(jv);
            j["edges"] = std::move(je);
            detail::print(out, j, cfg.format);
            return 0;
        }
        if (app.got_subcommand(gen_cmd)) {
            write_points(out, generate(cfg.n, cfg.dim ? cfg.dim : 3, cfg.dist, cfg.seed));
            return 0;
        }
        if (app.got_subcommand(bench_cmd)) {
            const std::size_t d = cfg.dim ? cfg.dim : 3;
            struct Row {
                std::size_t n;
                double seconds;
                SolveResult res;
            };
            auto one = [&](std::size_t k) {
                PointSet P = generate(cfg.sizes[k], d, "uniform", cfg.seed + k);
                auto t0 = std::chrono::steady_clock::now();
                SolveResult r = solve(P);
                std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                return Row{cfg.sizes[k], dt.count(), std::move(r)};
            };
            std::vector<Row> rows;
            for (std::size_t k = 0; k < cfg.sizes.size(); k += cfg.jobs) {
                std::vector<std::future<Row>> batch;
                for (std::size_t b = k; b < std::min(cfg.sizes.size(), k + cfg.jobs); ++b)
                    batch.push_back(std::async(std::launch::async, one, b));
                for (auto& f : batch) rows.push_back(f.get());
            }
            if (cfg.format == "json") {
                json j = json::array();
                for (const auto& r : rows) {
                    json row{{"n", r.n}, {"seconds", r.seconds}};
                    em.scalar(row, "width", r.res.width());
                    row["case"] = to_string(r.res.tag);
                    j.push_back(std::move(row));
                }
                out << j.dump(2) << '\n';
            } else {
                out << "n\tseconds\twidth\tcase\n";
                for (const auto& r : rows)
                    out << r.n << '\t' << r.seconds << '\t' << em.text(r.res.width()) << '\t' << to_string(r.res.tag)
                        << '\n';
            }
            return 0;
        }
        if (app.got_subcommand(render_cmd)) {
            PointSet P = load();
            SolveResult r = solve(P);
            std::ofstream f(cfg.svg_path);
            if (!f) throw UsageError("cannot write '" + cfg.svg_path + "'");
            render_svg(f, P, r);
            json j;
            j["svg"] = cfg.svg_path;
            em.scalar(j, "width", r.width());
            detail::print(out, j, cfg.format);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace cubeshell::cli
