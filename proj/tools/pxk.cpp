// pxk: analyze finite simplicial complexes and simple polytopes.
//
// Exit codes: 0 success; 1 invalid input; 2 internal cross-check failure
// (two independently computed results that must agree by construction did
// not — never caused by bad input).

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pxk/builders.hpp"
#include "pxk/coloring.hpp"
#include "pxk/errors.hpp"
#include "pxk/io.hpp"
#include "pxk/report.hpp"

namespace {

using namespace pxk;

struct Options {
    std::string format = "text";
    std::string out;
};

void emit(const Options& opt, const Report& rep) {
    const std::string& body = opt.format == "json" ? rep.json : rep.text;
    if (opt.out.empty())
        std::cout << body;
    else
        io::write_file(opt.out, body);
}

void emit_payload(const Options& opt, const std::string& payload) {
    if (opt.out.empty())
        std::cout << payload;
    else
        io::write_file(opt.out, payload);
}

int parse_base_facet(const SimplicialComplex& c, const std::string& spec) {
    std::string s = spec;
    for (char& ch : s)
        if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
    std::istringstream in(s);
    std::vector<Label> verts;
    std::string tok;
    while (in >> tok) verts.push_back(Label::parse(tok));
    if (verts.empty()) throw ValidationError("empty base facet");
    int idx = c.facet_index(Simplex::of(std::move(verts)));
    if (idx < 0) throw ValidationError("base facet " + spec + " is not a facet");
    return idx;
}

int run_analyze(const std::vector<std::string>& files, const std::string& base,
                const Options& opt, int jobs) {
    if (files.size() > 1 && !opt.out.empty())
        throw ValidationError("-o is only valid with a single input file");

    std::vector<Report> reports(files.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> invalid{false};
    std::vector<std::string> errors(files.size());

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size();
             i = next.fetch_add(1)) {
            try {
                SimplicialComplex c = io::read_complex(files[i]);
                int b = base.empty() ? -1 : parse_base_facet(c, base);
                reports[i] = analyze_complex(c, b);
            } catch (const ValidationError& e) {
                invalid = true;
                errors[i] = e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < n - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool theorem_ok = true;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (files.size() > 1) std::cout << "== " << files[i] << " ==\n";
        if (!errors[i].empty()) {
            std::cerr << "error: " << files[i] << ": " << errors[i] << "\n";
            continue;
        }
        emit(opt, reports[i]);
        theorem_ok = theorem_ok && reports[i].theorem_ok;
    }
    if (!theorem_ok) return 2;
    return invalid ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-of-projectivities toolkit for simplicial complexes "
                 "and simple polytopes"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("-o,--out", opt.out, "write output to a file");

    // analyze
    std::vector<std::string> files;
    std::string base_facet;
    int jobs = 1;
    auto* analyze = app.add_subcommand("analyze", "full report on complex files");
    analyze->add_option("files", files, "complex files")->required();
    analyze->add_option("--base", base_facet,
                        "base facet, e.g. \"1,2,4\" (default: least facet)");
    analyze->add_option("--jobs", jobs, "analyze files concurrently")
        ->check(CLI::Range(1, 256));

    // polytope
    std::string poly_file, base_vertex;
    auto* polytope = app.add_subcommand("polytope", "full report on a polytope file");
    polytope->add_option("file", poly_file, "polytope JSON file")->required();
    polytope->add_option("--base", base_vertex,
                         "base vertex label (default: least vertex)");

    // color
    std::string color_file;
    auto* color = app.add_subcommand("color", "balancedness report on a complex file");
    color->add_option("file", color_file, "complex file")->required();

    // join
    std::string join_a, join_b;
    auto* join_cmd = app.add_subcommand("join", "join two complexes");
    join_cmd->add_option("left", join_a, "complex file")->required();
    join_cmd->add_option("right", join_b, "complex file")->required();

    // sd
    std::string sd_file;
    auto* sd_cmd = app.add_subcommand("sd", "barycentric subdivision of a complex");
    sd_cmd->add_option("file", sd_file, "complex file")->required();

    // gen
    std::string gen_name;
    std::vector<std::int64_t> gen_params;
    auto* gen = app.add_subcommand("gen", "generate a named complex or polytope");
    gen->add_option("name", gen_name, "builder name")->required();
    gen->add_option("params", gen_params, "builder parameters");

    // path
    std::string path_complex, path_file, loops_file;
    auto* path_cmd = app.add_subcommand(
        "path", "projectivity along a facet path of a complex");
    path_cmd->add_option("complex", path_complex, "complex file")->required();
    path_cmd->add_option("path", path_file, "path JSON file")->required();
    path_cmd->add_option("--verify-generation", loops_file,
                         "check that these loops generate the whole group");

    // Let --format/-o appear after the subcommand as well as before it.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(files, base_facet, opt, jobs);

        if (*polytope) {
            SimplePolytope p = io::read_polytope(poly_file);
            int b = -1;
            if (!base_vertex.empty()) {
                b = p.vertex_index(Label::parse(base_vertex));
                if (b < 0)
                    throw ValidationError("base vertex " + base_vertex +
                                          " is not a vertex");
            }
            Report rep = analyze_polytope(p, b);
            emit(opt, rep);
            return rep.theorem_ok ? 0 : 2;
        }

        if (*color) {
            Report rep = color_complex(io::read_complex(color_file));
            emit(opt, rep);
            return rep.theorem_ok ? 0 : 2;
        }

        if (*join_cmd) {
            JoinResult jr = join(io::read_complex(join_a), io::read_complex(join_b));
            emit_payload(opt, opt.format == "json"
                                  ? io::write_complex_json(jr.complex)
                                  : io::write_complex_lines(jr.complex));
            return 0;
        }

        if (*sd_cmd) {
            SdResult sr = barycentric_subdivision(io::read_complex(sd_file));
            emit_payload(opt, opt.format == "json"
                                  ? io::write_complex_json(sr.complex)
                                  : io::write_complex_lines(sr.complex));
            return 0;
        }

        if (*gen) {
            if (gen_name == "random_pure") {
                if (const char* env = std::getenv("PXK_SEED")) {
                    std::int64_t seed = std::strtoll(env, nullptr, 10);
                    if (gen_params.size() == 3)
                        gen_params[2] = seed;
                    else if (gen_params.size() == 2)
                        gen_params.push_back(seed);
                }
            }
            builders::Generated g = builders::make(gen_name, gen_params);
            if (g.complex)
                emit_payload(opt, opt.format == "json"
                                      ? io::write_complex_json(*g.complex)
                                      : io::write_complex_lines(*g.complex));
            else
                emit_payload(opt, io::write_polytope_json(*g.polytope));
            return 0;
        }

        if (*path_cmd) {
            SimplicialComplex c = io::read_complex(path_complex);
            FacetPath fp = io::read_path(path_file, c);
            Projectivity pr = projectivity(c, fp);

            nlohmann::json j;
            j["schema_version"] = report_schema_version;
            j["kind"] = "path";
            j["digest"] = io::fnv1a_hex(io::write_complex_lines(c));
            j["source"] = c.facet(fp.source()).str();
            j["target"] = c.facet(fp.target()).str();
            j["length"] = fp.length();
            j["loop"] = fp.is_loop();
            nlohmann::json m;
            for (const auto& [from, to] : pr.as_map(c)) m[from.str()] = to.str();
            j["map"] = std::move(m);
            j["cycle"] = fp.is_loop()
                             ? nlohmann::json(cycle_string(
                                   pr.as_permutation(),
                                   c.facet(fp.source()).vertices()))
                             : nlohmann::json(nullptr);

            std::ostringstream text;
            text << j["source"].get<std::string>() << " -> "
                 << j["target"].get<std::string>() << "  length "
                 << fp.length() << "\nmap:";
            for (const auto& [from, to] : pr.as_map(c))
                text << " " << from.str() << "->" << to.str();
            text << "\n";
            if (fp.is_loop())
                text << "cycle: " << j["cycle"].get<std::string>() << "\n";

            bool generates = true;
            if (!loops_file.empty()) {
                std::vector<FacetPath> loops = io::read_loops(loops_file, c);
                for (const auto& lp : loops)
                    if (!lp.is_loop() || lp.source() != fp.source())
                        throw ValidationError(
                            "generation loops must be closed at the path source");
                generates = verify_generation(c, fp.source(), loops);
                j["generates"] = generates;
                text << "loops generate pi: " << (generates ? "yes" : "no")
                     << "\n";
            } else {
                j["generates"] = nullptr;
            }

            Report rep;
            rep.json = j.dump(2) + "\n";
            rep.text = j["kind"].get<std::string>() + "  digest=" +
                       j["digest"].get<std::string>() + "\n" + text.str();
            emit(opt, rep);
            return generates ? 0 : 2; // a disproved claim is a reportable failure
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TheoremViolation& e) {
        std::cerr << "internal cross-check failed: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
