#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "limitroots/classify.hpp"
#include "limitroots/gasket.hpp"
#include "limitroots/json_io.hpp"
#include "limitroots/limits.hpp"
#include "limitroots/render.hpp"

namespace lr = limitroots;

namespace {

struct Options {
    std::string diagram_path;
    std::string out_path;
    std::string window = "0:0";
    std::string levels;
    std::string mode = "intrinsic";
    std::string angles = "90,210,330";
    double eps = 0.1;
    double tol = 1e-9;
    std::size_t budget = lr::kDefaultBudget;
    int max_depth = 4;
    int generations = 4;
    int size_px = 800;
    int threads = 1;
    bool pretty = false;
    bool k_region = false;
    bool hyperplanes = false;
};

void emit(const lr::ordered_json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

void emit_error(const char* kind, const std::string& message) {
    lr::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

std::array<int, 2> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw lr::InputError("window must be LO:HI, got '" + text + "'");
    try {
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        if (lo < 0 || lo > hi) throw lr::InputError("window must satisfy 0 <= LO <= HI");
        return {lo, hi};
    } catch (const lr::InputError&) {
        throw;
    } catch (...) {
        throw lr::InputError("window must be LO:HI, got '" + text + "'");
    }
}

std::vector<lr::LevelWindows> parse_levels(const std::string& text) {
    std::vector<lr::LevelWindows> levels;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw lr::InputError("empty level in --levels");
        const auto w = parse_window(piece);
        levels.push_back({w, w});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (levels.empty()) throw lr::InputError("--levels must list at least one window");
    return levels;
}

std::array<Eigen::Vector2d, 3> parse_angles(const std::string& text) {
    std::array<double, 3> deg{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const auto comma = text.find(',', pos);
        const bool last = (i == 2);
        if (!last && comma == std::string::npos)
            throw lr::InputError("--angles must be three comma-separated degrees");
        const std::string piece =
            text.substr(pos, last ? std::string::npos : comma - pos);
        try {
            deg[static_cast<std::size_t>(i)] = std::stod(piece);
        } catch (...) {
            throw lr::InputError("bad angle '" + piece + "'");
        }
        pos = comma + 1;
    }
    std::array<Eigen::Vector2d, 3> pts;
    for (int i = 0; i < 3; ++i) {
        const double rad = deg[static_cast<std::size_t>(i)] * M_PI / 180.0;
        pts[static_cast<std::size_t>(i)] = {std::cos(rad), std::sin(rad)};
    }
    return pts;
}

lr::GramMatrix load_gram(const std::string& path) {
    return lr::GramMatrix::from_diagram(lr::parse_diagram_file(path));
}

int run(const std::string& command, const Options& opt) {
    if (command == "classify") {
        const auto diagram = lr::parse_diagram_file(opt.diagram_path);
        const auto G = lr::GramMatrix::from_diagram(diagram);
        auto c = lr::classify(G, opt.tol);
        c.irreducible = lr::is_irreducible(diagram);
        emit(lr::classification_json(c), opt.pretty);
    } else if (command == "roots") {
        const auto G = load_gram(opt.diagram_path);
        const auto roots = lr::generate_roots(G, opt.max_depth, opt.budget);
        emit(lr::roots_json(G, opt.max_depth, roots), opt.pretty);
    } else if (command == "limits") {
        const auto G = load_gram(opt.diagram_path);
        const auto w = parse_window(opt.window);
        emit(lr::point_cloud_json(lr::limit_root_sample(G, w[0], w[1], opt.budget)),
             opt.pretty);
    } else if (command == "orbit") {
        const auto G = load_gram(opt.diagram_path);
        const auto w = parse_window(opt.window);
        emit(lr::point_cloud_json(lr::limit_set_sample(G, w[0], w[1], opt.budget)),
             opt.pretty);
    } else if (command == "verify") {
        const auto G = load_gram(opt.diagram_path);
        const auto report = lr::verify_limit_equality(G, parse_levels(opt.levels), opt.eps,
                                                      opt.budget, opt.threads);
        emit(lr::comparison_report_json(report), opt.pretty);
    } else if (command == "gasket") {
        lr::GasketScene scene;
        if (opt.mode == "rank4") {
            scene = lr::rank4_gasket(opt.generations, opt.budget);
        } else if (opt.mode == "intrinsic") {
            const auto pts = parse_angles(opt.angles);
            scene = lr::intrinsic_gasket(pts[0], pts[1], pts[2], opt.generations, opt.budget);
        } else {
            throw lr::InputError("gasket mode must be 'intrinsic' or 'rank4'");
        }
        if (!opt.out_path.empty()) {
            std::ofstream out(opt.out_path, std::ios::binary);
            if (!out) throw lr::InputError("cannot write " + opt.out_path);
            out << lr::render_svg(lr::scene_from_gasket(scene), opt.size_px);
        }
        emit(lr::gasket_scene_json(scene), opt.pretty);
    } else if (command == "render") {
        const auto G = load_gram(opt.diagram_path);
        const auto w = parse_window(opt.window);
        lr::SceneOptions options;
        options.k_region = opt.k_region;
        options.hyperplanes = opt.hyperplanes;
        options.budget = opt.budget;
        const auto scene = lr::scene_from_system(G, w[0], w[1], options);
        const std::string svg = lr::render_svg(scene, opt.size_px);
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw lr::InputError("cannot write " + opt.out_path);
        out << svg;
        out.close();
        lr::ordered_json j;
        j["out"] = opt.out_path;
        j["size_px"] = opt.size_px;
        j["layers"] = scene.layers.size();
        j["bytes"] = svg.size();
        emit(j, opt.pretty);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root systems of Coxeter groups in Lorentzian space: limit roots, "
                 "limit sets, classification and Apollonian gaskets"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    app.add_option("--threads", opt.threads, "worker thread cap")->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget, "element budget for enumerations")
        ->check(CLI::PositiveNumber);

    auto* classify = app.add_subcommand("classify", "classify a root system");
    classify->add_option("file", opt.diagram_path, "diagram file")->required();
    classify->add_option("--tol", opt.tol, "eigenvalue tolerance")->check(CLI::PositiveNumber);

    auto* roots = app.add_subcommand("roots", "enumerate positive roots");
    roots->add_option("file", opt.diagram_path, "diagram file")->required();
    roots->add_option("--max-depth", opt.max_depth, "depth cutoff")->check(CLI::NonNegativeNumber);

    auto* limits = app.add_subcommand("limits", "sample normalized roots in a depth window");
    limits->add_option("file", opt.diagram_path, "diagram file")->required();
    limits->add_option("--window", opt.window, "depth window LO:HI")->required();

    auto* orbit = app.add_subcommand("orbit", "sample the orbit of the imaginary point");
    orbit->add_option("file", opt.diagram_path, "diagram file")->required();
    orbit->add_option("--window", opt.window, "word-length window LO:HI")->required();

    auto* verify = app.add_subcommand(
        "verify", "compare the limit-root and limit-set samples across levels");
    verify->add_option("file", opt.diagram_path, "diagram file")->required();
    verify->add_option("--levels", opt.levels, "comma-separated windows, e.g. 8:10,12:14")
        ->required();
    verify->add_option("--eps", opt.eps, "final Hausdorff threshold")
        ->check(CLI::PositiveNumber);

    auto* gasket = app.add_subcommand("gasket", "generate an Apollonian gasket scene");
    gasket->add_option("--mode", opt.mode, "intrinsic | rank4");
    gasket->add_option("--gen", opt.generations, "orbit generations")
        ->check(CLI::NonNegativeNumber);
    gasket->add_option("--angles", opt.angles, "boundary points in degrees (intrinsic mode)");
    gasket->add_option("--out", opt.out_path, "optional SVG output path");
    gasket->add_option("--size", opt.size_px, "SVG size in pixels");

    auto* render = app.add_subcommand("render", "render a chart picture to SVG");
    render->add_option("file", opt.diagram_path, "diagram file")->required();
    render->add_option("--window", opt.window, "depth window LO:HI")->required();
    render->add_option("--out", opt.out_path, "SVG output path")->required();
    render->add_flag("--k", opt.k_region, "draw the K region");
    render->add_flag("--hyperplanes", opt.hyperplanes, "draw hyperplane traces");
    render->add_option("--size", opt.size_px, "SVG size in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const lr::InputError& e) {
        emit_error("input", e.what());
        return 1;
    } catch (const lr::BudgetError& e) {
        emit_error("budget", e.what());
        return 3;
    } catch (const lr::NumericError& e) {
        emit_error("numeric", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
}
