// bigrade: bigraded ideal computations on P^n x P^m.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bigrade/parse.hpp"
#include "bigrade/report.hpp"

using namespace bigrade;

namespace {

struct Options {
    std::string input;
    std::string order = "x<y";
    std::string field = "qq";
    std::uint64_t seed = 42;
    std::string box;
    std::string format = "text";
    std::string svg;
    bool allow_inhomogeneous = false;
    std::string by = "b";       // sat
    std::string at;             // certify --at a:b
    bool shift = false;         // plot --shift
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "ideal file ('-' for stdin)")->required();
    cmd->add_option("--order", opt.order, "block order: x<y or y<x")
        ->check(CLI::IsMember({"x<y", "y<x"}));
    cmd->add_option("--field", opt.field, "coefficients: qq or fp:<prime>");
    cmd->add_option("--seed", opt.seed, "seed for generic coordinate changes");
    cmd->add_option("--box", opt.box, "bidegree box A:B for tables and plots");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--svg", opt.svg, "also write an SVG plot to this path");
    cmd->add_flag("--allow-inhomogeneous", opt.allow_inhomogeneous,
                  "accept generators that are not bihomogeneous");
}

Bidegree parse_box(const std::string& s, Bidegree dflt) {
    if (s.empty()) return dflt;
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw parse_error("expected <A>:<B> in box spec '" + s + "'", 0, 0);
    try {
        int a = std::stoi(s.substr(0, colon));
        int b = std::stoi(s.substr(colon + 1));
        if (a < 0 || b < 0) throw std::invalid_argument("negative");
        return {a, b};
    } catch (const std::logic_error&) {
        throw parse_error("bad box spec '" + s + "'", 0, 0);
    }
}

BlockOrder block_order(const Options& opt) {
    return opt.order == "x<y" ? BlockOrder::XBlockLow : BlockOrder::YBlockLow;
}

Ideal load(const Options& opt) {
    FieldSpec f = parse_field_spec(opt.field);
    if (opt.input == "-")
        return parse_ideal_stream(std::cin, f, block_order(opt),
                                  opt.allow_inhomogeneous).ideal;
    return parse_ideal_file(opt.input, f, block_order(opt),
                            opt.allow_inhomogeneous).ideal;
}

// All generators are monomials already: reuse them as a monomial ideal
// without a coordinate change.
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.generators) {
        if (g.size() != 1) return std::nullopt;
        gens.push_back(g.leading_monomial());
    }
    return MonomialIdeal(I.ring, std::move(gens));
}

void emit(const Options& opt, nlohmann::json& report, const std::string& text,
          const std::optional<PlotSpec>& plot,
          std::chrono::steady_clock::time_point t0) {
    report["seed"] = opt.seed;
    report["order"] = opt.order;
    report["field"] = opt.field;
    // Timing goes to stderr so the JSON report stays byte-identical for
    // identical inputs.
    std::cerr << "# elapsed "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                     .count()
              << "s\n";
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
    if (!opt.svg.empty()) {
        if (!plot) throw contract_error("this command has nothing to plot");
        std::ofstream out(opt.svg);
        if (!out) throw contract_error("cannot write '" + opt.svg + "'");
        out << render_svg(*plot);
    }
}

nlohmann::json bidegrees_json(const std::vector<Bidegree>& ds) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& d : ds) a.push_back(to_json(d));
    return a;
}

int run(const std::string& cmd, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    nlohmann::json report;
    report["command"] = cmd;
    std::string text;
    std::optional<PlotSpec> plot;

    Ideal I = load(opt);

    if (cmd == "gb") {
        GroebnerBasis G = reduced_basis(I);
        nlohmann::json els = nlohmann::json::array();
        for (const auto& g : G.elements) {
            els.push_back(g.str());
            text += g.str() + "\n";
        }
        report["basis"] = els;
    } else if (cmd == "mingens") {
        auto M = as_monomial_ideal(I);
        if (!M) throw contract_error("mingens expects monomial generators");
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : M->min_gens()) {
            gens.push_back(g.str(I.ring));
            text += g.str(I.ring) + "  " + g.bidegree().str() + "\n";
        }
        report["minimal_generators"] = gens;
        report["bidegrees"] = bidegrees_json(M->gen_bidegrees());
        plot = PlotSpec{parse_box(opt.box, {10, 10}), M->gen_bidegrees(), {}};
    } else if (cmd == "bigin") {
        BiginResult b = bigin(I, block_order(opt), opt.seed);
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : b.ideal.min_gens()) {
            gens.push_back(g.str(I.ring));
            text += g.str(I.ring) + "  " + g.bidegree().str() + "\n";
        }
        report["minimal_generators"] = gens;
        report["bidegrees"] = bidegrees_json(b.ideal.gen_bidegrees());
        report["seeds"] = {b.seed1, b.seed2};
        report["stable"] = b.stable;
        plot = PlotSpec{parse_box(opt.box, {10, 10}), b.ideal.gen_bidegrees(), {}};
    } else if (cmd == "hf") {
        Bidegree box = parse_box(opt.box, {10, 10});
        auto M = as_monomial_ideal(I);
        if (!M) M = initial_ideal(I);
        nlohmann::json rows = nlohmann::json::array();
        // b decreasing so the table prints with b upwards.
        for (int b = box.b; b >= 0; --b) {
            nlohmann::json row = nlohmann::json::array();
            text += "b=" + std::to_string(b) + ":";
            for (int a = 0; a <= box.a; ++a) {
                long v = hilbert_function(*M, {a, b});
                row.push_back(v);
                text += " " + std::to_string(v);
            }
            rows.insert(rows.begin(), row);  // row index = b
            text += "\n";
        }
        text += "a:  ";
        for (int a = 0; a <= box.a; ++a) text += " " + std::to_string(a);
        text += "\n";
        report["box"] = to_json(box);
        report["hilbert_function"] = rows;
    } else if (cmd == "sat") {
        Ideal S(I.ring);
        if (opt.by == "b")
            S = saturate(I, SaturationMode::ByB);
        else if (opt.by == "mx")
            S = saturate(I, SaturationMode::ByMx);
        else if (opt.by == "my")
            S = saturate(I, SaturationMode::ByMy);
        else if (opt.by.rfind("poly:", 0) == 0)
            S = saturate_poly(I, parse_polynomial(opt.by.substr(5), I.ring));
        else
            throw parse_error("--by must be b, mx, my or poly:<expr>", 0, 0);
        S = Ideal(I.ring, reduced_basis(S).elements);
        text = print_ideal(S);
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : S.generators) gens.push_back(g.str());
        report["by"] = opt.by;
        report["generators"] = gens;
    } else if (cmd == "reg-empty") {
        Region r = reg_empty(I);
        text = "reg = " + r.str() + "\n";
        report["region"] = to_json(r);
        plot = PlotSpec{parse_box(opt.box, {10, 10}), {}, {{"reg", r}}};
    } else if (cmd == "xreg") {
        Region r = xreg_of_ideal(I, opt.seed);
        text = "xreg = " + r.str() + "\n";
        report["region"] = to_json(r);
        plot = PlotSpec{parse_box(opt.box, {10, 10}), {}, {{"xreg", r}}};
    } else if (cmd == "xtor") {
        BiginResult b = bigin(I, block_order(opt), opt.seed);
        int xt = xtor(b.ideal), yt = ytor(b.ideal);
        text = "xtor = " + std::to_string(xt) + "\nytor = " + std::to_string(yt) + "\n";
        report["xtor"] = xt;
        report["ytor"] = yt;
    } else if (cmd == "certify") {
        BiginResult b = bigin(I, BlockOrder::XBlockLow, opt.seed);
        Region r = xreg_region(b.ideal);
        report["region"] = to_json(r);
        nlohmann::json certs = nlohmann::json::array();
        if (!opt.at.empty()) {
            Bidegree d = parse_box(opt.at, {0, 0});
            Certificate c = certify_exact(b.ideal, d);
            certs.push_back(to_json(c, I.ring));
            text += "generator at " + d.str() + ": " + (c.verdict ? "yes" : "no");
            if (c.witness) text += " (witness " + c.witness->str(I.ring) + ")";
            text += "\n";
        } else {
            Certificate abs = certify_absence(b.ideal, r);
            certs.push_back(to_json(abs, I.ring));
            text += "absence: no minimal generator in " + abs.region.str() + "\n";
            for (const auto& c : certify_presence(b.ideal, r)) {
                certs.push_back(to_json(c, I.ring));
                text += "presence: generator " + c.witness->str(I.ring) +
                        " certified for corner " + c.bidegree->str() + "\n";
            }
        }
        report["certificates"] = certs;
    } else if (cmd == "plot") {
        BiginResult b = bigin(I, BlockOrder::XBlockLow, opt.seed);
        Region r = xreg_region(b.ideal);
        PlotSpec spec;
        spec.box = parse_box(opt.box, {10, 10});
        spec.generator_dots = b.ideal.gen_bidegrees();
        if (opt.shift)
            spec.regions.push_back({"xreg+(1,0)", r.shift({1, 0})});
        else
            spec.regions.push_back({"xreg", r});
        report["region"] = to_json(r);
        report["bidegrees"] = bidegrees_json(spec.generator_dots);
        if (opt.svg.empty()) {
            text = render_svg(spec);
        } else {
            text = "xreg = " + r.str() + "\n";
        }
        plot = spec;
    }

    emit(opt, report, text, plot, t0);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bigraded ideal computations on P^n x P^m"};
    app.require_subcommand(1);
    Options opt;
    std::string chosen;

    for (const char* name : {"gb", "bigin", "mingens", "hf", "sat", "reg-empty",
                             "xreg", "xtor", "certify", "plot"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, opt);
        if (std::string(name) == "sat")
            sub->add_option("--by", opt.by, "saturate by b, mx, my or poly:<expr>");
        if (std::string(name) == "certify")
            sub->add_option("--at", opt.at, "test one bidegree a:b exactly");
        if (std::string(name) == "plot")
            sub->add_flag("--shift", opt.shift, "shade xreg shifted by (1,0)");
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(chosen, opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const genericity_error& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return 4;
    } catch (const contradiction_error& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
