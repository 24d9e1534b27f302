#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pmod/pmod.hpp"

using namespace pmod;

namespace {

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    return in;
}

WeightedPoset load_poset(const std::string& path) {
    auto in = open_file(path);
    return parse_poset(in);
}

Barcode load_barcode(const std::string& path, const WeightedPoset& P) {
    auto in = open_file(path);
    return parse_barcode(in, P);
}

ContinuousBarcode load_continuous(const std::string& path) {
    auto in = open_file(path);
    return parse_continuous(in);
}

Metric metric_from_name(const std::string& name) {
    if (name == "l1") return Metric::L1;
    if (name == "linf") return Metric::LInf;
    if (name == "euclidean-sq") return Metric::EuclideanSquared;
    throw ValidationError("unknown metric: " + name);
}

PointCloud load_cloud(const std::string& path, const std::string& metric) {
    auto in = open_file(path);
    return parse_cloud(in, metric_from_name(metric));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interleaving and bottleneck distances for persistence modules over weighted chains"};
    app.require_subcommand(1);

    std::string poset_file, left_file, right_file, barcode_file, cloud_file;
    std::string metric = "linf";
    std::string eps_str, b_str;
    bool exact_oracle = false;
    int steps = 4;
    uint64_t cap = kDefaultBruteCap;

    auto* dist = app.add_subcommand("dist", "Interleaving distance between barcodes");
    dist->add_option("--poset", poset_file)->required();
    dist->add_option("--left", left_file)->required();
    dist->add_option("--right", right_file)->required();
    dist->add_flag("--exact-oracle", exact_oracle, "Force the brute-force representation oracle");
    dist->add_option("--cap", cap, "Brute-force search cap");

    auto* bott = app.add_subcommand("bottleneck", "Bottleneck distance with a witness matching");
    bott->add_option("--poset", poset_file)->required();
    bott->add_option("--left", left_file)->required();
    bott->add_option("--right", right_file)->required();

    auto* widthc = app.add_subcommand("width", "Widths of the bars of a barcode");
    widthc->add_option("--poset", poset_file)->required();
    widthc->add_option("--barcode", barcode_file)->required();

    auto* actc = app.add_subcommand("act", "Apply the maximal translation of height eps to a barcode");
    actc->add_option("--poset", poset_file)->required();
    actc->add_option("--barcode", barcode_file)->required();
    actc->add_option("--eps", eps_str)->required();

    auto* shiftc = app.add_subcommand("shift", "Print the shift refinement Sh(X)");
    shiftc->add_option("--poset", poset_file)->required();

    auto* sdist = app.add_subcommand("shifted-dist", "Bottleneck distance over the shift refinement");
    sdist->add_option("--poset", poset_file)->required();
    sdist->add_option("--left", left_file)->required();
    sdist->add_option("--right", right_file)->required();

    auto* reg = app.add_subcommand("regular", "Regularity report for the poset");
    reg->add_option("--poset", poset_file)->required();

    auto* cex = app.add_subcommand("counterexample", "Interleaving whose induced matching has larger height");
    cex->add_option("--poset", poset_file)->required();

    auto* limit = app.add_subcommand("limit", "Refinement limit experiment for continuous barcodes");
    limit->add_option("--left", left_file)->required();
    limit->add_option("--right", right_file)->required();
    limit->add_option("--steps", steps, "Number of mesh halvings");
    limit->add_option("--b", b_str, "Suspension edge weight");

    auto* h0c = app.add_subcommand("h0", "Single-linkage H0 barcode of a point cloud");
    h0c->add_option("--cloud", cloud_file)->required();
    h0c->add_option("--metric", metric, "l1, linf or euclidean-sq");

    auto* jumpsc = app.add_subcommand("jumps", "Jump discontinuities of a point cloud");
    jumpsc->add_option("--cloud", cloud_file)->required();
    jumpsc->add_option("--metric", metric, "l1, linf or euclidean-sq");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dist->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            Barcode B1 = load_barcode(left_file, P), B2 = load_barcode(right_file, P);
            std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
            if (!exact_oracle && e1.size() == 1 && e2.size() == 1) {
                std::cout << format_rational(pairwise_distance(P, e1[0], e2[0])) << "\n";
            } else {
                Rat d = interleaving_distance_bruteforce(P, rep_from_barcode(P, B1), rep_from_barcode(P, B2), cap);
                std::cout << format_rational(d) << "\n";
            }
        } else if (bott->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            Barcode B1 = load_barcode(left_file, P), B2 = load_barcode(right_file, P);
            auto [d, m] = bottleneck_distance(P, B1, B2);
            print_matching_report(std::cout, P, m, B1, B2);
        } else if (widthc->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            for (const auto& iv : expand_barcode(load_barcode(barcode_file, P)))
                std::cout << format_rational(P.coord(iv.lo)) << " " << format_rational(P.coord(iv.hi))
                          << " width=" << format_rational(width(P, iv)) << "\n";
        } else if (actc->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            Barcode B = load_barcode(barcode_file, P);
            print_barcode(std::cout, P, act_barcode(P, B, maximal_translation(P, parse_rational(eps_str))));
        } else if (shiftc->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            for (const Rat& x : shift_refinement(P.points())) std::cout << format_rational(x) << "\n";
        } else if (sdist->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            Barcode B1 = load_barcode(left_file, P), B2 = load_barcode(right_file, P);
            std::cout << format_rational(shifted_distance(P.points(), B1, B2, P.b())) << "\n";
        } else if (reg->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            auto r = is_regular(P.points());
            if (r.regular)
                std::cout << "REGULAR\n";
            else
                std::cout << "IRREGULAR at i=" << r.witness->i << " l=" << r.witness->l << "\n";
        } else if (cex->parsed()) {
            WeightedPoset P = load_poset(poset_file);
            auto r = is_regular(P.points());
            if (r.regular) throw ValidationError("poset is regular: no counterexample exists");
            auto witnesses = all_irregularity_witnesses(P.points());
            const IrregularityWitness* w = nullptr;
            for (const auto& cand : witnesses)
                if (cand.cond_c) {
                    w = &cand;
                    break;
                }
            if (!w) throw ValidationError("no irregularity witness satisfies condition (c)");
            auto cx = counterexample_from_irregularity(P.points(), *w);
            auto fmt = [&](const Interval& iv) {
                return format_rational(P.coord(iv.lo)) + "," + format_rational(P.coord(iv.hi));
            };
            std::cout << "A " << fmt(cx.A) << "\nC " << fmt(cx.C) << "\nD " << fmt(cx.D) << "\neps "
                      << format_rational(cx.eps) << "\n";
            auto m = induced_matching_triangle(P, cx.repA, cx.repCD, cx.phi, cx.psi, cx.lam);
            Barcode BA{{cx.A, 1}}, BCD = canonical_barcode({{cx.C, 1}, {cx.D, 1}});
            std::cout << "induced-height " << format_rational(matching_height(P, m, BA, BCD)) << "\n";
            std::cout << "bottleneck " << format_rational(bottleneck_distance(P, BA, BCD).first) << "\n";
        } else if (limit->parsed()) {
            ContinuousBarcode B1 = load_continuous(left_file), B2 = load_continuous(right_file);
            std::vector<Rat> L;
            for (const auto* B : {&B1, &B2})
                for (const auto& bar : *B) {
                    L.push_back(bar.r);
                    if (bar.death) L.push_back(*bar.death);
                }
            if (L.empty()) throw ValidationError("limit experiment needs at least one bar");
            auto sched = midpoint_schedule(L, steps);
            Rat b = b_str.empty() ? WeightedPoset::default_b(sched.base) : parse_rational(b_str);
            print_limit_table(std::cout, limit_experiment(B1, B2, sched, b));
        } else if (h0c->parsed()) {
            print_continuous(std::cout, h0_barcode(load_cloud(cloud_file, metric)));
        } else if (jumpsc->parsed()) {
            for (const Rat& d : jump_discontinuities(load_cloud(cloud_file, metric)))
                std::cout << format_rational(d) << "\n";
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
