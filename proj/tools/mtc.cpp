// Command-line front end: validate modular data, extract Picard groups,
// enumerate Schellekens algebras, evaluate torus partition functions and
// classify boundary conditions. All JSON output is deterministic.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/mtc.hpp"

namespace {

struct Options {
    std::string builtin;
    std::string input;
    std::optional<double> tol;
    bool json = false;
    std::string support;
    std::vector<std::string> ksb;
    std::string phi_path;
    bool act_by_picard = false;
};

mtc::ModularData load_input(const Options& opts) {
    if (opts.builtin.empty() == opts.input.empty())
        throw CLI::ValidationError("input", "exactly one of --builtin or --input is required");
    mtc::ModularData md =
        opts.builtin.empty() ? mtc::load_modular_data_file(opts.input)
                             : mtc::make_builtin(opts.builtin);
    if (opts.tol) {
        if (!(*opts.tol > 0))
            throw mtc::ParseError("--tol must be positive");
        md.tol = *opts.tol;
    }
    return md;
}

mtc::json report_to_json(const mtc::Report& report) {
    mtc::json checks = mtc::json::array();
    for (const auto& c : report.checks) {
        mtc::json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["residual"] = c.residual;
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return checks;
}

mtc::json matrix_to_json(const mtc::IntMatrix& z) {
    mtc::json rows = mtc::json::array();
    for (int i = 0; i < z.rows(); ++i) {
        mtc::json row = mtc::json::array();
        for (int j = 0; j < z.cols(); ++j)
            row.push_back(z(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Integer grid with label headers; non-self-conjugate labels are marked
// with their conjugate partner, e.g. "1~3".
std::string grid_string(const mtc::ModularData& md, const mtc::FusionTable& ft,
                        const mtc::RationalMatrix& z) {
    const int n = md.size();
    std::vector<std::string> headers;
    size_t width = 1;
    for (int j = 0; j < n; ++j) {
        std::string h = md.label(j);
        if (ft.conj(j) != j)
            h += "~" + md.label(ft.conj(j));
        width = std::max(width, h.size());
        headers.push_back(std::move(h));
    }
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < n; ++j) {
            const auto& e = z[static_cast<size_t>(i)][static_cast<size_t>(j)];
            row.push_back(denominator(e) == 1 ? numerator(e).str() : mtc::format_fraction(e));
            width = std::max(width, row.back().size());
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream out;
    out << std::string(width + 2, ' ');
    for (const auto& h : headers)
        out << std::setw(static_cast<int>(width) + 1) << h;
    out << '\n';
    for (int i = 0; i < n; ++i) {
        out << std::setw(static_cast<int>(width) + 2) << headers[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            out << std::setw(static_cast<int>(width) + 1)
                << cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
        out << '\n';
    }
    return out.str();
}

std::vector<int> parse_label_list(const std::string& text, int n_labels) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 0 || v >= n_labels)
                throw std::invalid_argument("out of range");
            out.push_back(v);
        } catch (const std::exception&) {
            throw mtc::ParseError("bad label '" + item + "' in list '" + text + "'");
        }
    }
    return out;
}

mtc::Subgroup parse_support(const mtc::PicardGroup& pg, const std::string& text, int n_labels) {
    std::vector<int> members = parse_label_list(text, n_labels);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0)
        members.insert(members.begin(), 0);
    mtc::Subgroup sub{&pg, members};
    for (int g : members) {
        if (!pg.is_invertible(g))
            throw mtc::DataError("support member " + std::to_string(g) + " is not invertible");
        if (!sub.contains(pg.inv(g)))
            throw mtc::DataError("support is not closed under inverses at " + std::to_string(g));
        for (int h : members)
            if (!sub.contains(pg.mul(g, h)))
                throw mtc::DataError("support is not closed: " + std::to_string(g) + "*" +
                                     std::to_string(h) + " falls outside");
    }
    return sub;
}

// "g,h=p/q" generator-pair assignments; unspecified pairs default to 1.
mtc::Bihomomorphism parse_ksb(const mtc::Subgroup& support,
                              const std::vector<std::string>& assignments) {
    const mtc::AbelianGroup hg = support.as_group();
    const auto& gens = hg.generators();
    const size_t r = gens.size();
    auto gen_index = [&](int label) -> size_t {
        for (size_t a = 0; a < r; ++a)
            if (support.members[static_cast<size_t>(gens[a])] == label)
                return a;
        throw mtc::ParseError("label " + std::to_string(label) +
                              " is not a generator of the support (generators: " +
                              [&] {
                                  std::string s;
                                  for (size_t a = 0; a < r; ++a) {
                                      if (a)
                                          s += ",";
                                      s += std::to_string(
                                          support.members[static_cast<size_t>(gens[a])]);
                                  }
                                  return s;
                              }() + ")");
    };

    std::vector<std::vector<mtc::RootOfUnity>> vals(r, std::vector<mtc::RootOfUnity>(r));
    for (const auto& chunk : assignments) {
        std::stringstream in(chunk);
        std::string item;
        while (std::getline(in, item, ';')) {
            if (item.empty())
                continue;
            const auto eq = item.find('=');
            const auto comma = item.find(',');
            if (eq == std::string::npos || comma == std::string::npos || comma > eq)
                throw mtc::ParseError("KSB assignment must look like g,h=p/q, got '" + item +
                                      "'");
            const int g = std::stoi(item.substr(0, comma));
            const int h = std::stoi(item.substr(comma + 1, eq - comma - 1));
            vals[gen_index(g)][gen_index(h)] = mtc::RootOfUnity::parse(item.substr(eq + 1));
        }
    }
    return mtc::Bihomomorphism(hg, support.members, std::move(vals));
}

bool satisfies_symmetrizer(const mtc::PicardGroup& pg, const mtc::Subgroup& support,
                           const mtc::Bihomomorphism& ksb) {
    for (int g : support.members)
        for (int h : support.members) {
            const mtc::RootOfUnity rhs =
                (pg.q(g) * pg.q(h)) / pg.q(pg.mul(g, h));
            if (!(ksb.eval_labels(g, h) * ksb.eval_labels(h, g) == rhs))
                return false;
        }
    return true;
}

mtc::json ksb_to_json(const mtc::Bihomomorphism& ksb) {
    mtc::json pairs = mtc::json::array();
    const auto& gens = ksb.group().generators();
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b)
            pairs.push_back(mtc::json::array(
                {ksb.labels()[static_cast<size_t>(gens[a])],
                 ksb.labels()[static_cast<size_t>(gens[b])],
                 ksb.generator_values()[a][b].str()}));
    return pairs;
}

mtc::PhiTable load_phi(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw mtc::ParseError("cannot open phi file '" + path + "'");
    mtc::json doc;
    try {
        in >> doc;
    } catch (const mtc::json::exception& e) {
        throw mtc::ParseError("invalid JSON in phi file: " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw mtc::ParseError("phi file must map orbit representatives to pair tables");
    mtc::PhiTable table;
    for (const auto& [key, value] : doc.items()) {
        int rep = 0;
        try {
            rep = std::stoi(key);
        } catch (const std::exception&) {
            throw mtc::ParseError("phi key '" + key + "' is not an orbit representative label");
        }
        if (!value.is_object() || !value.contains("pairs") || !value["pairs"].is_array())
            throw mtc::ParseError("phi entry '" + key + "' needs a \"pairs\" array");
        mtc::PhiPairs pairs;
        for (const auto& p : value["pairs"]) {
            if (!p.is_array() || p.size() != 3)
                throw mtc::ParseError("phi pair must be [g, h, \"p/q\"]");
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>(),
                               mtc::RootOfUnity::parse(p[2].get<std::string>()));
        }
        table[rep] = std::move(pairs);
    }
    return table;
}

int cmd_validate(const Options& opts) {
    const mtc::ModularData md = load_input(opts);
    const mtc::Report report = mtc::validate(md);
    if (opts.json) {
        mtc::json out;
        out["name"] = md.name;
        out["n"] = md.size();
        out["ok"] = report.ok();
        out["checks"] = report_to_json(report);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model " << md.name << " (" << md.size() << " simple objects)\n"
                  << report.summary()
                  << (report.ok() ? "VALID" : "INVALID") << '\n';
    }
    return report.ok() ? 0 : 1;
}

int cmd_picard(const Options& opts) {
    const mtc::ModularData md = load_input(opts);
    const mtc::FusionTable ft = mtc::fusion(md);
    const mtc::PicardGroup pg = mtc::picard_group(md, ft);

    mtc::json out;
    out["name"] = md.name;
    out["elements"] = pg.elements();
    mtc::json mul = mtc::json::array();
    for (int g : pg.elements()) {
        mtc::json row = mtc::json::array();
        for (int h : pg.elements())
            row.push_back(pg.mul(g, h));
        mul.push_back(std::move(row));
    }
    out["multiplication"] = std::move(mul);
    mtc::json gens = mtc::json::array();
    for (const auto& [label, order] : pg.generators())
        gens.push_back(mtc::json{{"element", label}, {"order", order}});
    out["generators"] = std::move(gens);
    mtc::json q = mtc::json::array();
    for (int g : pg.elements())
        q.push_back(pg.q(g).str());
    out["q"] = std::move(q);
    mtc::json action = mtc::json::array();
    for (int g : pg.elements()) {
        mtc::json row = mtc::json::array();
        for (int i = 0; i < pg.num_labels(); ++i)
            row.push_back(pg.act(g, i));
        action.push_back(std::move(row));
    }
    out["action"] = std::move(action);

    if (opts.json) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model " << md.name << ": Picard group of order " << pg.size() << "\n";
        std::cout << "elements:";
        for (int g : pg.elements())
            std::cout << " " << g;
        std::cout << "\ncyclic decomposition:";
        for (const auto& [label, order] : pg.generators())
            std::cout << " <" << label << "> of order " << order;
        if (pg.generators().empty())
            std::cout << " trivial";
        std::cout << "\nq exponents:";
        for (int g : pg.elements())
            std::cout << " q(" << g << ")=" << pg.q(g).str();
        std::cout << '\n';
    }
    return 0;
}

int cmd_enumerate(const Options& opts) {
    const mtc::ModularData md = load_input(opts);
    const mtc::FusionTable ft = mtc::fusion(md);
    const mtc::PicardGroup pg = mtc::picard_group(md, ft);
    const auto algebras = mtc::enumerate_schellekens(md, ft, pg);

    if (opts.json) {
        mtc::json out;
        out["name"] = md.name;
        out["count"] = algebras.size();
        mtc::json list = mtc::json::array();
        for (const auto& alg : algebras) {
            mtc::json entry;
            entry["support"] = alg.support.members;
            entry["ksb"] = ksb_to_json(alg.ksb);
            entry["Z"] = matrix_to_json(alg.z.z);
            entry["modular_invariant"] = alg.z.modular_invariant;
            entry["physical"] = alg.z.physical;
            if (alg.duplicate_of)
                entry["duplicate_of"] = *alg.duplicate_of;
            else
                entry["duplicate_of"] = nullptr;
            list.push_back(std::move(entry));
        }
        out["algebras"] = std::move(list);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model " << md.name << ": " << algebras.size()
                  << " Schellekens algebra(s)\n";
        for (size_t i = 0; i < algebras.size(); ++i) {
            const auto& alg = algebras[i];
            std::cout << "[" << i << "] support " << alg.support.describe() << "  Xi "
                      << alg.ksb.describe();
            if (alg.duplicate_of)
                std::cout << "  (same Z as [" << *alg.duplicate_of << "])";
            std::cout << '\n';
            mtc::RationalMatrix zq(static_cast<size_t>(alg.z.z.rows()),
                                   std::vector<mtc::Rational>(static_cast<size_t>(alg.z.z.cols())));
            for (int r = 0; r < alg.z.z.rows(); ++r)
                for (int c = 0; c < alg.z.z.cols(); ++c)
                    zq[static_cast<size_t>(r)][static_cast<size_t>(c)] = alg.z.z(r, c);
            std::cout << grid_string(md, ft, zq);
        }
    }
    return 0;
}

int cmd_torus(const Options& opts) {
    const mtc::ModularData md = load_input(opts);
    const mtc::FusionTable ft = mtc::fusion(md);
    const mtc::PicardGroup pg = mtc::picard_group(md, ft);
    const mtc::Subgroup support = parse_support(pg, opts.support, md.size());
    const mtc::Bihomomorphism ksb = parse_ksb(support, opts.ksb);
    const bool symmetrizer = satisfies_symmetrizer(pg, support, ksb);

    const mtc::RationalMatrix zq = mtc::ks_partition_function(md, ft, pg, support, ksb);
    const bool physical = mtc::is_physical(zq);
    const auto zi = mtc::to_integer_matrix(zq);
    std::optional<mtc::Report> invariance;
    if (zi)
        invariance = mtc::modular_invariance_report(md, *zi);
    const bool modular = invariance && invariance->ok();

    if (opts.json) {
        mtc::json out;
        out["name"] = md.name;
        out["support"] = support.members;
        out["ksb"] = ksb_to_json(ksb);
        out["symmetrizer_relation"] = symmetrizer;
        mtc::json rows = mtc::json::array();
        for (const auto& row : zq) {
            mtc::json r = mtc::json::array();
            for (const auto& e : row)
                r.push_back(denominator(e) == 1 ? numerator(e).str()
                                                : mtc::format_fraction(e));
            rows.push_back(std::move(r));
        }
        out["Z"] = std::move(rows);
        out["integral"] = zi.has_value();
        out["physical"] = physical;
        out["modular_invariant"] = modular;
        if (invariance)
            out["checks"] = report_to_json(*invariance);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model " << md.name << ", support " << support.describe() << ", Xi "
                  << ksb.describe() << '\n';
        if (!symmetrizer)
            std::cout << "warning: Xi violates the symmetrizer relation\n";
        std::cout << grid_string(md, ft, zq);
        if (invariance)
            std::cout << invariance->summary();
        std::cout << "physical: " << (physical ? "yes" : "no")
                  << "  modular invariant: " << (modular ? "yes" : "no") << '\n';
    }
    return 0;
}

int cmd_boundary(const Options& opts) {
    const mtc::ModularData md = load_input(opts);
    const mtc::FusionTable ft = mtc::fusion(md);
    const mtc::PicardGroup pg = mtc::picard_group(md, ft);
    const mtc::Subgroup support = parse_support(pg, opts.support, md.size());
    const mtc::Bihomomorphism ksb = parse_ksb(support, opts.ksb);

    const mtc::RationalMatrix zq = mtc::ks_partition_function(md, ft, pg, support, ksb);
    const auto zi = mtc::to_integer_matrix(zq);
    if (!mtc::is_physical(zq) || !zi || !mtc::is_modular_invariant(md, *zi))
        throw mtc::DataError("the given (support, Xi) pair is not a validated algebra; "
                             "its partition function fails the physicality or modular "
                             "invariance filter");

    mtc::SchellekensAlgebra alg;
    alg.md = &md;
    alg.support = support;
    alg.ksb = ksb;
    alg.z = mtc::TorusInvariant{*zi, "H=" + support.describe(), true, true};

    mtc::PhiTable phi;
    const mtc::PhiTable* phi_ptr = nullptr;
    if (!opts.phi_path.empty()) {
        phi = load_phi(opts.phi_path);
        phi_ptr = &phi;
    }
    const auto acting =
        opts.act_by_picard ? mtc::ActingGroup::full_picard : mtc::ActingGroup::support;
    const mtc::BoundarySpectrum spec =
        mtc::boundary_spectrum(md, ft, pg, alg, phi_ptr, acting);

    const char* verdict = spec.verdict == mtc::BoundaryVerdict::consistent ? "consistent"
                          : spec.verdict == mtc::BoundaryVerdict::mismatch ? "MISMATCH"
                                                                           : "incomplete";
    if (opts.json) {
        mtc::json out;
        out["name"] = md.name;
        out["support"] = support.members;
        out["acting_group"] = opts.act_by_picard ? "picard" : "support";
        mtc::json orbits = mtc::json::array();
        for (const auto& orbit : spec.orbits) {
            mtc::json entry;
            entry["representative"] = orbit.representative;
            entry["members"] = orbit.members;
            entry["stabilizer"] = orbit.stabilizer.members;
            if (orbit.count)
                entry["count"] = *orbit.count;
            else
                entry["count"] = nullptr;
            if (orbit.epsilon)
                entry["epsilon"] = ksb_to_json(*orbit.epsilon);
            orbits.push_back(std::move(entry));
        }
        out["orbits"] = std::move(orbits);
        if (spec.total)
            out["total"] = *spec.total;
        else
            out["total"] = nullptr;
        out["module_count_hint"] = spec.module_count_hint;
        out["verdict"] = verdict;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "model " << md.name << ", support " << support.describe() << ", acting by "
                  << (opts.act_by_picard ? "Pic(C)" : "H(A)") << '\n';
        for (const auto& orbit : spec.orbits) {
            std::cout << "orbit of " << orbit.representative << ": members {";
            for (size_t i = 0; i < orbit.members.size(); ++i)
                std::cout << (i ? "," : "") << orbit.members[i];
            std::cout << "} stabilizer " << orbit.stabilizer.describe() << " count ";
            if (orbit.count)
                std::cout << *orbit.count;
            else
                std::cout << "unknown (needs Phi data)";
            std::cout << '\n';
        }
        std::cout << "total: ";
        if (spec.total)
            std::cout << *spec.total;
        else
            std::cout << "unknown";
        std::cout << "  module count hint: " << spec.module_count_hint << "  verdict: " << verdict
                  << '\n';
    }
    if (spec.verdict == mtc::BoundaryVerdict::mismatch)
        return 1;
    return 0;
}

int cmd_builtins(bool json_mode) {
    if (json_mode) {
        mtc::json out;
        out["families"] = mtc::json::array({"su2:<k> (k >= 1)", "cyclic:<N> (N even >= 2)"});
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "builtin modular data families:\n";
        for (const auto& f : mtc::builtin_families())
            std::cout << "  " << f << '\n';
    }
    return 0;
}

void add_input_options(CLI::App* cmd, Options& opts) {
    cmd->add_option("--builtin", opts.builtin, "builtin model spec, e.g. su2:4 or cyclic:6");
    cmd->add_option("--input", opts.input, "modular data JSON file");
    cmd->add_option("--tol", opts.tol, "override the working tolerance");
    cmd->add_flag("--json", opts.json, "machine-readable output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple-current algebras and modular invariants from modular data"};
    app.require_subcommand(1);

    Options opts;

    CLI::App* validate = app.add_subcommand("validate", "check the modular data axioms");
    add_input_options(validate, opts);

    CLI::App* picard = app.add_subcommand("picard", "extract the Picard group");
    add_input_options(picard, opts);

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate Schellekens algebras");
    add_input_options(enumerate, opts);

    CLI::App* torus = app.add_subcommand("torus", "evaluate the torus partition function");
    add_input_options(torus, opts);
    torus->add_option("--support", opts.support, "support subgroup members, e.g. 0,2")
        ->required();
    torus->add_option("--ksb", opts.ksb,
                      "KSB generator-pair assignments g,h=p/q (';'-separated, repeatable); "
                      "unspecified pairs default to 1");

    CLI::App* boundary = app.add_subcommand("boundary", "classify boundary conditions");
    add_input_options(boundary, opts);
    boundary->add_option("--support", opts.support, "support subgroup members")->required();
    boundary->add_option("--ksb", opts.ksb, "KSB generator-pair assignments g,h=p/q");
    boundary->add_option("--phi", opts.phi_path, "orbit 6j-symbol data JSON file");
    boundary->add_flag("--act-by-picard", opts.act_by_picard,
                       "act by the full Picard group instead of the support");

    CLI::App* builtins = app.add_subcommand("builtins", "list builtin model families");
    builtins->add_flag("--json", opts.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(validate))
            return cmd_validate(opts);
        if (app.got_subcommand(picard))
            return cmd_picard(opts);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(opts);
        if (app.got_subcommand(torus))
            return cmd_torus(opts);
        if (app.got_subcommand(boundary))
            return cmd_boundary(opts);
        if (app.got_subcommand(builtins))
            return cmd_builtins(opts.json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const mtc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
