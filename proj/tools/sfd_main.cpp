// sfd: spin fake degrees of Weyl groups, computed in exact arithmetic.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 missing
// optional datasets (or an enumeration budget refusal).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sfd/dataset.hpp"
#include "sfd/emit.hpp"

namespace fs = std::filesystem;
using namespace sfd;

namespace {

struct Options {
    std::string format = "md";
    std::string data_dir = "./data";
    long budget = kDefaultBudget;
    bool extended = false;
    bool half = false;
    bool deep = false;
    bool do_export = false;
};

bool from_scratch_allowed(const Options& opt, CartanType t, const Engine& engine) {
    if (t.family == 'E' && t.rank == 7 && !opt.extended) return false;
    (void)engine;
    return true;
}

std::string classes_path(const Options& opt, CartanType t) {
    return (fs::path(opt.data_dir) / (t.str() + ".classes")).string();
}
std::string spintable_path(const Options& opt, CartanType t) {
    return (fs::path(opt.data_dir) / (t.str() + ".spintable")).string();
}

// Fake degree table either from the from-scratch pipeline or from curated
// datasets, preferring from-scratch whenever it is allowed and affordable.
const FakeDegreeTable& resolve_table(Engine& engine, const Options& opt, CartanType t,
                                     std::optional<FakeDegreeTable>& dataset_slot) {
    Integer order = engine.order(t);
    bool affordable = order <= opt.budget;
    if (affordable && from_scratch_allowed(opt, t, engine)) return engine.fake_degrees(t);

    std::string cpath = classes_path(opt, t), spath = spintable_path(opt, t);
    if (!fs::exists(cpath) || !fs::exists(spath)) {
        std::string reason = affordable
                                 ? "from-scratch computation for " + t.str() +
                                       " requires --extended"
                                 : "group order " + order.get_str() +
                                       " exceeds the enumeration budget " +
                                       std::to_string(opt.budget);
        throw MissingDataset(reason + ", and no curated dataset was found (" + cpath + ", " +
                             spath + "); see `sfd basic " + t.str() +
                             "` for the closed-form basic spin column");
    }
    const RootSystem& rs = engine.root_system(t);
    ClassDataset cds = load_class_dataset(cpath, rs);
    SpinTableDataset sds = load_spin_table(spath);
    dataset_slot = fake_degrees_from_dataset(sds, cds, rs);
    return *dataset_slot;
}

int run(int argc, char** argv) {
    CLI::App app{"spin fake degrees of Weyl groups (exact arithmetic)"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("SFD_DATA_DIR")) opt.data_dir = env;

    std::string type_str;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("type", type_str, "Cartan type (A1..A7, B2..B4, D4, G2, F4, E6, E7, E8)")
            ->required();
        cmd->add_option("--format", opt.format, "output format: md, csv or json");
        cmd->add_option("--data-dir", opt.data_dir, "directory with curated datasets");
        cmd->add_option("--budget", opt.budget, "enumeration budget (elements)");
        cmd->add_flag("--extended", opt.extended, "enable from-scratch E7 (slow, ~GBs)");
    };

    auto* c_table = app.add_subcommand("table", "fake degree table");
    add_common(c_table);
    c_table->add_flag("--half", opt.half, "emit degrees 0..N/2 only (palindromic layout)");

    auto* c_chartable = app.add_subcommand("chartable", "graded spin character table");
    add_common(c_chartable);
    c_chartable->add_flag("--export", opt.do_export, "emit the spin table dataset format");

    auto* c_classes = app.add_subcommand("classes", "conjugacy classes and split data");
    add_common(c_classes);
    c_classes->add_flag("--export", opt.do_export, "emit the class dataset format");

    auto* c_verify = app.add_subcommand("verify", "run the verification battery");
    add_common(c_verify);
    c_verify->add_flag("--deep", opt.deep, "include the full-cover brute-force oracle");

    auto* c_basic = app.add_subcommand("basic", "basic spin fake degree closed form");
    add_common(c_basic);

    auto* c_molien = app.add_subcommand("molien", "graded multiplicity series H");
    add_common(c_molien);

    CLI11_PARSE(app, argc, argv);
    CartanType t = CartanType::parse(type_str);
    OutputFormat fmt = parse_format(opt.format);
    Engine engine(opt.budget);

    if (c_basic->parsed()) {
        IntPolynomial p = basic_spin_closed_form(engine.root_system(t));
        std::cout << polynomial_str(p) << "\n";
        return 0;
    }

    if (c_table->parsed()) {
        std::optional<FakeDegreeTable> slot;
        const FakeDegreeTable& table = resolve_table(engine, opt, t, slot);
        std::cout << emit_table(table, fmt, opt.half);
        for (const auto& note : table.notes) std::cerr << "note: " << note << "\n";
        return 0;
    }

    if (c_molien->parsed()) {
        std::optional<FakeDegreeTable> slot;
        const FakeDegreeTable& table = resolve_table(engine, opt, t, slot);
        std::cout << emit_molien(table, fmt);
        return 0;
    }

    if (c_chartable->parsed()) {
        if (!from_scratch_allowed(opt, t, engine))
            throw MissingDataset("chartable " + t.str() + " requires --extended");
        const FakeDegreeTable& fd = engine.fake_degrees(t);
        const SpinCharacterTable& st = engine.spin_table(t);
        const Classes& cls = engine.classes(t);
        if (opt.do_export)
            std::cout << export_spin_table(st, cls, fd);
        else
            std::cout << emit_chartable(st, cls, fd, fmt);
        return 0;
    }

    if (c_classes->parsed()) {
        if (!from_scratch_allowed(opt, t, engine))
            throw MissingDataset("classes " + t.str() + " requires --extended");
        const Classes& cls = engine.classes(t);
        engine.cover_classes(t);  // fills splitness
        if (opt.do_export) {
            std::cout << export_class_dataset(cls, engine.store(t));
        } else {
            std::cout << "# " << cls.list.size() << " classes of " << t.str() << ", |W| = "
                      << engine.store(t).size() << "\n";
            std::cout << export_class_dataset(cls, engine.store(t));
        }
        return 0;
    }

    if (c_verify->parsed()) {
        bool all_ok = true;
        // from-scratch battery when affordable and allowed
        if (engine.order(t) <= opt.budget && from_scratch_allowed(opt, t, engine)) {
            VerifyReport rep = engine.verify(t, opt.deep);
            for (const auto& c : rep.checks) {
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
                all_ok = all_ok && c.ok;
            }
        } else {
            std::cout << "note from-scratch checks skipped (order " << engine.order(t).get_str()
                      << ", budget " << opt.budget
                      << (from_scratch_allowed(opt, t, engine) ? "" : ", --extended not set")
                      << ")\n";
        }
        // dataset checks when files are present
        std::string cpath = classes_path(opt, t), spath = spintable_path(opt, t);
        if (fs::exists(cpath) && fs::exists(spath)) {
            const RootSystem& rs = engine.root_system(t);
            ClassDataset cds = load_class_dataset(cpath, rs);
            SpinTableDataset sds = load_spin_table(spath);
            ValidationReport rep = validate_spin_table(sds, cds);
            if (rep.ok()) {
                std::cout << "ok   dataset-validation: " << cpath << "\n";
                FakeDegreeTable fd = fake_degrees_from_dataset(sds, cds, rs);
                std::cout << "ok   dataset-fake-degrees: " << fd.rows.size()
                          << " characters, palindromic, reference layout "
                          << (fd.matched_reference ? "matched" : "not bundled") << "\n";
            } else {
                all_ok = false;
                for (const auto& f : rep.findings) std::cout << "FAIL dataset: " << f << "\n";
            }
        }
        return all_ok ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const MissingDataset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
