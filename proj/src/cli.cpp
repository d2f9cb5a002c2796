#include "torinv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torinv/invariants.hpp"
#include "torinv/orbitspace.hpp"

namespace torinv::cli {

namespace {

using json = nlohmann::ordered_json;

bool verbose_enabled() {
    const char* v = std::getenv("TORINV_VERBOSE");
    return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string qvec_str(const QVec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ("\"" + rat_to_string(v[i]) + "\"");
    return s + "]";
}

std::string zmatrix_rows_str(const ZMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < m.cols; ++j) s += (j ? "," : "") + m.at(i, j).str();
        s += "]";
    }
    return s + "]";
}

std::string zmatrix_cols_str(const ZMatrix& m) {
    std::string s = "[";
    for (int j = 0; j < m.cols; ++j) {
        s += j ? ",[" : "[";
        for (int i = 0; i < m.rows; ++i) s += (i ? "," : "") + m.at(i, j).str();
        s += "]";
    }
    return s + "]";
}

json zmatrix_rows_json(const ZMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

json zmatrix_cols_json(const ZMatrix& m) {
    json cols = json::array();
    for (int j = 0; j < m.cols; ++j) {
        json col = json::array();
        for (int i = 0; i < m.rows; ++i) col.push_back(m.at(i, j).convert_to<long long>());
        cols.push_back(col);
    }
    return cols;
}

json qvec_json(const QVec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

std::string h1_str(const H1Group& g) {
    std::string s;
    if (g.free_rank > 0) s = "Z^" + std::to_string(g.free_rank);
    for (const Int& f : g.invariant_factors) s += (s.empty() ? "Z/" : " x Z/") + f.str();
    if (s.empty()) s = "0";
    return s;
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

IngredientList load_list(const std::string& path) { return parse(read_file(path)); }

void require_valid(const IngredientList& list, const std::string& path) {
    ValidationReport rep = validate(list);
    if (rep.all_pass()) return;
    for (const ConditionReport& c : rep.conditions)
        if (c.verdict == Verdict::Fail)
            throw PreconditionError("list '" + path + "' does not validate: " + c.name +
                                    (c.detail.empty() ? "" : " (" + c.detail + ")"));
    throw PreconditionError("list '" + path + "' does not validate");
}

Subtorus load_complement(const std::string& path, int d) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("complement file: ") + e.what());
    }
    if (!doc.is_array()) throw SchemaError("complement file: expected an array of integer columns");
    std::vector<ZVec> cols;
    for (const auto& col : doc) {
        if (!col.is_array() || static_cast<int>(col.size()) != d)
            throw SchemaError("complement file: each column needs " + std::to_string(d) +
                              " integers");
        ZVec v;
        for (const auto& x : col) {
            if (!x.is_number_integer()) throw SchemaError("complement file: expected integers");
            v.push_back(Int(x.get<long long>()));
        }
        cols.push_back(std::move(v));
    }
    try {
        return Subtorus::make(d, cols);
    } catch (const Error& e) {
        throw SchemaError(std::string("complement file: ") + e.what());
    }
}

int cmd_validate(const std::string& path, const std::string& emit, std::ostream& out) {
    IngredientList list = load_list(path);
    ValidationReport rep = validate(list);
    if (emit == "json") {
        json doc = json::object();
        doc["file"] = path;
        json conds = json::array();
        for (const ConditionReport& c : rep.conditions) {
            json e = json::object();
            e["name"] = c.name;
            e["verdict"] = verdict_str(c.verdict);
            if (!c.detail.empty()) e["detail"] = c.detail;
            conds.push_back(e);
        }
        doc["conditions"] = conds;
        doc["valid"] = rep.all_pass();
        out << doc.dump(2) << "\n";
    } else {
        out << "file: " << path << "\n";
        for (const ConditionReport& c : rep.conditions) {
            out << c.name << ": " << verdict_str(c.verdict);
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        }
        out << "result: " << (rep.all_pass() ? "valid" : "invalid") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_report(const std::string& path, const std::string& complement_arg,
               const std::string& emit, std::ostream& out) {
    IngredientList list = load_list(path);
    require_valid(list, path);
    InvariantReport rep = invariant_report(list);
    Subtorus t_f = complement(list.t_h);
    std::string complement_src = "auto";
    if (!complement_arg.empty() && complement_arg != "auto") {
        t_f = load_complement(complement_arg, list.torus_dim);
        complement_src = complement_arg;
        rep.h1_group = h1(list, t_f);
        rep.theta_rank = theta_lattice(list, t_f).rank();
    }
    bool verbose = verbose_enabled();
    if (emit == "json") {
        json doc = json::object();
        doc["file"] = path;
        doc["dim_m"] = rep.dim_m;
        doc["euler_characteristic"] = rep.euler;
        doc["hamiltonian"] = rep.hamiltonian;
        doc["pi1_abelian"] = rep.pi1_is_abelian;
        doc["betti1"] = rep.betti_1;
        doc["theta_rank"] = rep.theta_rank;
        json h1j = json::object();
        h1j["free_rank"] = rep.h1_group.free_rank;
        json factors = json::array();
        for (const Int& f : rep.h1_group.invariant_factors)
            factors.push_back(f.convert_to<long long>());
        h1j["invariant_factors"] = factors;
        doc["h1"] = h1j;
        json chern = json::array();
        for (const ZMatrix& m : rep.chern) chern.push_back(zmatrix_rows_json(m));
        doc["chern_forms"] = chern;
        doc["dim_moduli"] = rep.moduli.direct;
        if (rep.moduli.formula) doc["dim_moduli_crosscheck"] = *rep.moduli.formula;
        json split = json::object();
        split["feasible"] = rep.split.feasible;
        if (rep.split.feasible) {
            split["complement_basis"] = zmatrix_cols_json(rep.split.complement->lattice.basis);
            split["shift"] = zmatrix_rows_json(rep.split.shift);
        } else {
            split["certificate"] = rep.split.certificate;
        }
        doc["splitting"] = split;
        doc["aut_image_dim"] = rep.aut_dim;
        if (verbose) {
            doc["complement"] = complement_src;
            doc["dim_space_a"] = rep.moduli.dim_space_a;
            if (!rep.moduli.note.empty()) doc["dim_moduli_note"] = rep.moduli.note;
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "file: " << path << "\n";
    out << "dim_m: " << rep.dim_m << "\n";
    out << "euler_characteristic: " << rep.euler << "\n";
    out << "hamiltonian: " << (rep.hamiltonian ? "yes" : "no") << "\n";
    out << "pi1_abelian: " << (rep.pi1_is_abelian ? "yes" : "no") << "\n";
    out << "betti1: " << rep.betti_1 << "\n";
    out << "theta_rank: " << rep.theta_rank << "\n";
    out << "h1: " << h1_str(rep.h1_group) << "\n";
    if (rep.chern.empty()) {
        out << "chern_forms: none\n";
    } else {
        for (size_t j = 0; j < rep.chern.size(); ++j)
            out << "chern_form_" << (j + 1) << ": " << zmatrix_rows_str(rep.chern[j]) << "\n";
    }
    out << "dim_moduli: " << rep.moduli.direct << "\n";
    if (rep.moduli.formula) out << "dim_moduli_crosscheck: " << *rep.moduli.formula << "\n";
    if (rep.split.feasible) {
        out << "splitting: feasible\n";
        out << "splitting_complement: " << zmatrix_cols_str(rep.split.complement->lattice.basis)
            << "\n";
    } else {
        out << "splitting: infeasible (" << rep.split.certificate << ")\n";
    }
    out << "aut_image_dim: " << rep.aut_dim << "\n";
    if (verbose) {
        out << "complement: " << complement_src << "\n";
        out << "dim_space_a: " << rep.moduli.dim_space_a << "\n";
        if (!rep.moduli.note.empty()) out << "dim_moduli_note: " << rep.moduli.note << "\n";
    }
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& emit,
                std::ostream& out) {
    IngredientList a = load_list(path_a);
    IngredientList b = load_list(path_b);
    require_valid(a, path_a);
    require_valid(b, path_b);
    bool equal = lists_equal(a, b);
    if (emit == "json") {
        json doc = json::object();
        doc["file_a"] = path_a;
        doc["file_b"] = path_b;
        doc["equal"] = equal;
        out << doc.dump(2) << "\n";
    } else {
        out << (equal ? "equal" : "not equal") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_split(const std::string& path, const std::string& emit, std::ostream& out) {
    IngredientList list = load_list(path);
    require_valid(list, path);
    SplittingResult res = splitting(list);
    if (emit == "json") {
        json doc = json::object();
        doc["file"] = path;
        doc["feasible"] = res.feasible;
        if (res.feasible) {
            doc["complement_basis"] = zmatrix_cols_json(res.complement->lattice.basis);
            doc["shift"] = zmatrix_rows_json(res.shift);
        } else {
            doc["certificate"] = res.certificate;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "file: " << path << "\n";
        if (res.feasible) {
            out << "splitting: feasible\n";
            out << "complement_basis: " << zmatrix_cols_str(res.complement->lattice.basis) << "\n";
            out << "shift: " << zmatrix_rows_str(res.shift) << "\n";
        } else {
            out << "splitting: infeasible\n";
            out << "certificate: " << res.certificate << "\n";
        }
    }
    return res.feasible ? 0 : 1;
}

int cmd_decompose(const std::string& path, const std::string& emit, std::ostream& out) {
    PolyhedralParallelSpace space = parse_space(read_file(path));
    QSubspace lin = lineality(space);
    Decomposition dec = decompose(space);
    if (emit == "json") {
        json doc = json::object();
        doc["file"] = path;
        doc["ambient_dim"] = space.ambient_dim;
        doc["lineality_dim"] = lin.dim();
        json lb = json::array();
        for (const QVec& row : lin.basis) lb.push_back(qvec_json(row));
        doc["lineality_basis"] = lb;
        json axes = json::array();
        for (int a : dec.complement_axes) axes.push_back(a);
        doc["complement_axes"] = axes;
        json cons = json::array();
        for (const ParallelConstraint& c : dec.delta_constraints) {
            json e = json::object();
            e["form"] = qvec_json(c.form);
            e["offset"] = rat_to_string(c.offset);
            cons.push_back(e);
        }
        doc["delta_constraints"] = cons;
        doc["compact"] = dec.compact;
        json verts = json::array();
        for (const QVec& v : dec.delta_vertices) verts.push_back(qvec_json(v));
        doc["vertices"] = verts;
        out << doc.dump(2) << "\n";
    } else {
        out << "file: " << path << "\n";
        out << "ambient_dim: " << space.ambient_dim << "\n";
        out << "lineality_dim: " << lin.dim() << "\n";
        for (size_t i = 0; i < lin.basis.size(); ++i)
            out << "lineality_basis_" << (i + 1) << ": " << qvec_str(lin.basis[i]) << "\n";
        std::string axes;
        for (size_t i = 0; i < dec.complement_axes.size(); ++i)
            axes += (i ? "," : "") + std::to_string(dec.complement_axes[i]);
        out << "complement_axes: [" << axes << "]\n";
        for (size_t i = 0; i < dec.delta_constraints.size(); ++i)
            out << "delta_constraint_" << (i + 1) << ": form "
                << qvec_str(dec.delta_constraints[i].form) << " offset \""
                << rat_to_string(dec.delta_constraints[i].offset) << "\"\n";
        out << "compact: " << (dec.compact ? "yes" : "no") << "\n";
        if (dec.compact) {
            out << "vertex_count: " << dec.delta_vertices.size() << "\n";
            for (size_t i = 0; i < dec.delta_vertices.size(); ++i)
                out << "vertex_" << (i + 1) << ": " << qvec_str(dec.delta_vertices[i]) << "\n";
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of symplectic torus-action ingredient lists"};
    app.require_subcommand(1);

    std::string v_file, r_file, c_file_a, c_file_b, s_file, d_file;
    std::string r_complement = "auto";
    std::string v_emit = "text", r_emit = "text", c_emit = "text", s_emit = "text",
                d_emit = "text";

    CLI::App* v = app.add_subcommand("validate", "Check the defining conditions of a list");
    v->add_option("file", v_file, "ingredient list (JSON)")->required();
    v->add_option("--emit", v_emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* r = app.add_subcommand("report", "Print all derived invariants");
    r->add_option("file", r_file, "ingredient list (JSON)")->required();
    r->add_option("--complement", r_complement,
                  "complementary subtorus: 'auto' or a JSON file of integer columns");
    r->add_option("--emit", r_emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* c = app.add_subcommand("compare", "Decide equality of two lists");
    c->add_option("file_a", c_file_a, "first list")->required();
    c->add_option("file_b", c_file_b, "second list")->required();
    c->add_option("--emit", c_emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* s = app.add_subcommand("split", "Decide splitting feasibility");
    s->add_option("file", s_file, "ingredient list (JSON)")->required();
    s->add_option("--emit", s_emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* d = app.add_subcommand("decompose", "Decompose a polyhedral parallel space");
    d->add_option("file", d_file, "parallel space (JSON)")->required();
    d->add_option("--emit", d_emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    static const char* prog = "torinv";
    argv.push_back(prog);
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    try {
        if (app.got_subcommand(v)) return cmd_validate(v_file, v_emit, out);
        if (app.got_subcommand(r)) return cmd_report(r_file, r_complement, r_emit, out);
        if (app.got_subcommand(c)) return cmd_compare(c_file_a, c_file_b, c_emit, out);
        if (app.got_subcommand(s)) return cmd_split(s_file, s_emit, out);
        if (app.got_subcommand(d)) return cmd_decompose(d_file, d_emit, out);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no command\n";
    return 64;
}

} // namespace torinv::cli
