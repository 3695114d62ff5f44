// trop: batch command-line front end for the max-plus linear algebra library.
// Reads matrices and equation systems from text files, prints results either
// as human-readable text or as a single JSON document (--json).
//
// Exit codes: 0 success (including a "solvable: no" determination),
//             2 usage error, 3 parse error, 4 dimension or domain error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trop/assignment.hpp"
#include "trop/matrix.hpp"
#include "trop/solver.hpp"
#include "trop/spectral.hpp"
#include "trop/text.hpp"

using nlohmann::json;

namespace {

json scalar_json(const trop::TropScalar& s) {
    if (s.is_integer()) return s.numerator();
    return s.token();
}

json matrix_json(const trop::TropMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json column_json(const trop::TropMatrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) out.push_back(scalar_json(m.at(i, 0)));
    return out;
}

json scalars_json(const std::vector<trop::TropScalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

json perm_json(const trop::Permutation& p) {
    json out = json::array();
    for (int i = 0; i < p.size(); ++i) out.push_back(p(i) + 1);
    return out;
}

void print_tokens(std::ostream& os, const std::vector<trop::TropScalar>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ' ';
        os << v[i].token();
    }
}

std::string perm_line(const trop::Permutation& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += std::to_string(p(i) + 1);
    }
    return out;
}

trop::TropMatrix load_matrix(const std::string& path) {
    return trop::parse_matrix(trop::read_file(path), path);
}

void run_maper(const std::string& file, bool as_json) {
    auto res = trop::maper(load_matrix(file));
    if (as_json) {
        json out{{"maper", scalar_json(res.value)}};
        out["perm"] = res.perm ? perm_json(*res.perm) : json(nullptr);
        out["row_duals"] = res.perm ? scalars_json(res.row_duals) : json(nullptr);
        out["col_duals"] = res.perm ? scalars_json(res.col_duals) : json(nullptr);
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "maper = " << res.value.token() << '\n';
    if (res.perm) {
        std::cout << "perm: " << perm_line(*res.perm) << '\n';
        std::cout << "row_duals: ";
        print_tokens(std::cout, res.row_duals);
        std::cout << "\ncol_duals: ";
        print_tokens(std::cout, res.col_duals);
        std::cout << '\n';
    } else {
        std::cout << "perm: none\n";
    }
}

void run_scale(const std::string& file, bool as_json) {
    auto a = load_matrix(file);
    auto [c, d] = trop::hungarian_scaling(a);
    auto scaled = trop::mat_otimes(trop::mat_otimes(c, a), d);
    if (as_json) {
        json out{{"C", matrix_json(c)}, {"D", matrix_json(d)}, {"scaled", matrix_json(scaled)}};
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "C:\n" << trop::format_matrix(c);
    std::cout << "D:\n" << trop::format_matrix(d);
    std::cout << "scaled:\n" << trop::format_matrix(scaled);
}

void run_eig(const std::string& file, bool as_json) {
    auto a = load_matrix(file);
    auto res = trop::eigenpair(a);
    bool irred = trop::is_irreducible(a);
    if (as_json) {
        json out{{"lambda", scalar_json(res.lambda)},
                 {"eigenvector", column_json(res.eigenvector)},
                 {"irreducible", irred},
                 {"finite_eigenvector", res.finite_eigenvector}};
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "lambda = " << res.lambda.token() << '\n';
    std::cout << "eigenvector:\n" << trop::format_matrix(res.eigenvector);
    std::cout << "irreducible: " << (irred ? "yes" : "no") << '\n';
    std::cout << "finite_eigenvector: " << (res.finite_eigenvector ? "yes" : "no") << '\n';
}

void run_product(const std::string& file_a, const std::string& file_b, bool tensor_product,
                 bool as_json) {
    auto a = load_matrix(file_a);
    auto b = load_matrix(file_b);
    auto r = tensor_product ? trop::tensor(a, b) : trop::mat_otimes(a, b);
    if (as_json) {
        std::cout << json{{"result", matrix_json(r)}}.dump() << '\n';
        return;
    }
    std::cout << trop::format_matrix(r);
}

void run_solve(const std::string& file_a, const std::string& file_b, bool as_json) {
    auto a = load_matrix(file_a);
    auto b = load_matrix(file_b);
    auto principal = trop::principal_solution(a, b);
    auto reached = trop::detail::product_unchecked(a, principal);
    std::vector<int> residual_rows;
    for (int i = 0; i < reached.rows(); ++i)
        if (reached.at(i, 0) != b.at(i, 0)) residual_rows.push_back(i + 1);
    bool solvable = residual_rows.empty();
    if (as_json) {
        json out{{"principal", column_json(principal)},
                 {"solvable", solvable},
                 {"residual_rows", residual_rows}};
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "principal:\n" << trop::format_matrix(principal);
    std::cout << "solvable: " << (solvable ? "yes" : "no") << '\n';
    if (!solvable) {
        std::cout << "residual_rows:";
        for (int r : residual_rows) std::cout << ' ' << r;
        std::cout << '\n';
    }
}

void run_mateq(const std::string& file, bool as_json) {
    auto eq = trop::parse_equation(trop::read_file(file), file);
    auto report = trop::solve_matrix_equation(eq);
    if (as_json) {
        json out{{"operator_rows", report.op.rows()},
                 {"operator_cols", report.op.cols()},
                 {"solvable", report.solvable},
                 {"principal", column_json(report.principal)},
                 {"residual_rows", report.residual_rows}};
        out["solution"] = report.solution ? matrix_json(*report.solution) : json(nullptr);
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "operator: " << report.op.rows() << " x " << report.op.cols() << '\n';
    std::cout << "solvable: " << (report.solvable ? "yes" : "no") << '\n';
    if (report.solution) {
        std::cout << "X:\n" << trop::format_matrix(*report.solution);
    } else {
        std::cout << "residual_rows:";
        for (int r : report.residual_rows) std::cout << ' ' << r;
        std::cout << '\n';
    }
}

void run_unary(const std::string& file, bool conj, bool as_json) {
    auto a = load_matrix(file);
    auto r = conj ? trop::conjugate(a) : trop::vec(a);
    if (as_json) {
        std::cout << json{{"result", matrix_json(r)}}.dump() << '\n';
        return;
    }
    std::cout << trop::format_matrix(r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-plus (tropical) linear algebra toolkit"};
    app.require_subcommand(1);

    struct Cmd {
        CLI::App* sub = nullptr;
        std::vector<std::string> files;
        bool json = false;
    };
    auto add = [&](const char* name, const char* desc, int arity) {
        auto cmd = std::make_shared<Cmd>();
        cmd->sub = app.add_subcommand(name, desc);
        cmd->sub->add_option("files", cmd->files, "input files")->expected(arity)->required();
        cmd->sub->add_flag("--json", cmd->json, "emit one JSON document");
        return cmd;
    };

    auto maper_cmd = add("maper", "tropical permanent, optimal permutation and duals", 1);
    auto scale_cmd = add("scale", "Hungarian scaling matrices C, D and C(x)A(x)D", 1);
    auto eig_cmd = add("eig", "maximum cycle mean and an eigenvector", 1);
    auto tensor_cmd = add("tensor", "tensor product of two matrices", 2);
    auto mul_cmd = add("mul", "max-plus matrix product", 2);
    auto solve_cmd = add("solve", "principal solution of A(x)x = b", 2);
    auto mateq_cmd = add("mateq", "solve a matrix equation from an equation file", 1);
    auto vec_cmd = add("vec", "column-major vectorization", 1);
    auto conj_cmd = add("conj", "conjugate -A^T", 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (maper_cmd->sub->parsed()) run_maper(maper_cmd->files[0], maper_cmd->json);
        else if (scale_cmd->sub->parsed()) run_scale(scale_cmd->files[0], scale_cmd->json);
        else if (eig_cmd->sub->parsed()) run_eig(eig_cmd->files[0], eig_cmd->json);
        else if (tensor_cmd->sub->parsed())
            run_product(tensor_cmd->files[0], tensor_cmd->files[1], true, tensor_cmd->json);
        else if (mul_cmd->sub->parsed())
            run_product(mul_cmd->files[0], mul_cmd->files[1], false, mul_cmd->json);
        else if (solve_cmd->sub->parsed())
            run_solve(solve_cmd->files[0], solve_cmd->files[1], solve_cmd->json);
        else if (mateq_cmd->sub->parsed()) run_mateq(mateq_cmd->files[0], mateq_cmd->json);
        else if (vec_cmd->sub->parsed()) run_unary(vec_cmd->files[0], false, vec_cmd->json);
        else if (conj_cmd->sub->parsed()) run_unary(conj_cmd->files[0], true, conj_cmd->json);
    } catch (const trop::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const trop::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
