#include "steiner/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "steiner/closed_forms.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/matrix.hpp"
#include "steiner/rational.hpp"
#include "steiner/resultant.hpp"
#include "steiner/rng.hpp"
#include "steiner/spectra.hpp"
#include "steiner/tree.hpp"
#include "steiner/tree_bases.hpp"

namespace steiner {

namespace {

using nlohmann::json;

struct TreeOptions {
    std::string file;
    std::string prufer;
    int random_n = 0;
    int path_n = 0;
    int star_n = 0;
    int caterpillar_n = 0;
    int broom_n = 0;
    uint64_t seed = 1;

    bool any() const {
        return !file.empty() || !prufer.empty() || random_n || path_n || star_n ||
               caterpillar_n || broom_n;
    }

    Tree build() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw CLI::ValidationError("--tree", "cannot open '" + file + "'");
            return parse_tree_text(in);
        }
        if (!prufer.empty()) return parse_prufer(prufer);
        if (random_n) return random_tree(random_n, seed);
        if (path_n) return path_tree(path_n);
        if (star_n) return star_tree(star_n);
        if (caterpillar_n) return caterpillar_tree(caterpillar_n);
        if (broom_n) return broom_tree(broom_n);
        throw CLI::ValidationError("tree", "no tree source given");
    }
};

void add_tree_options(CLI::App* cmd, TreeOptions& opts) {
    cmd->add_option("--tree", opts.file, "tree file: one 'u v' edge per line");
    cmd->add_option("--prufer", opts.prufer, "Prufer sequence, e.g. \"2 2 4\"");
    cmd->add_option("--random", opts.random_n, "uniform random tree on N vertices");
    cmd->add_option("--path", opts.path_n, "path on N vertices");
    cmd->add_option("--star", opts.star_n, "star on N vertices (center n)");
    cmd->add_option("--caterpillar", opts.caterpillar_n, "caterpillar on N vertices");
    cmd->add_option("--broom", opts.broom_n, "broom on N vertices");
}

std::string edge_list_string(const Tree& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.edges().size(); ++i) {
        if (i) os << " ";
        os << t.edges()[i].first << "-" << t.edges()[i].second;
    }
    return os.str();
}

class RecordSink {
public:
    RecordSink(const std::string& path, bool to_stdout, std::ostream& out) : out_(out), to_stdout_(to_stdout) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
        }
    }

    void emit(const json& record) {
        std::string line = record.dump();
        if (file_.is_open()) file_ << line << "\n";
        if (to_stdout_) out_ << line << "\n";
    }

private:
    std::ostream& out_;
    std::ofstream file_;
    bool to_stdout_;
};

// ---------- verify ----------

struct VerifyState {
    int checks = 0;
    int failures = 0;
    int skipped = 0;
};

void report_check(VerifyState& st, RecordSink& sink, std::ostream& out, bool table,
                  const std::string& identity, int n, int k, const std::string& tree,
                  bool pass, const std::string& detail = "") {
    st.checks++;
    if (!pass) st.failures++;
    json rec{{"type", "identity"}, {"identity", identity}, {"n", n},     {"k", k},
             {"tree", tree},       {"pass", pass}};
    if (!detail.empty()) rec["detail"] = detail;
    sink.emit(rec);
    if (table && !pass) {
        out << "FAIL  " << identity << "  n=" << n << " k=" << k << "  tree[" << tree
            << "]" << (detail.empty() ? "" : "  " + detail) << "\n";
    }
}

int cmd_verify(const TreeOptions& topts, int nmax, int kmax, int trees_per_n,
               uint64_t seed, size_t cap, bool inject_fault, const std::string& out_path,
               bool records_stdout, std::ostream& out) {
    RecordSink sink(out_path, records_stdout, out);
    VerifyState st;
    bool table = !records_stdout;

    std::vector<std::pair<Tree, std::string>> trees;
    if (topts.any()) {
        Tree t = topts.build();
        trees.emplace_back(t, edge_list_string(t));
    } else {
        uint64_t counter = 0;
        for (int n = 2; n <= nmax; ++n) {
            for (int i = 0; i < trees_per_n; ++i) {
                Tree t = random_tree(n, split_seed(seed, counter++));
                trees.emplace_back(t, edge_list_string(t));
            }
        }
    }

    bool fault_pending = inject_fault;
    uint64_t vec_counter = 1u << 20;
    for (const auto& [t, tree_str] : trees) {
        int n = t.n();
        if (n < 2) {
            st.skipped++;
            sink.emit(json{{"type", "skip"}, {"tree", tree_str},
                           {"reason", "n=1 degenerate: hyperdeterminant is 0 and the "
                                      "identity layer needs at least one edge"}});
            if (table) out << "SKIP  n=1 tree (degenerate single-vertex case)\n";
            continue;
        }
        RatMat pp = p_prime_matrix(t);
        RatMat ppi = p_prime_inverse(t);
        report_check(st, sink, out, table, "p_prime_inverse_product", n, 2, tree_str,
                     mat_mul(pp, ppi) == RatMat::identity(n));
        RatMat z = zeta_matrix(t);
        RatMat mob = mobius_matrix(t);
        report_check(st, sink, out, table, "zeta_det_one", n, 2, tree_str, det(z) == 1);
        report_check(st, sink, out, table, "mobius_inverse", n, 2, tree_str,
                     mat_mul(z, mob) == RatMat::identity(n));
        bool agree = true;
        for (int i = 0; i < n && agree; ++i)
            for (int j = 0; j + 1 < n; ++j)
                if (-mob.at(i, j) != ppi.at(i, j)) {
                    agree = false;
                    break;
                }
        report_check(st, sink, out, table, "mobius_vs_p_prime_inverse", n, 2, tree_str, agree);
        {
            Rng rng(split_seed(seed, vec_counter++));
            RatVec c = rng.zero_sum_vec(static_cast<size_t>(n));
            RatVec lhs = mat_vec(pp, c);
            RatVec rhs = vec_scale(Rat(-1), mat_vec(z, c));
            report_check(st, sink, out, table, "p_prime_equals_minus_zeta", n, 2, tree_str,
                         lhs == rhs);
        }

        for (int k = 2; k <= kmax; ++k) {
            double entries = 1;
            bool fits = true;
            for (int i = 0; i < k; ++i) {
                entries *= n;
                if (entries > static_cast<double>(cap)) fits = false;
            }
            if (!fits) {
                st.skipped++;
                sink.emit(json{{"type", "skip"}, {"n", n}, {"k", k},
                               {"reason", "entry cap exceeded"}});
                continue;
            }
            Hypermatrix m = steiner_hypermatrix(t, k, cap);
            if (fault_pending) {
                // test mode: corrupt one off-diagonal entry to prove the
                // harness notices
                std::vector<int> idx(static_cast<size_t>(k), 1);
                idx.back() = n;
                m.at(idx) += 1;
                fault_pending = false;
            }
            Rng rng(split_seed(seed, vec_counter++));

            for (int rep = 0; rep < 3; ++rep) {
                RatVec c = rng.rat_vec(static_cast<size_t>(n));
                Rat direct = eval_kform(m, c);
                EdgeSumReport es = edge_sum_form(t, k, c);
                bool ok = es.total == direct;
                report_check(st, sink, out, table, "edge_sum_closed_form", n, k, tree_str, ok,
                             ok ? "" : "edge-sum " + rat_to_string(es.total) + " vs direct " +
                                           rat_to_string(direct));
            }
            for (int rep = 0; rep < 3; ++rep) {
                RatVec c = rng.zero_sum_vec(static_cast<size_t>(n));
                if (k % 2 == 0) {
                    Rat closed = diagonal_form_even(t, k, c);
                    Rat direct = eval_kform(m, c);
                    bool ok = closed == direct && (n < 3 || closed < 0);
                    report_check(st, sink, out, table, "diagonal_form_even", n, k, tree_str, ok);
                } else {
                    Rat direct = eval_kform(m, c);
                    report_check(st, sink, out, table, "odd_k_vanishing", n, k, tree_str,
                                 direct == 0);
                }
            }
            {
                std::vector<RatVec> xs;
                for (int j = 0; j < k; ++j) xs.push_back(rng.rat_vec(static_cast<size_t>(n), -4, 4));
                report_check(st, sink, out, table, "polarization", n, k, tree_str,
                             polarize(m, xs) == eval_multilinear(m, xs));
                NearDiagonalReport nd = near_diagonal_check(t, k, xs);
                report_check(st, sink, out, table, "near_diagonal_eval", n, k, tree_str,
                             nd.equal,
                             nd.equal ? "" : rat_to_string(nd.lhs) + " vs " + rat_to_string(nd.rhs));
            }
            {
                RatVec x = rng.rat_vec(static_cast<size_t>(n));
                report_check(st, sink, out, table, "gradient_euler", n, k, tree_str,
                             dot(x, eval_gradient(m, x)) == eval_kform(m, x));
            }
            if (static_cast<double>(m.size()) <= 20000.0) {
                Hypermatrix target =
                    k % 2 == 0 ? near_diagonal_target(n, k) : u_hypermatrix(n, k);
                report_check(st, sink, out, table, "near_diagonal_entrywise", n, k, tree_str,
                             mode_transform(m, mobius_matrix(t)) == target);
            }
            if (k % 2 == 0 && n >= 3) {
                CndReport cnd = cnd_witness_search(t, k, 5, split_seed(seed, vec_counter++));
                report_check(st, sink, out, table, "cnd_strict_negative", n, k, tree_str,
                             cnd.all_negative && cnd.certificate_all);
            }
        }
    }

    json summary{{"type", "summary"},
                 {"checks", st.checks},
                 {"failures", st.failures},
                 {"skipped", st.skipped}};
    sink.emit(summary);
    if (table) {
        out << "verify: " << st.checks << " checks, " << st.failures << " failures, "
            << st.skipped << " skipped\n";
    }
    return st.failures == 0 ? 0 : 1;
}

// ---------- hyperdet ----------

int cmd_hyperdet(const TreeOptions& topts, int n, int trees_count, bool all_labeled,
                 int k_single, int kmin, int kmax, uint64_t seed, size_t cap,
                 const std::string& out_path, bool records_stdout, std::ostream& out,
                 std::ostream& err) {
    RecordSink sink(out_path, records_stdout, out);
    bool table = !records_stdout;

    std::vector<std::pair<Tree, std::string>> trees;
    if (topts.any()) {
        Tree t = topts.build();
        trees.emplace_back(t, edge_list_string(t));
    } else if (all_labeled) {
        if (n < 2 || n > 6)
            throw CLI::ValidationError("--all-labeled", "supported for 2 <= n <= 6");
        if (n == 2) {
            trees.emplace_back(path_tree(2), edge_list_string(path_tree(2)));
        } else {
            std::vector<int> word(static_cast<size_t>(n - 2), 1);
            for (;;) {
                Tree t = prufer_decode(word);
                trees.emplace_back(t, edge_list_string(t));
                int p = n - 3;
                while (p >= 0 && word[static_cast<size_t>(p)] == n) {
                    word[static_cast<size_t>(p)] = 1;
                    p--;
                }
                if (p < 0) break;
                word[static_cast<size_t>(p)]++;
            }
        }
    } else if (n >= 2) {
        for (int i = 0; i < std::max(1, trees_count); ++i) {
            Tree t = random_tree(n, split_seed(seed, static_cast<uint64_t>(i)));
            trees.emplace_back(t, edge_list_string(t));
        }
    } else {
        throw CLI::ValidationError("hyperdet", "give a tree source or --n");
    }

    if (k_single) kmin = kmax = k_single;
    if (kmin < 2 || kmax < kmin)
        throw CLI::ValidationError("--k", "need 2 <= kmin <= kmax");

    if (table)
        out << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(24)
            << "value" << "tree\n";
    int status = 0;
    for (int k = kmin; k <= kmax; ++k) {
        std::vector<Rat> values;
        for (const auto& [t, tree_str] : trees) {
            try {
                Hypermatrix m = steiner_hypermatrix(t, k);
                Rat value = hyperdet(m, seed, cap);
                values.push_back(value);
                sink.emit(json{{"type", "hyperdet"},
                               {"n", t.n()},
                               {"k", k},
                               {"tree", tree_str},
                               {"value", rat_to_string(value)}});
                if (table)
                    out << std::left << std::setw(4) << t.n() << std::setw(4) << k
                        << std::setw(24) << rat_to_string(value) << tree_str << "\n";
            } catch (const std::length_error& e) {
                err << "infeasible: " << e.what() << "\n"
                    << "feasible envelope: degree-d monomial count <= " << cap
                    << " with d = n(k-2)+1; Sylvester handles any k at n=2\n";
                return 2;
            }
        }
        if (values.size() > 1) {
            bool invariant = true;
            for (const Rat& v : values)
                if (v != values.front()) invariant = false;
            sink.emit(json{{"type", "invariance"},
                           {"k", k},
                           {"trees", values.size()},
                           {"invariant", invariant},
                           {"value", rat_to_string(values.front())}});
            if (table)
                out << (invariant ? "invariant" : "NOT invariant") << " across "
                    << values.size() << " trees at k=" << k << "\n";
            if (!invariant) status = 1;
        }
    }
    return status;
}

// ---------- eigen ----------

int cmd_eigen(const TreeOptions& topts, int k, const std::string& form, int starts,
              double tol, int max_iter, uint64_t seed, const std::string& out_path,
              bool records_stdout, std::ostream& out) {
    RecordSink sink(out_path, records_stdout, out);
    bool table = !records_stdout;
    Tree t = topts.build();
    int n = t.n();
    Hypermatrix m = steiner_hypermatrix(t, k);
    Hypermatrix target = m;
    if (form == "c1") {
        target = reflected_form(m, {k}).realize();
    } else if (form == "c3") {
        std::vector<int> mask;
        for (int mode = 2; mode <= k; ++mode) mask.push_back(mode);
        target = reflected_form(m, mask).realize();
    } else if (form == "c1c3") {
        Hypermatrix c1 = reflected_form(m, {k}).realize();
        std::vector<int> mask;
        for (int mode = 2; mode <= k; ++mode) mask.push_back(mode);
        Hypermatrix c3 = reflected_form(m, mask).realize();
        for (size_t i = 0; i < c1.size(); ++i) c1.flat_at(i) += c3.flat_at(i);
        target = c1;
    } else if (form != "m") {
        throw CLI::ValidationError("--form", "expected c1|c3|c1c3|m");
    }

    std::vector<EigenPair> pairs = h_eigen_search(target, starts, seed, tol, max_iter);
    if (table)
        out << std::left << std::setw(22) << "lambda" << std::setw(14) << "residual"
            << std::setw(8) << "iters" << std::setw(14) << "shift" << "x\n";
    double min_lambda = 0;
    bool have = false;
    for (const EigenPair& p : pairs) {
        if (!have || p.lambda < min_lambda) {
            min_lambda = p.lambda;
            have = true;
        }
        json xs = json::array();
        std::ostringstream xtext;
        for (double v : p.x) {
            xs.push_back(v);
            xtext << std::setprecision(6) << v << " ";
        }
        sink.emit(json{{"type", "eigenpair"},
                       {"form", form},
                       {"n", n},
                       {"k", k},
                       {"lambda", p.lambda},
                       {"residual", p.residual},
                       {"iterations", p.iterations},
                       {"shift", p.shift},
                       {"x", xs}});
        if (table)
            out << std::left << std::setw(22) << std::setprecision(15) << p.lambda
                << std::setw(14) << std::setprecision(3) << p.residual << std::setw(8)
                << p.iterations << std::setw(14) << p.shift << xtext.str() << "\n";
    }
    sink.emit(json{{"type", "eigen_summary"},
                   {"form", form},
                   {"pairs", pairs.size()},
                   {"min_lambda", have ? min_lambda : 0.0},
                   {"starts", starts}});
    if (table) {
        out << pairs.size() << " distinct converged pairs";
        if (have) out << "; min lambda = " << std::setprecision(15) << min_lambda;
        out << "\n";
    }
    if (n == 2 && table) {
        K2Census census = k2_sign_census(k);
        out << "closed-form one-edge spectrum (k=" << k << "): -1 x" << census.minus_one_multiplicity;
        for (const auto& lam : census.lambdas) out << ", " << lam.real();
        out << "\n";
    }
    return 0;
}

// ---------- figure ----------

int cmd_figure(int n, int k, const std::string& out_path, const std::string& records_path,
               bool records_stdout, std::ostream& out) {
    RecordSink sink(records_path, records_stdout, out);
    bool table = !records_stdout;
    if (n < 2) throw CLI::ValidationError("--n", "need n >= 2");
    if (k < 2) throw CLI::ValidationError("--k", "need k >= 2");
    bool odd = k % 2 != 0;
    Hypermatrix w = odd ? u_hypermatrix(n, k) : near_diagonal_target(n, k);

    int row_digits = (k + 1) / 2;
    int col_digits = k / 2;
    size_t rows = 1, cols = 1;
    for (int i = 0; i < row_digits; ++i) rows *= static_cast<size_t>(n);
    for (int i = 0; i < col_digits; ++i) cols *= static_cast<size_t>(n);

    const int cell = 26, margin = 40;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << margin + cols * cell + 10 << "\" height=\"" << margin + rows * cell + 10
        << "\">\n";
    size_t count_m2 = 0, count_p1 = 0, count_m1 = 0, count_other = 0;
    std::vector<int> idx(static_cast<size_t>(k));
    for (size_t r = 0; r < rows; ++r) {
        // row digits occupy odd modes 1,3,5,... (1-based)
        size_t rr = r;
        for (int dpos = row_digits - 1; dpos >= 0; --dpos) {
            idx[static_cast<size_t>(2 * dpos)] = static_cast<int>(rr % n) + 1;
            rr /= static_cast<size_t>(n);
        }
        for (size_t cpos = 0; cpos < cols; ++cpos) {
            size_t cc = cpos;
            for (int dpos = col_digits - 1; dpos >= 0; --dpos) {
                idx[static_cast<size_t>(2 * dpos + 1)] = static_cast<int>(cc % n) + 1;
                cc /= static_cast<size_t>(n);
            }
            const Rat& value = w.at(idx);
            int x = margin + static_cast<int>(cpos) * cell;
            int y = margin + static_cast<int>(r) * cell;
            std::string fill = "#d9d9d9";
            std::string label;
            if (value == -2) {
                fill = "#f4b6b6";
                label = "-2";
                count_m2++;
            } else if (value == 1) {
                fill = "#ffffff";
                label = "1";
                count_p1++;
            } else if (value == -1) {
                fill = "#ffffff";
                label = "-1";
                count_m1++;
            } else if (value != 0) {
                fill = "#ffe9a8";
                label = rat_to_string(value);
                count_other++;
            }
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill
                << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
            if (!label.empty()) {
                svg << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
                    << "\" font-size=\"10\" text-anchor=\"middle\">" << label
                    << "</text>\n";
            }
        }
    }
    // block separators and outer index labels
    size_t inner_rows = rows / static_cast<size_t>(n);
    size_t inner_cols = std::max<size_t>(1, cols / static_cast<size_t>(n));
    for (int b = 0; b <= n; ++b) {
        int yv = margin + static_cast<int>(b * inner_rows) * cell;
        svg << "<line x1=\"" << margin << "\" y1=\"" << yv << "\" x2=\""
            << margin + cols * cell << "\" y2=\"" << yv
            << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
        if (cols >= static_cast<size_t>(n)) {
            int xv = margin + static_cast<int>(b * inner_cols) * cell;
            svg << "<line x1=\"" << xv << "\" y1=\"" << margin << "\" x2=\"" << xv
                << "\" y2=\"" << margin + rows * cell
                << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
        }
    }
    for (int b = 0; b < n; ++b) {
        svg << "<text x=\"" << margin / 2 << "\" y=\""
            << margin + (b * static_cast<int>(inner_rows) + static_cast<int>(inner_rows) / 2) * cell
            << "\" font-size=\"14\" font-weight=\"bold\">" << b + 1 << "</text>\n";
        if (cols >= static_cast<size_t>(n))
            svg << "<text x=\""
                << margin + (b * static_cast<int>(inner_cols) + static_cast<int>(inner_cols) / 2) * cell
                << "\" y=\"" << margin / 2 << "\" font-size=\"14\" font-weight=\"bold\">"
                << b + 1 << "</text>\n";
    }
    svg << "<!-- cells: minus2=" << count_m2 << " plus1=" << count_p1 << " minus1="
        << count_m1 << " other=" << count_other << " -->\n";
    if (odd)
        svg << "<!-- odd order: the diagonal correction vanishes, schematic shows the "
               "bare transform target -->\n";
    svg << "</svg>\n";

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw CLI::ValidationError("--out", "cannot open '" + out_path + "'");
        f << svg.str();
    } else {
        out << svg.str();
    }
    sink.emit(json{{"type", "figure"},
                   {"n", n},
                   {"k", k},
                   {"cells_minus2", count_m2},
                   {"cells_plus1", count_p1},
                   {"cells_minus1", count_m1},
                   {"cells_other", count_other}});
    if (table) {
        out << "figure: " << count_m2 << " cells of -2, " << count_p1 << " of +1, "
            << count_m1 << " of -1\n";
        if (odd) out << "note: odd order, emitted the bare target (no -2 diagonal)\n";
    }
    return 0;
}

// ---------- steiner ----------

int cmd_steiner(const TreeOptions& topts, const std::string& set_text, std::ostream& out) {
    Tree t = topts.build();
    std::vector<int> verts;
    std::string token;
    for (char ch : set_text) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!token.empty()) verts.push_back(std::stoi(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (!token.empty()) verts.push_back(std::stoi(token));
    out << steiner_distance(t, verts) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steiner distance hypermatrices of trees: exact identity checks, "
                 "hyperdeterminants, and tensor eigenvalue experiments"};
    app.require_subcommand(1);

    // shared knobs
    uint64_t seed = 1;
    size_t cap = kDefaultEntryCap;
    std::string out_path;
    std::string format = "table";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "master seed (all runs derive from it)");
        cmd->add_option("--cap", cap, "dense hypermatrix entry cap");
        cmd->add_option("--out", out_path, "write machine-readable records here");
        cmd->add_option("--format", format, "stdout format: table|records")
            ->check(CLI::IsMember({"table", "records"}));
    };

    TreeOptions topts;

    auto* verify = app.add_subcommand("verify", "run the exact identity suites");
    int nmax = 6, kmax = 4, trees_per_n = 20;
    bool inject_fault = false;
    add_tree_options(verify, topts);
    add_common(verify);
    verify->add_option("--nmax", nmax, "largest n in the random grid");
    verify->add_option("--kmax", kmax, "largest order in the grid");
    verify->add_option("--trees", trees_per_n, "random trees per n");
    verify->add_flag("--inject-fault", inject_fault,
                     "test mode: corrupt one entry and expect a failure");

    auto* hyperdet_cmd = app.add_subcommand("hyperdet", "exact hyperdeterminants");
    int hd_n = 0, hd_trees = 1, hd_k = 0, hd_kmin = 0, hd_kmax = 0;
    size_t macaulay_cap = kDefaultMacaulayCap;
    bool all_labeled = false;
    add_tree_options(hyperdet_cmd, topts);
    add_common(hyperdet_cmd);
    hyperdet_cmd->add_option("--n", hd_n, "vertex count for generated trees");
    hyperdet_cmd->add_option("--trees", hd_trees, "number of random trees");
    hyperdet_cmd->add_flag("--all-labeled", all_labeled, "every labeled tree on n vertices");
    hyperdet_cmd->add_option("--k", hd_k, "single order");
    hyperdet_cmd->add_option("--kmin", hd_kmin, "order sweep start");
    hyperdet_cmd->add_option("--kmax", hd_kmax, "order sweep end");
    hyperdet_cmd->add_option("--macaulay-cap", macaulay_cap,
                             "largest admissible Macaulay monomial count");

    auto* eigen_cmd = app.add_subcommand("eigen", "H-eigenpair search");
    int ek = 4, starts = 200, max_iter = 2000;
    double tol = 1e-10;
    std::string form = "c1";
    add_tree_options(eigen_cmd, topts);
    add_common(eigen_cmd);
    eigen_cmd->add_option("--k", ek, "order (even)");
    eigen_cmd->add_option("--form", form, "c1|c3|c1c3|m");
    eigen_cmd->add_option("--starts", starts, "multistart count");
    eigen_cmd->add_option("--tol", tol, "residual acceptance tolerance");
    eigen_cmd->add_option("--max-iter", max_iter, "iteration cap per start");

    auto* figure_cmd = app.add_subcommand("figure", "schematic of the transform target");
    int fn = 5, fk = 4;
    add_common(figure_cmd);
    figure_cmd->add_option("--n", fn, "dimension");
    figure_cmd->add_option("--k", fk, "order");

    auto* steiner_cmd = app.add_subcommand("steiner", "one-off Steiner distance query");
    std::string set_text;
    add_tree_options(steiner_cmd, topts);
    add_common(steiner_cmd);
    steiner_cmd->add_option("--set", set_text, "vertex multiset, e.g. \"1,3,4\"")->required();

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("steinerhd");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    bool records_stdout = format == "records";
    try {
        if (verify->parsed())
            return cmd_verify(topts, nmax, kmax, trees_per_n, seed, cap, inject_fault,
                              out_path, records_stdout, out);
        if (hyperdet_cmd->parsed())
            return cmd_hyperdet(topts, hd_n, hd_trees, all_labeled, hd_k,
                                hd_kmin ? hd_kmin : (hd_k ? hd_k : 2),
                                hd_kmax ? hd_kmax : (hd_k ? hd_k : 2), seed,
                                macaulay_cap, out_path, records_stdout, out, err);
        if (eigen_cmd->parsed())
            return cmd_eigen(topts, ek, form, starts, tol, max_iter, seed, out_path,
                             records_stdout, out);
        if (figure_cmd->parsed())
            return cmd_figure(fn, fk, out_path, "", records_stdout, out);
        if (steiner_cmd->parsed()) return cmd_steiner(topts, set_text, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace steiner
