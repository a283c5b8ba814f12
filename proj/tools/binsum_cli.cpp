// Command-line front end: compute sums, coefficient tables, sequences and
// polynomials, and run the verification sweeps. Output is a single JSON
// document (or CSV for `table --format csv`); every number is serialized as
// a string so consumers never lose precision. Exit codes: 0 success/pass,
// 1 a check found counterexamples, 2 usage or precondition error.

#include "binsum/binsum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using ojson = nlohmann::ordered_json;
using namespace binsum;

void emit(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

ojson envelope(const std::string& command, const std::vector<std::pair<std::string, std::string>>& params) {
    ojson doc;
    doc["command"] = command;
    ojson p = ojson::object();
    for (const auto& [k, v] : params) p[k] = v;
    doc["params"] = p;
    return doc;
}

int finish_plain(ojson doc, ojson values) {
    doc["values"] = std::move(values);
    doc["counterexamples"] = ojson::array();
    emit(doc);
    return 0;
}

int finish_check(ojson doc, const CheckReport& report, std::size_t max_counterexamples) {
    doc["pass"] = report.pass();
    ojson values = ojson::object();
    values["swept"] = report.swept();
    values["failures_total"] = std::to_string(report.counterexamples().size());
    doc["values"] = std::move(values);
    ojson ces = ojson::array();
    std::size_t shown = std::min(max_counterexamples, report.counterexamples().size());
    for (std::size_t i = 0; i < shown; ++i) {
        const Counterexample& ce = report.counterexamples()[i];
        ojson e;
        e["inputs"] = ce.inputs;
        e["lhs"] = ce.lhs.str();
        e["rhs"] = ce.rhs.str();
        ces.push_back(std::move(e));
    }
    doc["counterexamples"] = std::move(ces);
    emit(doc);
    return report.pass() ? 0 : 1;
}

std::vector<long> prime_selection(long p, const std::vector<long>& fallback) {
    if (p == 0) return fallback;
    return {p};
}

// ---- table helpers ----

std::string table_csv(int which, long from, long to) {
    std::vector<CoeffRow> rows = coeff_table(which, from, to);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.values.size());
    std::string out = "m";
    for (std::size_t i = 1; i <= width; ++i) out += ",i" + std::to_string(i);
    out += "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.m);
        for (std::size_t i = 0; i < width; ++i)
            out += "," + (i < r.values.size() ? r.values[i].get_str() : std::string());
        out += "\n";
    }
    return out;
}

ojson table_rows_json(int which, long from, long to) {
    ojson rows = ojson::array();
    for (const CoeffRow& r : coeff_table(which, from, to)) {
        ojson row;
        row["m"] = std::to_string(r.m);
        ojson vals = ojson::array();
        for (const BigInt& v : r.values) vals.push_back(v.get_str());
        row["values"] = std::move(vals);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact residue-class binomial sums, recurrences and congruences"};
    app.require_subcommand(1);

    // sum
    long sum_n = 0, sum_r = 0, sum_m = 1;
    std::string variant = "plain";
    CLI::App* sum_cmd = app.add_subcommand("sum", "residue-class binomial sum");
    sum_cmd->add_option("n", sum_n)->required();
    sum_cmd->add_option("r", sum_r)->required();
    sum_cmd->add_option("m", sum_m)->required();
    sum_cmd->add_option("--variant", variant)->check(CLI::IsMember({"plain", "alt", "bracket", "star"}));

    // coeffs
    long coeffs_m = 1;
    std::string coeff_kind = "a";
    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "recurrence coefficient row");
    coeffs_cmd->add_option("m", coeffs_m)->required();
    coeffs_cmd->add_option("--kind", coeff_kind)->check(CLI::IsMember({"a", "b", "c", "d"}));

    // table
    int table_which = 1;
    long table_from = 2, table_to = 12;
    std::string table_format = "json";
    CLI::App* table_cmd = app.add_subcommand("table", "a_m / b_m table rows");
    table_cmd->add_option("--which", table_which)->required()->check(CLI::IsMember({1, 2}));
    table_cmd->add_option("--from", table_from);
    table_cmd->add_option("--to", table_to);
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));

    // useq / vseq
    long uv_m = 1, uv_n = 1, uv_q = 1, uv_lmax = 10;
    CLI::App* useq_cmd = app.add_subcommand("useq", "U_l^(q)(m,n) values");
    useq_cmd->add_option("m", uv_m)->required();
    useq_cmd->add_option("n", uv_n)->required();
    useq_cmd->add_option("q", uv_q)->required();
    useq_cmd->add_option("--lmax", uv_lmax);
    CLI::App* vseq_cmd = app.add_subcommand("vseq", "V_l^(q)(m,n) values");
    vseq_cmd->add_option("m", uv_m)->required();
    vseq_cmd->add_option("n", uv_n)->required();
    vseq_cmd->add_option("q", uv_q)->required();
    vseq_cmd->add_option("--lmax", uv_lmax);

    // poly
    std::string poly_kind;
    long poly_n = 1;
    CLI::App* poly_cmd = app.add_subcommand("poly", "integer polynomial families");
    poly_cmd->add_option("--kind", poly_kind)->required()->check(CLI::IsMember({"C", "D", "A", "f", "T", "U"}));
    poly_cmd->add_option("n", poly_n)->required();

    // check
    std::string check_name;
    long ck_m_max = -1, ck_n_max = -1, ck_l_max = -1, ck_p = 0, ck_p_max = -1, ck_grid = -1;
    long ck_from = 2, ck_to = 12;
    std::size_t max_ces = 5;
    CLI::App* check_cmd = app.add_subcommand("check", "verification sweeps");
    check_cmd->add_option("name", check_name)->required()
        ->check(CLI::IsMember({"thm11", "thm12", "cor11", "monotone", "hermite-glaisher", "fleck",
                               "catalan", "lemma21", "eq22", "gould", "raabe", "lemma32", "cheb",
                               "factor", "uvrec", "closed", "gs", "lemma33", "harmonic", "euler16",
                               "special38", "tables"}));
    check_cmd->add_option("--m-max", ck_m_max);
    check_cmd->add_option("--n-max", ck_n_max);
    check_cmd->add_option("--l-max", ck_l_max);
    check_cmd->add_option("--p", ck_p, "restrict to a single prime");
    check_cmd->add_option("--p-max", ck_p_max);
    check_cmd->add_option("--grid", ck_grid);
    check_cmd->add_option("--from", ck_from);
    check_cmd->add_option("--to", ck_to);
    check_cmd->add_option("--max-counterexamples", max_ces);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sum_cmd->parsed()) {
            SumVariant v = variant == "plain" ? SumVariant::plain
                         : variant == "alt" ? SumVariant::alternate
                         : variant == "bracket" ? SumVariant::bracket
                                                : SumVariant::star;
            SumQuery query{sum_n, sum_r, sum_m, v};
            ojson doc = envelope("sum", {{"n", std::to_string(sum_n)},
                                         {"r", std::to_string(sum_r)},
                                         {"m", std::to_string(sum_m)},
                                         {"variant", variant}});
            ojson values;
            values["result"] = query.eval().get_str();
            return finish_plain(std::move(doc), std::move(values));
        }

        if (coeffs_cmd->parsed()) {
            CoeffKind kind = coeff_kind == "a" ? CoeffKind::a
                           : coeff_kind == "b" ? CoeffKind::b
                           : coeff_kind == "c" ? CoeffKind::c
                                               : CoeffKind::d;
            CoeffRow row = coeff_row(coeffs_m, kind);
            ojson doc = envelope("coeffs", {{"m", std::to_string(coeffs_m)}, {"kind", coeff_kind}});
            ojson values;
            values["m"] = std::to_string(row.m);
            values["kind"] = coeff_kind;
            ojson vals = ojson::array();
            for (const BigInt& v : row.values) vals.push_back(v.get_str());
            values["values"] = std::move(vals);
            return finish_plain(std::move(doc), std::move(values));
        }

        if (table_cmd->parsed()) {
            if (table_format == "csv") {
                std::cout << table_csv(table_which, table_from, table_to);
                return 0;
            }
            ojson doc = envelope("table", {{"which", std::to_string(table_which)},
                                           {"from", std::to_string(table_from)},
                                           {"to", std::to_string(table_to)},
                                           {"format", table_format}});
            ojson values;
            values["which"] = std::to_string(table_which);
            values["rows"] = table_rows_json(table_which, table_from, table_to);
            return finish_plain(std::move(doc), std::move(values));
        }

        if (useq_cmd->parsed() || vseq_cmd->parsed()) {
            bool is_u = useq_cmd->parsed();
            UVSeq seq = is_u ? u_seq({uv_m, uv_n, uv_q}, uv_lmax) : v_seq({uv_m, uv_n, uv_q}, uv_lmax);
            ojson doc = envelope(is_u ? "useq" : "vseq",
                                 {{"m", std::to_string(uv_m)},
                                  {"n", std::to_string(uv_n)},
                                  {"q", std::to_string(uv_q)},
                                  {"lmax", std::to_string(uv_lmax)}});
            ojson values;
            ojson vals = ojson::array();
            for (const BigRat& v : seq.values) vals.push_back(v.str());
            values["values"] = std::move(vals);
            return finish_plain(std::move(doc), std::move(values));
        }

        if (poly_cmd->parsed()) {
            IntPoly p = poly_kind == "C" ? c_poly(poly_n)
                      : poly_kind == "D" ? d_poly(poly_n)
                      : poly_kind == "A" ? a_poly(poly_n)
                      : poly_kind == "f" ? f_char(poly_n)
                      : poly_kind == "T" ? cheb_T(poly_n)
                                         : cheb_U(poly_n);
            ojson doc = envelope("poly", {{"kind", poly_kind}, {"n", std::to_string(poly_n)}});
            ojson values;
            values["kind"] = poly_kind;
            values["n"] = std::to_string(poly_n);
            ojson coeffs = ojson::array();
            for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
            values["coefficients"] = std::move(coeffs);
            values["pretty"] = p.str();
            return finish_plain(std::move(doc), std::move(values));
        }

        // check
        auto dflt = [](long v, long d) { return v < 0 ? d : v; };
        std::vector<std::pair<std::string, std::string>> params{{"name", check_name}};
        auto add_param = [&params](const std::string& k, long v) {
            params.emplace_back(k, std::to_string(v));
        };
        CheckReport report("");
        if (check_name == "thm11") {
            long mm = dflt(ck_m_max, 12), nn = dflt(ck_n_max, 40);
            add_param("m-max", mm); add_param("n-max", nn);
            report = sweeps::thm11(mm, nn);
        } else if (check_name == "thm12") {
            long mm = dflt(ck_m_max, 12), nn = dflt(ck_n_max, 40);
            add_param("m-max", mm); add_param("n-max", nn);
            report = sweeps::thm12(mm, nn);
        } else if (check_name == "cor11") {
            long mm = dflt(ck_m_max, 12), nn = dflt(ck_n_max, 40);
            add_param("m-max", mm); add_param("n-max", nn);
            report = sweeps::cor11(mm, nn);
        } else if (check_name == "monotone") {
            long mm = dflt(ck_m_max, 12), nn = dflt(ck_n_max, 40);
            add_param("m-max", mm); add_param("n-max", nn);
            report = sweeps::monotone(mm, nn);
        } else if (check_name == "hermite-glaisher") {
            long nn = dflt(ck_n_max, 40);
            auto ps = prime_selection(ck_p, sweeps::default_primes());
            if (ck_p != 0) add_param("p", ck_p);
            add_param("n-max", nn);
            report = sweeps::hermite_glaisher(ps, nn);
        } else if (check_name == "fleck") {
            long nn = dflt(ck_n_max, 80);
            auto ps = prime_selection(ck_p, {2, 3, 5, 7, 11, 13});
            if (ck_p != 0) add_param("p", ck_p);
            add_param("n-max", nn);
            report = sweeps::fleck_sweep(ps, nn);
        } else if (check_name == "catalan") {
            auto ps = prime_selection(ck_p, {3, 5, 7, 11, 13, 17, 19});
            if (ck_p != 0) add_param("p", ck_p);
            report = sweeps::catalan_congruence(ps);
        } else if (check_name == "lemma21") {
            long ll = dflt(ck_l_max, 8), gg = dflt(ck_grid, 10);
            add_param("l-max", ll); add_param("grid", gg);
            report = sweeps::lemma21(ll, gg);
        } else if (check_name == "eq22") {
            long mm = dflt(ck_m_max, 12), gg = dflt(ck_grid, 10);
            add_param("m-max", mm); add_param("grid", gg);
            report = sweeps::curious(mm, gg);
        } else if (check_name == "gould") {
            long mm = dflt(ck_m_max, 40);
            add_param("m-max", mm);
            report = sweeps::gould(mm);
        } else if (check_name == "raabe") {
            long mm = dflt(ck_m_max, 6), nn = dflt(ck_n_max, 10);
            add_param("m-max", mm); add_param("n-max", nn);
            report = sweeps::raabe(mm, nn);
        } else if (check_name == "lemma32") {
            long nn = dflt(ck_n_max, 12), gg = dflt(ck_grid, 12);
            add_param("n-max", nn); add_param("grid", gg);
            report = sweeps::lemma32(nn, gg);
        } else if (check_name == "cheb") {
            long nn = dflt(ck_n_max, 40);
            add_param("n-max", nn);
            report = sweeps::cheb_relations(nn);
        } else if (check_name == "factor") {
            long nn = dflt(ck_n_max, 60);
            add_param("n-max", nn);
            report = sweeps::factorization(nn);
        } else if (check_name == "uvrec") {
            long mm = dflt(ck_m_max, 10);
            add_param("m-max", mm);
            report = sweeps::uv_recurrences(mm);
        } else if (check_name == "closed") {
            long mm = dflt(ck_m_max, 10);
            add_param("m-max", mm);
            report = sweeps::closed_forms(mm);
        } else if (check_name == "gs") {
            long mm = dflt(ck_m_max, 10);
            auto ps = prime_selection(ck_p, sweeps::default_primes());
            if (ck_p != 0) add_param("p", ck_p);
            add_param("m-max", mm);
            report = sweeps::gs(ps, mm);
        } else if (check_name == "lemma33") {
            long mm = dflt(ck_m_max, 10);
            auto ps = prime_selection(ck_p, sweeps::default_primes());
            if (ck_p != 0) add_param("p", ck_p);
            add_param("m-max", mm);
            report = sweeps::lemma33(ps, mm);
        } else if (check_name == "harmonic") {
            long mm = dflt(ck_m_max, 10);
            auto ps = prime_selection(ck_p, sweeps::default_primes());
            if (ck_p != 0) add_param("p", ck_p);
            add_param("m-max", mm);
            report = sweeps::harmonic(ps, mm);
        } else if (check_name == "euler16") {
            long mm = dflt(ck_m_max, 10);
            auto ps = prime_selection(ck_p, sweeps::default_primes());
            if (ck_p != 0) add_param("p", ck_p);
            add_param("m-max", mm);
            report = sweeps::euler16(ps, mm);
        } else if (check_name == "special38") {
            long pp = dflt(ck_p_max, 31), nn = dflt(ck_n_max, 12);
            add_param("p-max", pp); add_param("n-max", nn);
            report = sweeps::special38(pp, nn);
        } else if (check_name == "tables") {
            add_param("from", ck_from); add_param("to", ck_to);
            report = sweeps::tables(ck_from, ck_to);
        } else {
            std::cerr << "unknown check: " << check_name << "\n";
            return 2;
        }
        return finish_check(envelope("check", params), report, max_ces);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
