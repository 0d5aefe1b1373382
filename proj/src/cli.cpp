#include "gspeyer/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "gspeyer/enumerate.hpp"
#include "gspeyer/invariants.hpp"
#include "gspeyer/speyer.hpp"
#include "gspeyer/verify.hpp"

namespace gspeyer {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int edge_cap_from_env() {
    const char* env = std::getenv("GSPEYER_EDGE_CAP");
    if (!env) return kEdgeCapacity;
    int cap = std::atoi(env);
    if (cap <= 0 || cap > kEdgeCapacity) return kEdgeCapacity;
    return cap;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (!t.empty()) lines.push_back(t);
    }
    return lines;
}

struct ComputeResult {
    bool ok = false;
    std::string record;
    std::string error;
};

ComputeResult compute_one(const std::string& token, int cap) {
    ComputeResult r;
    try {
        r.record = compute_record(token, cap);
        r.ok = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

int cmd_compute(const std::string& input, const std::string& output, int threads,
                std::ostream& err) {
    int cap = edge_cap_from_env();
    std::vector<std::string> lines = read_lines(input);
    std::vector<ComputeResult> results(lines.size());
    threads = std::max(1, threads);
    if (threads == 1) {
        for (size_t i = 0; i < lines.size(); ++i) results[i] = compute_one(lines[i], cap);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= lines.size()) return;
                results[i] = compute_one(lines[i], cap);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    std::ofstream sidecar;
    size_t failures = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (results[i].ok) {
            out << results[i].record << "\n";
        } else {
            if (!sidecar.is_open()) sidecar.open(output + ".errors");
            sidecar << "line " << (i + 1) << ": " << results[i].error << "\n";
            ++failures;
        }
    }
    if (failures)
        err << failures << " graph(s) failed; see " << output << ".errors" << "\n";
    return 0;
}

int cmd_family(const std::string& name, const std::string& param, const std::string& emit,
               std::ostream& out) {
    std::optional<Graph> g;
    std::string graph_error;
    try {
        g = family(name, param);
    } catch (const std::invalid_argument& e) {
        // capacity overruns still allow closed-form output; bad parameters
        // or unknown families do not
        graph_error = e.what();
        if (graph_error.find("capacity") == std::string::npos) throw;
    }
    if (emit == "g6") {
        if (!g) throw std::runtime_error(graph_error);
        out << write_graph6(*g) << "\n";
        return 0;
    }
    std::optional<Poly> gp;
    if (g) gp = g_recursive(Matroid::graphic(*g));
    if (emit == "csv") {
        if (!gp) throw std::runtime_error(graph_error);
        out << write_graph6(*g) << "," << g->vertex_count << "," << g->edge_count() << ","
            << fp2(*gp).str() << "," << gp->to_string() << "\n";
        return 0;
    }
    out << "family " << name << " " << param;
    if (g) {
        out << ": " << g->vertex_count << " vertices, " << g->edge_count() << " edges";
        if (g->is_simple() && g->vertex_count <= 62) out << ", graph6 " << write_graph6(*g);
    } else {
        out << ": " << graph_error;
    }
    out << "\n";
    if (gp) {
        out << "g = " << gp->to_string() << "\n";
        out << "N2 = " << fp2(*gp).str() << "\n";
    }
    bool have_closed = false;
    try {
        ClosedForm cf = closed_form(name, param);
        have_closed = true;
        out << "closed form = " << cf.g.to_string();
        if (cf.conjectural) out << " (conjectural)";
        out << "\n";
        if (!gp) {
            out << "N2 = " << fp2(cf.g).str() << "\n";
        } else {
            out << (cf.g == *gp ? "MATCH" : "MISMATCH") << "\n";
        }
    } catch (const std::invalid_argument&) {
        // no closed form for this family
    }
    if (!g && !have_closed) throw std::runtime_error(graph_error);
    return 0;
}

int cmd_decompose(const std::string& g6, std::ostream& out) {
    Graph g = parse_graph6(g6);
    SchubertDecomposition dec = schubert_decomposition(Matroid::graphic(g));
    out << dec.to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& input, const std::string& output,
               std::ostream& out, std::ostream& err) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = known_suites();
    else
        suites = {suite};
    for (const auto& s : suites) {
        auto known = known_suites();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::runtime_error("unknown suite: " + s);
    }
    std::vector<std::string> lines = read_lines(input);
    std::ostringstream csv;
    size_t agrees = 0, violations = 0, skips = 0;
    for (const auto& line : lines) {
        Graph g = parse_graph6(line);
        for (const auto& s : suites) {
            for (const Finding& f : run_suite(s, g)) {
                csv << f.csv_line() << "\n";
                if (f.verdict == Verdict::Agrees) ++agrees;
                if (f.verdict == Verdict::Violates) ++violations;
                if (f.verdict == Verdict::Skipped) ++skips;
            }
        }
    }
    if (output.empty()) {
        out << csv.str();
    } else {
        std::ofstream of(output);
        if (!of) throw std::runtime_error("cannot open output file: " + output);
        of << csv.str();
    }
    err << "findings: " << agrees << " agree, " << violations << " violate, " << skips
        << " skipped\n";
    return 0;  // violations are findings, not errors
}

int cmd_stats(const std::string& input, std::ostream& out) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    std::map<long long, long long> hist;
    std::string line;
    long long minv = 0, maxv = 0;
    std::string min_witness, max_witness;
    bool any = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        // g6,v,e,N2,poly
        std::vector<std::string> fields;
        size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            size_t comma = t.find(',', pos);
            if (comma == std::string::npos)
                throw std::runtime_error("malformed CSV at line " + std::to_string(lineno));
            fields.push_back(t.substr(pos, comma - pos));
            pos = comma + 1;
        }
        long long n2 = 0;
        try {
            n2 = std::stoll(fields[3]);
        } catch (...) {
            throw std::runtime_error("malformed N2 field at line " + std::to_string(lineno));
        }
        ++hist[n2];
        if (!any || n2 < minv) {
            minv = n2;
            min_witness = fields[0];
        }
        if (!any || n2 > maxv) {
            maxv = n2;
            max_witness = fields[0];
        }
        any = true;
    }
    out << "N2,count\n";
    for (auto& [v, c] : hist) out << v << "," << c << "\n";
    if (any) {
        out << "min N2 = " << minv << " (witness " << min_witness << ")\n";
        out << "max N2 = " << maxv << " (witness " << max_witness << ")\n";
    }
    return 0;
}

}  // namespace

std::string compute_record(const std::string& g6_token, int edge_cap) {
    Graph g = parse_graph6(g6_token);
    check_edge_capacity(g.edge_count(), edge_cap);
    Poly gp;
    if (g.edge_count() > 0) gp = g_recursive(Matroid::graphic(g));
    Int n2 = g.edge_count() > 0 ? fp2(gp) : Int(0);
    std::ostringstream os;
    os << g6_token << "," << g.vertex_count << "," << g.edge_count() << "," << n2.str() << ","
       << gp.to_string();
    return os.str();
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Speyer g-polynomials of graphs and matroids"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "batch-compute a graph6 file to CSV");
    std::string in_path, out_path;
    int threads = 1;
    compute->add_option("--input", in_path, "graph6 file, one graph per line")->required();
    compute->add_option("--output", out_path, "CSV output path")->required();
    compute->add_option("--threads", threads, "worker threads");

    auto* fam = app.add_subcommand("family", "generate a named family member");
    std::string fam_name, fam_param, fam_emit;
    fam->add_option("--name", fam_name, "family name")->required();
    fam->add_option("--param", fam_param, "family parameter")->required();
    fam->add_option("--emit", fam_emit, "g6 or csv (default: report)");

    auto* dec = app.add_subcommand("decompose", "Schubert decomposition of a graph");
    std::string dec_g6;
    dec->add_option("--graph", dec_g6, "graph6 string")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite over a graph6 file");
    std::string ver_suite, ver_in, ver_out;
    ver->add_option("--suite", ver_suite, "suite name or 'all'")->required();
    ver->add_option("--input", ver_in, "graph6 file")->required();
    ver->add_option("--output", ver_out, "findings CSV path (default: stdout)");

    auto* st = app.add_subcommand("stats", "N2 histogram of a compute CSV");
    std::string st_in;
    st->add_option("--input", st_in, "compute CSV")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code;
    }
    try {
        if (*compute) return cmd_compute(in_path, out_path, threads, err);
        if (*fam) return cmd_family(fam_name, fam_param, fam_emit, out);
        if (*dec) return cmd_decompose(dec_g6, out);
        if (*ver) return cmd_verify(ver_suite, ver_in, ver_out, out, err);
        if (*st) return cmd_stats(st_in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gspeyer
