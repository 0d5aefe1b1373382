#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "gspeyer/cli.hpp"
#include "gspeyer/enumerate.hpp"
#include "gspeyer/graph.hpp"

using namespace gspeyer;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) {
        std::ofstream out(path);
        out << content;
    }
    std::string read() const {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("compute record byte-exactness") {
    CHECK(compute_record("C~") == "C~,4,6,1,t^3+2*t^2+2*t");
    CHECK(compute_record("D~{") == "D~{,5,10,0,5*t^4+15*t^3+15*t^2+6*t");
}

TEST_CASE("compute on a small file") {
    TempFile in("in.g6"), out("out.csv");
    in.write("C~\nD~{\n");
    std::string err;
    CHECK(run({"compute", "--input", in.path, "--output", out.path}, nullptr, &err) == 0);
    CHECK(out.read() == "C~,4,6,1,t^3+2*t^2+2*t\nD~{,5,10,0,5*t^4+15*t^3+15*t^2+6*t\n");
}

TEST_CASE("compute: empty file gives empty CSV, exit 0") {
    TempFile in("empty.g6"), out("empty.csv");
    in.write("");
    CHECK(run({"compute", "--input", in.path, "--output", out.path}) == 0);
    CHECK(out.read().empty());
}

TEST_CASE("compute: bad lines go to the sidecar") {
    TempFile in("bad.g6"), out("bad.csv");
    in.write("C~\n!!notagraph\nD~{\n");
    std::string err;
    CHECK(run({"compute", "--input", in.path, "--output", out.path}, nullptr, &err) == 0);
    CHECK(out.read() == "C~,4,6,1,t^3+2*t^2+2*t\nD~{,5,10,0,5*t^4+15*t^3+15*t^2+6*t\n");
    std::ifstream sc(out.path + ".errors");
    REQUIRE(sc.good());
    std::string line;
    std::getline(sc, line);
    CHECK(line.find("line 2") == 0);
    std::remove((out.path + ".errors").c_str());
}

TEST_CASE("compute: threads do not change the bytes") {
    TempFile in("par.g6"), out1("par1.csv"), out4("par4.csv");
    std::string lines;
    for (int r = 3; r <= 8; ++r) lines += write_graph6(wheel(r)) + "\n";
    in.write(lines);
    CHECK(run({"compute", "--input", in.path, "--output", out1.path, "--threads", "1"}) == 0);
    CHECK(run({"compute", "--input", in.path, "--output", out4.path, "--threads", "4"}) == 0);
    CHECK(out1.read() == out4.read());
    CHECK(!out1.read().empty());
}

TEST_CASE("loops and bridges emit g = 0") {
    // path on 2 vertices: single bridge, graph6 "A_"
    CHECK(compute_record(write_graph6(path_graph(2))).find(",0,0") != std::string::npos);
}

TEST_CASE("family subcommand") {
    std::string out;
    CHECK(run({"family", "--name", "wheel", "--param", "4"}, &out) == 0);
    CHECK(out.find("MATCH") != std::string::npos);
    CHECK(out.find("MISMATCH") == std::string::npos);
    CHECK(run({"family", "--name", "k3n", "--param", "5"}, &out) == 0);
    CHECK(out.find("N2 = -5") != std::string::npos);
    CHECK(run({"family", "--name", "wheel", "--param", "3", "--emit", "g6"}, &out) == 0);
    CHECK(out == "C~\n");
    std::string err;
    CHECK(run({"family", "--name", "nosuch", "--param", "1"}, &out, &err) != 0);
}

TEST_CASE("decompose subcommand") {
    std::string out;
    CHECK(run({"decompose", "--graph", "C~"}, &out) == 0);
    CHECK(out == "-3 Schubert(6, {1, 2, 3}) + 4 Schubert(6, {1, 2, 4})\n");
}

TEST_CASE("verify subcommand") {
    TempFile in("ver.g6");
    in.write("C~\n");
    std::string out, err;
    CHECK(run({"verify", "--suite", "thm15", "--input", in.path}, &out, &err) == 0);
    CHECK(out.find("thm15,C~,1,1,agrees") != std::string::npos);
    CHECK(err.find("violate") != std::string::npos);  // summary line
    CHECK(run({"verify", "--suite", "all", "--input", in.path}, &out, &err) == 0);
    std::string err2;
    CHECK(run({"verify", "--suite", "nosuch", "--input", in.path}, &out, &err2) != 0);
}

TEST_CASE("stats round trip") {
    TempFile in("st.g6"), csv("st.csv");
    in.write("C~\nD~{\n");
    CHECK(run({"compute", "--input", in.path, "--output", csv.path}) == 0);
    std::string out;
    CHECK(run({"stats", "--input", csv.path}, &out) == 0);
    CHECK(out.find("0,1") != std::string::npos);
    CHECK(out.find("1,1") != std::string::npos);
    CHECK(out.find("min N2 = 0 (witness D~{)") != std::string::npos);
    CHECK(out.find("max N2 = 1 (witness C~)") != std::string::npos);
}

TEST_CASE("edge capacity guard from the environment") {
    TempFile in("cap.g6"), out("cap.csv");
    in.write("C~\n");  // 6 edges
    setenv("GSPEYER_EDGE_CAP", "5", 1);
    std::string err;
    CHECK(run({"compute", "--input", in.path, "--output", out.path}, nullptr, &err) == 0);
    unsetenv("GSPEYER_EDGE_CAP");
    CHECK(out.read().empty());
    CHECK(err.find("1 graph(s) failed") != std::string::npos);
    std::remove((out.path + ".errors").c_str());
}

TEST_CASE("family emit csv") {
    std::string out;
    CHECK(run({"family", "--name", "wheel", "--param", "3", "--emit", "csv"}, &out) == 0);
    CHECK(out == "C~,4,6,1,t^3+2*t^2+2*t\n");
    // conjectural closed forms are marked in the report
    CHECK(run({"family", "--name", "complete", "--param", "41"}, &out) != 1);
    // dedicated conjectural label appears beyond the verified range
    std::string rep;
    run({"family", "--name", "prism", "--param", "4"}, &rep);
    CHECK(rep.find("conjectural") != std::string::npos);
    CHECK(rep.find("MATCH") != std::string::npos);
}

TEST_CASE("stats histogram equals a direct recount") {
    auto corpus = corpus_graphs(4, 7, 12);
    TempFile in("hist.g6"), csv("hist.csv");
    std::string lines;
    for (const Graph& g : corpus) lines += write_graph6(g) + "\n";
    in.write(lines);
    CHECK(run({"compute", "--input", in.path, "--output", csv.path}) == 0);
    std::map<long long, long long> recount;
    {
        std::ifstream f(csv.path);
        std::string line;
        while (std::getline(f, line)) {
            size_t a = line.find(',');
            a = line.find(',', a + 1);
            a = line.find(',', a + 1);
            size_t b = line.find(',', a + 1);
            ++recount[std::stoll(line.substr(a + 1, b - a - 1))];
        }
    }
    std::string out;
    CHECK(run({"stats", "--input", csv.path}, &out) == 0);
    for (auto& [v, c] : recount)
        CHECK(out.find(std::to_string(v) + "," + std::to_string(c) + "\n") !=
              std::string::npos);
}

TEST_CASE("unreadable input is an error") {
    std::string err;
    CHECK(run({"compute", "--input", "no_such_file.g6", "--output", "x.csv"}, nullptr, &err) !=
          0);
    CHECK(err.find("error") != std::string::npos);
}
