#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "configcomplex/cli.hpp"
#include "configcomplex/constructions.hpp"
#include "configcomplex/correspondence.hpp"
#include "configcomplex/formats.hpp"
#include "oracles.hpp"

using namespace configcomplex;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "configcomplex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("configcomplex-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& contents) const {
        const auto p = (path / name).string();
        write_file(p, contents);
        return p;
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

template <class T, class W>
std::string to_text(const T& value, W writer) {
    std::ostringstream os;
    writer(os, value);
    return os.str();
}

}  // namespace

TEST_CASE("natural order") {
    CHECK(natural_less("2", "10"));
    CHECK_FALSE(natural_less("10", "2"));
    CHECK(natural_less("(0,9)", "(0,10)"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("p2", "p10"));
    CHECK_FALSE(natural_less("x", "x"));
}

TEST_CASE("configuration files round-trip") {
    for (const auto& c : {oracle::cyclic_plane(7, {0, 1, 3}), oracle::affine_prime(3), oracle::cycle_config(12),
                          config_from_semifield(semifield_from_field(4))}) {
        const std::string text = to_text(c, write_config);
        std::istringstream in(text);
        const auto back = read_config(in);
        CHECK(to_text(back, write_config) == text);
        CHECK(is_isomorphic(back, c).has_value());
    }

    const auto c = oracle::cycle_config(12);
    std::istringstream in(to_text(c, write_config));
    const auto back = read_config(in);
    CHECK(back.point_names()[2] == "p2");
    CHECK(back.point_names()[10] == "p10");
}

TEST_CASE("configuration parse errors carry line numbers") {
    std::istringstream bad("k 2\nn 1\nx y\n");
    CHECK_THROWS_WITH_AS(read_config(bad), doctest::Contains("line 3"), FormatError);
    std::istringstream bad_color("k 2\nn 1\na b 3\n");
    CHECK_THROWS_AS(read_config(bad_color), FormatError);
    std::istringstream comments("# comment\nk 2\n\nn 2\np q 1 # trailing\nr q 2\np s 2\nr s 1\n");
    CHECK_NOTHROW(read_config(comments));
}

TEST_CASE("code files") {
    const auto l = sidon_to_code({FiniteAbelianGroup::cyclic(7), {{0}, {1}, {3}}});
    const std::string text = to_text(l, write_code);
    std::istringstream in(text);
    const auto cf = read_code(in);
    CHECK(cf.was_canonical);
    CHECK(cf.code == l);
    CHECK(to_text(cf.code, write_code) == text);

    std::istringstream raw("2\n1 9 -10\n1 2 -3\n");
    const auto messy = read_code(raw);
    CHECK_FALSE(messy.was_canonical);
    CHECK(messy.code == l);
}

TEST_CASE("difference set, sidon and semifield files") {
    const auto d = singer_difference_set(3);
    const std::string dt = to_text(d, write_difference_set);
    std::istringstream din(dt);
    CHECK(to_text(read_difference_set(din), write_difference_set) == dt);

    const SidonSet s{FiniteAbelianGroup({3, 3}), {{0, 0}, {0, 1}, {1, 0}}};
    const std::string st = to_text(s, write_sidon);
    std::istringstream sin(st);
    const auto sb = read_sidon(sin);
    CHECK(sb.group == s.group);
    CHECK(sb.elements == s.elements);
    CHECK(to_text(sb, write_sidon) == st);

    std::istringstream commas("group 3 3\n0,0\n0,1\n1,0\n");
    CHECK(read_sidon(commas).elements == s.elements);

    const auto f = semifield_from_field(4);
    const std::string ft = to_text(f, write_semifield);
    std::istringstream fin(ft);
    const auto fb = read_semifield(fin);
    CHECK(fb.add == f.add);
    CHECK(fb.mul == f.mul);
}

TEST_CASE("complex files") {
    const auto x = quotient_complex(oracle::cyclic_plane(7, {0, 1, 3}));
    const std::string text = to_text(x, write_complex);
    CHECK(text.starts_with("simplicial-complex\nvertices 7\n"));
    CHECK(text.find("+0 0 1 3\n") != std::string::npos);
    std::istringstream in(text);
    CHECK(read_complex(in) == x.complex);

    std::istringstream generic(to_text(x.complex, write_facet_list));
    CHECK(read_complex(generic).facets() == x.complex.facets());

    // Degenerate inputs keep every provenance line.
    const auto hex = quotient_complex(oracle::cycle_config(3));
    const std::string ht = to_text(hex, write_complex);
    CHECK(ht.find("facets 6\n") != std::string::npos);
    std::istringstream hin(ht);
    CHECK(read_complex(hin).facets().size() == 3);
}

TEST_CASE("missing files are usage errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/configcomplex/file"), FormatError);
    const auto r = run({"validate", "config", "/nonexistent/configcomplex/file"});
    CHECK(r.code == 2);
    CHECK(r.err.starts_with("error:"));
}

TEST_CASE("cli: singer plane and complex check") {
    TempDir tmp;
    const auto cfg = tmp / "fano.cfg";
    REQUIRE(run({"construct", "singer", "--q", "2", "-o", cfg}).code == 0);
    const auto check = run({"complex", "check", cfg});
    CHECK(check.code == 0);
    CHECK(check.out.find("vertices                      info  7") != std::string::npos);
    CHECK(check.out.find("14 (7 positive + 7 negative, size 3)") != std::string::npos);
    CHECK(check.out.find("H_1                           pass  Z^2") != std::string::npos);
    CHECK(check.out.find("free action                   pass  Z_7") != std::string::npos);
    CHECK(check.out.ends_with("all required properties hold\n"));

    const auto json = run({"--format", "json", "complex", "check", cfg});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"H_1\"") != std::string::npos);

    const auto x = tmp / "fano.cx";
    REQUIRE(run({"complex", "build", cfg, "-o", x}).code == 0);
    const auto h = run({"complex", "homology", x, "--max-dim", "2"});
    CHECK(h.code == 0);
    CHECK(h.out == "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");

    // Byte-identical reruns.
    CHECK(run({"construct", "singer", "--q", "3"}).out == run({"construct", "singer", "--q", "3"}).out);
}

TEST_CASE("cli: validation exit codes") {
    TempDir tmp;
    const auto bad = tmp.file("bad.ds", "group 7\n0\n1\n2\n");
    const auto r = run({"validate", "diffset", bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("difference 1 = 1 - 0 = 2 - 1") != std::string::npos);

    const auto good = tmp.file("good.ds", "group 7\n0\n1\n3\n");
    CHECK(run({"validate", "diffset", good}).code == 0);

    const auto sidon = tmp.file("s.sidon", "group 8\n0\n2\n4\n");
    CHECK(run({"validate", "sidon", sidon}).code == 1);

    const auto code = tmp.file("c.code", "2\n1 9 -10\n1 2 -3\n");
    const auto vc = run({"validate", "code", code});
    CHECK(vc.code == 0);
    CHECK(vc.err.find("warning") != std::string::npos);

    const auto garbled = tmp.file("g.cfg", "k two\n");
    CHECK(run({"validate", "config", garbled}).code == 2);
    CHECK(run({"construct", "semifield"}).code == 2);
    CHECK(run({"construct", "semifield", "--field", "6"}).code == 1);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"complex", "homology"}).code == 2);
}

TEST_CASE("cli: correspondence commands") {
    TempDir tmp;
    const auto cfg = tmp / "s3.cfg";
    REQUIRE(run({"construct", "singer", "--q", "3", "-o", cfg}).code == 0);
    const auto rt = run({"correspond", "roundtrip", cfg});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("isomorphic (identity color map)") != std::string::npos);

    const auto code = tmp / "s3.code";
    REQUIRE(run({"correspond", "config-to-code", cfg, "-o", code}).code == 0);
    const auto sidon = tmp / "s3.sidon";
    REQUIRE(run({"correspond", "code-to-sidon", code, "-o", sidon}).code == 0);
    CHECK(run({"validate", "sidon", sidon}).code == 0);
    const auto code2 = tmp / "s3b.code";
    REQUIRE(run({"correspond", "sidon-to-code", sidon, "-o", code2}).code == 0);
    CHECK(read_file(code) == read_file(code2));
    const auto back = tmp / "back.cfg";
    REQUIRE(run({"correspond", "code-to-config", code, "-o", back}).code == 0);
    CHECK(run({"validate", "config", back}).code == 0);

    const auto rec = run({"correspond", "recover", cfg});
    CHECK(rec.code == 0);
    CHECK(rec.out.starts_with("group 13\n"));

    const auto affine = tmp / "gf3.cfg";
    REQUIRE(run({"construct", "semifield", "--field", "3", "-o", affine}).code == 0);
    CHECK(run({"correspond", "recover", affine}).code == 1);
}

TEST_CASE("cli: searches") {
    const auto d = run({"search", "diffsets", "--n", "7", "--size", "3"});
    CHECK(d.code == 0);
    CHECK(d.out == "0 1 3\n0 1 5\n");
    const auto none = run({"search", "diffsets", "--n", "8", "--size", "3"});
    CHECK(none.out.starts_with("# none: order mismatch"));
    const auto s = run({"search", "sidon", "--group", "3", "--size", "2"});
    CHECK(s.code == 0);
    CHECK(s.out == "# group Z_3, 1 set(s)\n0 1\n");
    const auto s33 = run({"search", "sidon", "--group", "3x3", "--size", "3"});
    CHECK(s33.code == 0);
    CHECK(s33.out.starts_with("# group Z_3 x Z_3"));
}
