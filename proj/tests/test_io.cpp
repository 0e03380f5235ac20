// Text formats: cycles and complexes round-trip exactly, parse errors carry
// the offending line, and the shipped data files match the builders that
// generated them.  File tests run with the repository root as working
// directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "addchow/complex_io.hpp"
#include "addchow/cycle_io.hpp"
#include "addchow/cycles.hpp"
#include "addchow/error.hpp"
#include "addchow/fixtures.hpp"
#include "addchow/span_builder.hpp"
#include "addchow/totaro.hpp"

using namespace addchow;

namespace {
const ModulusRing M2 = ModulusRing::monomial(2);
const RatFunc X = RatFunc::var("x");
const RatFunc Y = RatFunc::var("y");
const RatFunc T1 = RatFunc::var("t1");
const RatFunc S1 = RatFunc::var("s1");
}  // namespace

TEST_CASE("cycles round-trip through their text form") {
    FormalCycle x = point_cycle(M2, {X}, {ProjValue(T1)});
    FormalCycle y = point_cycle(M2, {Y}, {ProjValue(S1)});
    std::vector<FormalCycle> samples{
        x,
        delta(x),
        totaro_c2(RatFunc::var("a"), RatFunc::var("b1"), RatFunc::var("b2")),
        shuffle_product(x, y),   // two affine coordinates, decomposable terms
        extra_degenerate_concat(x, y),
        cyclic_shuffle(x, y),
        zero_cycle(SlotSpace{M2, 3}),
    };
    for (const FormalCycle& z : samples) {
        FormalCycle back = cycle_from_text(cycle_to_text(z));
        CHECK(back == z);
        CHECK(back.space() == z.space());
    }
    // the decomposable flag survives the round trip (mu_push still accepts it)
    FormalCycle shuffled = cycle_from_text(cycle_to_text(shuffle_product(x, y)));
    CHECK(mu_push(shuffled) == mu_push(shuffle_product(x, y)));
}

TEST_CASE("frozen rendering of a two-coordinate product cycle") {
    FormalCycle x = point_cycle(M2, {X}, {ProjValue(T1)});
    FormalCycle y = point_cycle(M2, {Y}, {ProjValue(S1)});
    CHECK(cycle_to_text(shuffle_product(x, y)) ==
          "cycle\n"
          "ring 2 2\n"
          "slots 2\n"
          "symbols s1 t1 x y\n"
          "term -1 | x, y | s1 ; t1 | decomposable\n"
          "term 1 | x, y | t1 ; s1 | decomposable\n"
          "end\n");
}

TEST_CASE("curve parameter naming avoids the cycle's symbols") {
    FormalCycle c2 =
        totaro_c2(RatFunc::var("s"), RatFunc::var("b1"), RatFunc::var("b2"));
    CHECK_THROWS_AS(cycle_to_text(c2), DomainError);  // default param is "s"
    FormalCycle back = cycle_from_text(cycle_to_text(c2, "u"));
    CHECK(back == c2);
}

TEST_CASE("cycle parser rejects malformed input with the line quoted") {
    CHECK_THROWS_AS(cycle_from_text("cycle\nring 2\nslots 1\n"), ParseError);
    CHECK_THROWS_AS(cycle_from_text("cycle\nring 2\nslots 1\nbogus 3\nend\n"),
                    ParseError);
    CHECK_THROWS_AS(
        cycle_from_text("cycle\nring 2\nslots 2\nsymbols x\nterm 1 | x | x\nend\n"),
        ParseError);  // one box coordinate missing
    CHECK_THROWS_AS(
        cycle_from_text("cycle\nring 2\nslots 1\nterm 1 | x | q\nend\n"),
        ParseError);  // symbols x and q never declared
    CHECK_THROWS_AS(cycle_from_text("cycle\nring 2\nslots 1\nsymbols _s\nend\n"),
                    ParseError);  // leading underscore is reserved
    CHECK_THROWS_WITH_AS(
        cycle_from_text("cycle\nring 2\nslots 1\nsymbols x\nterm 1 | x | 0\nend\n"),
        "line 5: rejected term: box coordinate lies on a face: (x; 0)",
        ParseError);  // face contact is rejected with the offending line quoted

    // a box coordinate identically 1 is degenerate and simply drops
    FormalCycle z = cycle_from_text(
        "cycle\nring 2\nslots 1\nsymbols x\nterm 1 | x | 1\nend\n");
    CHECK(z.is_zero());

    // comments and blank lines are ignored
    FormalCycle c = cycle_from_text(
        "# header\n\ncycle\nring 2\nslots 0\nsymbols x\nterm 2 | x |\nend\n");
    CHECK(c == point_cycle(M2, {X}, {}).scaled(Int(2)));
}

TEST_CASE("complexes round-trip through their text form") {
    for (unsigned long long seed : {2026ull, 2040ull, 2086ull}) {
        MixedComplex m = random_mixed_complex(seed);
        MixedComplex back = complex_from_text(complex_to_text(m));
        CHECK(complex_to_text(back) == complex_to_text(m));
        CHECK(validate(back).ok);
    }
    CHECK_THROWS_AS(complex_from_text("complex\ndim 0 1\nb 1\nend\n"), ParseError);
    CHECK_THROWS_AS(complex_from_text("complex\ndim 0 -2\nend\n"), ParseError);
}

TEST_CASE("file round trip through the temporary directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    FormalCycle c2 =
        totaro_c2(RatFunc::var("a"), RatFunc::var("b1"), RatFunc::var("b2"));
    fs::path cpath = dir / "addchow-io-test.cycle";
    write_cycle_file(cpath.string(), c2);
    CHECK(read_cycle_file(cpath.string()) == c2);
    fs::remove(cpath);

    MixedComplex m = random_mixed_complex(2031);
    fs::path mpath = dir / "addchow-io-test.cx";
    write_complex_file(mpath.string(), m);
    CHECK(complex_to_text(read_complex_file(mpath.string())) == complex_to_text(m));
    fs::remove(mpath);

    CHECK_THROWS_AS(read_cycle_file((dir / "addchow-io-missing.cycle").string()),
                    Error);
}

TEST_CASE("shipped data files match their builders") {
    CHECK(read_cycle_file("data/totaro_curve.cycle") ==
          totaro_c2(RatFunc::var("a"), RatFunc::var("b1"), RatFunc::var("b2")));
    CHECK(read_cycle_file("data/point_x_t1.cycle") ==
          point_cycle(M2, {X}, {ProjValue(T1)}));
    CHECK(read_cycle_file("data/point_y_s1.cycle") ==
          point_cycle(M2, {Y}, {ProjValue(S1)}));

    FormalCycle u = point_cycle(M2, {RatFunc::var("u")}, {});
    MixedComplex span = span_builder({u}, 6);
    CHECK(complex_to_text(read_complex_file("data/span_unit.cx")) ==
          complex_to_text(span));
}

TEST_CASE("homology table rendering, plain and structured") {
    FormalCycle x = point_cycle(M2, {X}, {ProjValue(T1)});
    MixedComplex sp = span_builder({x}, 6);
    ChainComplex col = column_complex(sp);
    CHECK(homology_text(col, 1, 3, false) ==
          "H_3: dimension 1  (chains 1)\n"
          "H_2: dimension 2  (chains 2)\n"
          "H_1: dimension 1  (chains 1)\n");
    CHECK(homology_text(col, 1, 3, true) ==
          "homology degree=3 chain_dim=1 dim=1\n"
          "homology degree=2 chain_dim=2 dim=2\n"
          "homology degree=1 chain_dim=1 dim=1\n");
}

TEST_CASE("periodicity sequence rendering carries the exactness verdict") {
    FormalCycle u = point_cycle(M2, {RatFunc::var("u")}, {});
    LESReport rep = connes_sequence(span_builder({u}, 6));
    std::string plain = les_text(rep, false);
    CHECK(plain.find("periodicity sequence over degrees [0, 1]") != std::string::npos);
    CHECK(plain.find("exact at every verified node") != std::string::npos);
    std::string structured = les_text(rep, true);
    CHECK(structured.find("sequence valid_input=1 all_exact=1 lo=0 hi=1 report_hi=3") == 0);
    size_t lines = 0;
    for (char ch : structured)
        if (ch == '\n') ++lines;
    CHECK(lines == rep.nodes.size() + 1);  // header plus one line per node
}
