#include "common.hpp"

using namespace kt;

namespace {

// the "file:line:col" prefix of a ParseError
std::string where(const std::string& text) {
    try {
        load_curve(parse_curve_spec(text, "t.curve"));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ParseError);
        const auto& m = e.message();
        const auto c2 = m.find(':', m.find(':', m.find(':') + 1) + 1);
        return m.substr(0, c2);
    }
    ADD_FAILURE() << "parsed: " << text;
    return {};
}

}  // namespace

TEST(CurveFile, RootsOverQQ) {
    const auto spec = parse_curve_spec("# comment\nlabel: my curve  \nroots: 1, 2 3,4 5, 6 # tail\n", "t");
    EXPECT_EQ(spec.label, "my curve");
    const auto C = std::get<Genus2Curve<Rational>>(load_curve(spec));
    EXPECT_EQ(C.F(), fixture_qq().F());
    EXPECT_EQ(C.label(), "my curve");
    EXPECT_EQ(C.theta(6), Rational(6));
}

TEST(CurveFile, FieldFromFileAndOverride) {
    const auto spec = parse_curve_spec("field: GF(101)\nroots: 1 2 3 4 5 6\n", "t");
    const auto C = std::get<Genus2Curve<Fp>>(load_curve(spec));
    EXPECT_EQ(C.field().p, 101u);
    EXPECT_EQ(C.F(), fixture_gf101().F());
    EXPECT_TRUE(std::holds_alternative<Genus2Curve<Rational>>(load_curve(spec, std::string("QQ"))));
    EXPECT_EQ(std::get<Genus2Curve<Fp>>(load_curve(spec, std::string("GF(103)"))).field().p, 103u);
    EXPECT_EQ(code_of([&] { load_curve(spec, std::string("GF(100)")); }), Errc::InvalidField);
    EXPECT_EQ(code_of([&] { load_curve(spec, std::string("RR")); }), Errc::ParseError);
}

TEST(CurveFile, LeadAndRationalRoots) {
    const auto C = std::get<Genus2Curve<Rational>>(load_curve(parse_curve_spec("roots: 1/2 1 3/2 2 5/2 3\nlead: 64\n", "t")));
    EXPECT_EQ(C.f(6), Rational(64));
    EXPECT_EQ(C.F(), poly_from_roots(Rational(64), {Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3}));
}

TEST(CurveFile, CoefficientsFindRoots) {
    const auto C = std::get<Genus2Curve<Rational>>(load_curve(parse_curve_spec("coeffs: -36 0 49 0 -14 0 1\n", "t")));
    ASSERT_TRUE(C.has_roots());
    EXPECT_EQ(C.F(), fixture_pm().F());
    const auto N = std::get<Genus2Curve<Rational>>(load_curve(parse_curve_spec("coeffs: 1 1 0 0 0 0 1\n", "t")));
    EXPECT_FALSE(N.has_roots());
    const auto both = parse_curve_spec("roots: 1 -1 2 -2 3 -3\ncoeffs: -36 0 49 0 -14 0 1\n", "t");
    EXPECT_EQ(std::get<Genus2Curve<Rational>>(load_curve(both)).F(), fixture_pm().F());
}

TEST(CurveFile, DiagnosticsCarryPositions) {
    EXPECT_EQ(where("roots: 1, 2, 3, 4, five, 6\n"), "t.curve:1:20");
    EXPECT_EQ(where("label: x\nroots: 1 2 3\n"), "t.curve:2:7");
    EXPECT_EQ(where("roots: 1 2 3 4 5 6\nroots: 1 2 3 4 5 6\n"), "t.curve:2:1");
    EXPECT_EQ(where("  colour: red\n"), "t.curve:1:3");
    EXPECT_EQ(where("roots 1 2 3 4 5 6\n"), "t.curve:1:1");
    EXPECT_EQ(where("label: nothing\n"), "t.curve:2:1");
    EXPECT_EQ(where("field: GF(12)\nroots: 1 2 3 4 5 6\n"), "t.curve:1:8");
    EXPECT_EQ(where("lead: 2\ncoeffs: 1 1 0 0 0 0 1\n"), "t.curve:1:7");
    EXPECT_EQ(where("coeffs: 1 2 3\n"), "t.curve:1:8");
}

TEST(CurveFile, MathematicalProblemsBecomeParseErrors) {
    // repeated root, coefficients that disagree, a root list that collapses mod p
    for (const char* text : {"roots: 1 1 2 3 4 5\n", "roots: 1 2 3 4 5 6\ncoeffs: 1 0 0 0 0 0 1\n",
                             "field: GF(7)\nroots: 1 2 3 4 5 8\n"}) {
        try {
            load_curve(parse_curve_spec(text, "t"));
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::ParseError) << text;
            EXPECT_EQ(e.message().rfind("t:", 0), 0u) << e.message();
        }
    }
    try {
        load_curve(parse_curve_spec("roots: 1 1 2 3 4 5\n", "t"));
    } catch (const Error& e) {
        EXPECT_NE(e.message().find("RepeatedRoot"), std::string::npos);
    }
}

TEST(CurveFile, MissingFile) {
    EXPECT_EQ(code_of([] { read_curve_file("/nonexistent/x.curve"); }), Errc::ParseError);
}

TEST(CurveFile, SamplesDirectoryLoads) {
    for (const char* f : {"fixture_qq", "fixture_gf101", "symmetric_qq", "twist_gf31", "generic_qq", "scaled_qq",
                          "coeffs_qq", "nonsplit_qq"}) {
        const auto path = std::string(KUMMER_SAMPLES) + "/" + f + ".curve";
        EXPECT_NO_THROW(load_curve(read_curve_file(path))) << path;
    }
    EXPECT_EQ(code_of([] { load_curve(read_curve_file(std::string(KUMMER_SAMPLES) + "/broken.curve")); }), Errc::ParseError);
}
