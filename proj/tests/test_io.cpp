#include <gtest/gtest.h>

#include <random>

#include "decor_uniform/corpus.hpp"
#include "decor_uniform/io.hpp"

using namespace decor_uniform;

namespace
{
const char* kTet = R"({
  "mesh": {"vertex_count": 4, "faces": [[0,1,2],[0,2,3],[0,3,1],[1,3,2]]},
  "metric": {"lengths": {"0-1": 3, "0-2": 3, "0-3": 3, "1-2": 3, "1-3": 3, "2-3": 3},
             "radii": [1, 1, 1, 1]},
  "target": {"alpha": -2, "values": [1, 1, 1, 1]},
  "solver": {"tol": 1e-11, "max_iters": 50, "normalize": "none"}
})";

ErrorKind parse_error(const std::string& text)
{
    try {
        io::parse_problem(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariantViolation;
}

std::string replaced(std::string s, const std::string& from, const std::string& to)
{
    s.replace(s.find(from), from.size(), to);
    return s;
}
}  // namespace

TEST(Io, ParsesProblem)
{
    const auto p = io::parse_problem(kTet);
    EXPECT_EQ(p.mesh.vertex_count(), 4);
    EXPECT_EQ(p.mesh.edge_count(), 6);
    for (double l : p.metric.lengths) {
        EXPECT_EQ(l, 3.0);
    }
    ASSERT_TRUE(p.target.has_value());
    EXPECT_EQ(p.target->alpha, -2.0);
    EXPECT_FALSE(p.target->constant);
    EXPECT_EQ(*p.solver.tol, 1e-11);
    EXPECT_EQ(*p.solver.max_iters, 50);
    EXPECT_EQ(*p.solver.normalization, Normalization::None);
}

TEST(Io, StrictSchema)
{
    EXPECT_EQ(parse_error(replaced(kTet, "\"solver\"", "\"solvr\"")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"0-1\"", "\"1-0\"")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"0-1\"", "\"0-01\"")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"0-1\": 3, ", "")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"radii\": [1, 1, 1, 1]", "\"radii\": [1, 1, 1]")),
              ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"values\": [1, 1, 1, 1]", "\"constant\": true, \"values\": [1, 1, 1, 1]")),
              ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "\"none\"", "\"sum\"")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "[1,3,2]", "[1,3]")), ErrorKind::SchemaError);
    EXPECT_EQ(parse_error(replaced(kTet, "[1,3,2]", "[1,3,5]")), ErrorKind::InvalidInput);
}

TEST(Io, ParseErrorsCarryLineAndColumn)
{
    const std::string broken = replaced(kTet, "\"radii\": [1, 1, 1, 1]}", "\"radii\": [1, 1, 1, 1]");
    try {
        io::parse_problem(broken, "tet.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        EXPECT_NE(std::string(e.what()).find("tet.json:7:"), std::string::npos) << e.what();
    }
}

TEST(Io, ProblemRoundTripIsBitExact)
{
    std::mt19937 rng(1);
    const auto mesh = corpus::build(corpus::genus2_small());
    const auto m = corpus::random_metric(mesh, rng);
    const auto j = io::problem_to_json(mesh, m, io::ProblemTarget{2.0, {}, true});
    const auto p = io::parse_problem(j.dump());
    EXPECT_EQ(p.metric.lengths, m.lengths);
    EXPECT_EQ(p.metric.radii, m.radii);
    EXPECT_TRUE(p.target->constant);
    EXPECT_EQ(io::problem_to_json(p.mesh, p.metric, p.target).dump(), j.dump());
}

TEST(Io, ResultRoundTrip)
{
    std::mt19937 rng(2);
    const auto mesh = corpus::build(corpus::genus2_small());
    const auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
    const auto rep = solve_prescribed(s, {2.0, std::vector<double>(10, -1.0)});
    const auto ver = verify_solution(rep);
    ASSERT_TRUE(ver.passed());
    const std::string text = io::result_to_json(rep, ver).dump(2);
    const auto rec = io::parse_result(text);
    EXPECT_EQ(rec.u, rep.u);
    EXPECT_EQ(rec.radii, rep.state.metric.radii);
    EXPECT_TRUE(verify_solution(rec).passed());

    // load -> save -> load leaves the text unchanged
    auto j = nlohmann::json::parse(text);
    EXPECT_EQ(nlohmann::json::parse(j.dump()).dump(2), text);

    auto extra = j;
    extra["comment"] = "x";
    EXPECT_THROW(io::parse_result(extra.dump()), Error);
}

TEST(Io, InvalidMetricIsReported)
{
    const std::string path = ::testing::TempDir() + "/touching.json";
    io::write_json(path, nlohmann::json::parse(replaced(kTet, "\"1-2\": 3", "\"1-2\": 2")));
    try {
        io::load_problem(path);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
        EXPECT_NE(std::string(e.what()).find("edge 1-2"), std::string::npos);
    }
}
