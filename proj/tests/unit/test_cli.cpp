#include "commands.hpp"
#include "document.hpp"
#include "generators.hpp"
#include "rankone/rational.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rankone;
using namespace rankone::cli;
using rankone::testkit::Gen;

namespace {

const std::string kExamples = RANKONE_EXAMPLES_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
    json out_json() const { return json::parse(out); }
    json err_json() const { return json::parse(err); }
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "rankone");
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return kExamples + "/" + name; }

class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() / ("rankone_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json")).string();
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

TEST(CliDocument, RoundTripIsIdentityOnCanonicalDocuments) {
    Gen g(99);
    for (int trial = 0; trial < 200; ++trial) {
        const IndexDomain domain(g.dims(4, 4));
        std::map<MultiIndex, mpq_class> entries;
        for (const auto& i : g.subset(domain.indices(), 0.3)) entries.emplace(i, g.rational(1000000, 1000));
        TensorDocument doc{PartialTensor(domain, entries), {}, std::nullopt, std::nullopt};
        if (g.coin()) doc.name = "t" + std::to_string(trial);
        auto j = to_json(doc);
        auto back = parse_document_text(pretty(j));
        EXPECT_EQ(back.tensor.domain(), doc.tensor.domain());
        EXPECT_EQ(back.tensor.entries(), doc.tensor.entries());
        EXPECT_EQ(back.name, doc.name);
        EXPECT_EQ(to_json(back), j);
        EXPECT_EQ(json::parse(pretty(j)), j);
    }
}

TEST(CliDocument, ValuesAreExactRationals) {
    auto doc = parse_document_text(R"({"dims":[2,2],"entries":[{"index":[1,2],"value":"-6/4"},{"index":[2,1],"value":7}]})");
    EXPECT_EQ(doc.tensor.at({1, 2}), parse_rational("-3/2"));
    EXPECT_EQ(doc.tensor.at({2, 1}), 7);
    EXPECT_EQ(to_json(doc)["entries"][0]["value"], "-3/2");
    EXPECT_EQ(doc.order, (std::vector<MultiIndex>{{1, 2}, {2, 1}}));
}

TEST(CliDocument, RejectsBadInput) {
    auto code = [](const std::string& text) {
        try {
            parse_document_text(text);
        } catch (const InputError& e) {
            return e.code();
        }
        return std::string("accepted");
    };
    EXPECT_EQ(code("{\"dims\": [2, 2"), "MalformedJson");
    EXPECT_EQ(code("[1, 2]"), "InvalidDocument");
    EXPECT_EQ(code(R"({"dims":[2,0]})"), "InvalidDocument");
    EXPECT_EQ(code(R"({"dims":[2,2],"entries":[{"index":[3,1],"value":"1"}]})"), "InvalidIndex");
    EXPECT_EQ(code(R"({"dims":[2,2],"entries":[{"index":[1,1,1],"value":"1"}]})"), "InvalidIndex");
    EXPECT_EQ(code(R"({"dims":[2,2],"entries":[{"index":[1,1],"value":"1"},{"index":[1,1],"value":"2"}]})"), "DuplicateIndex");
    EXPECT_EQ(code(R"({"dims":[2,2],"entries":[{"index":[1,1],"value":"1/0"}]})"), "InvalidValue");
    EXPECT_EQ(code(R"({"dims":[2,2],"entries":[{"index":[1,1],"value":0.5}]})"), "InvalidValue");
}

TEST(CliCommands, CheckReportsSignObstruction) {
    auto r = call({"check", example("sign_obstruction.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = r.out_json();
    EXPECT_TRUE(j["complex_completable"]);
    EXPECT_FALSE(j["real_completable"]);
    EXPECT_EQ(j["saturation_index"], 2);
    EXPECT_EQ(j["finitely_completable_entries"].size(), 8u);
}

TEST(CliCommands, CheckExitCodeForNonCompletable) {
    auto r = call({"check", example("not_completable.json")});
    EXPECT_EQ(r.code, kExitNegative);
    auto j = r.out_json();
    EXPECT_FALSE(j["complex_completable"]);
    EXPECT_EQ(j["failing_circuit"]["coefficients"], json({1, -1, -1, 1}));
}

TEST(CliCommands, CompleteDeterminant) {
    auto r = call({"complete", example("determinant.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto v = r.out_json()["completions"][0]["values"][0];
    EXPECT_EQ(v["index"], json({2, 2}));
    EXPECT_EQ(v["exact"], "6");
    EXPECT_EQ(v["decimal"], "6");
}

TEST(CliCommands, CompleteAllListsBothSigns) {
    auto one = call({"complete", example("two_real_completions.json")});
    auto all = call({"complete", "--all", example("two_real_completions.json")});
    ASSERT_EQ(all.code, kExitOk);
    EXPECT_EQ(one.out_json()["completions"].size(), 1u);
    EXPECT_EQ(all.out_json()["completions"].size(), 2u);
    EXPECT_EQ(all.out_json()["count"], 2);
    auto count = call({"complete", "--field", "complex-count", example("two_real_completions.json")});
    EXPECT_EQ(count.out_json()["count"], 2);
    auto none = call({"complete", example("sign_obstruction.json")});
    EXPECT_EQ(none.code, kExitNegative);
    EXPECT_FALSE(none.out_json()["real_completable"]);
}

TEST(CliCommands, CompleteRendersIrrationalValues) {
    TempFile f(R"({"dims":[2,2,2],"entries":[{"index":[1,1,2],"value":"2"},{"index":[1,2,1],"value":"1"},{"index":[2,1,1],"value":"1"},{"index":[2,2,2],"value":"1"}]})");
    auto r = call({"complete", "--digits", "8", f.path()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    for (const auto& v : r.out_json()["completions"][0]["values"]) {
        if (v["index"] == json({1, 1, 1})) {
            EXPECT_EQ(v["decimal"], "1.4142136");
            EXPECT_EQ(v["exact"], v["monomial"]);
        }
    }
}

TEST(CliCommands, ClosureOfAntidiagonalIsItself) {
    auto r = call({"closure", example("antidiagonal.json")});
    ASSERT_EQ(r.code, kExitOk);
    auto j = r.out_json();
    EXPECT_EQ(j["closure"], json({{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
    EXPECT_EQ(j["not_finitely_completable"].size(), 5u);
}

TEST(CliCommands, JacobianBitMatrix) {
    auto r = call({"jacobian", example("bit_matrix.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = r.out_json();
    EXPECT_EQ(j["B_E"], json({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}));
    EXPECT_EQ(j["kernel"], json({-1, -1, -1, 2}));
    EXPECT_EQ(j["l_E"], "-theta_1_1-theta_2_1-theta_3_1+2");
    EXPECT_TRUE(j["identity_check"]["passed"]);
}

TEST(CliCommands, JacobianSeedIsReproducible) {
    for (const auto& seed : {"0", "7", "123456789"}) {
        auto a = call({"jacobian", "--seed", seed, "--trials", "5", example("bit_matrix.json")});
        auto b = call({"jacobian", "--seed", seed, "--trials", "5", example("bit_matrix.json")});
        EXPECT_EQ(a.code, kExitOk);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(CliCommands, JacobianErrors) {
    auto wrong_size = call({"jacobian", example("determinant.json")});
    EXPECT_EQ(wrong_size.code, kExitError);
    EXPECT_EQ(wrong_size.err_json()["error"]["code"], "InvalidArgument");
    TempFile degenerate(R"({"dims":[2,2],"entries":[{"index":[1,1],"value":"0"},{"index":[1,2],"value":"0"}]})");
    auto r = call({"jacobian", degenerate.path()});
    EXPECT_EQ(r.code, kExitError);
    EXPECT_EQ(r.err_json()["error"]["code"], "DegenerateE");
}

TEST(CliCommands, DiagonalPrintsCompressedProduct) {
    auto r = call({"diagonal", "--n", "2", "--d", "2"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = r.out_json();
    EXPECT_EQ(j["tildeQ"], "t^2-2tx_1-2tx_2+x_1^2-2x_1x_2+x_2^2");
    EXPECT_EQ(j["P"].size(), 2u);
    EXPECT_FALSE(j.contains("member"));
    auto in = call({"diagonal", "--n", "2", "--d", "2", "--point", "1/4,1/4"});
    EXPECT_EQ(in.code, kExitOk);
    EXPECT_EQ(in.out_json()["oracle"], "BelowOne");
    auto out = call({"diagonal", "--n", "2", "--d", "2", "--point", "1/2,1/2"});
    EXPECT_EQ(out.code, kExitNegative);
    EXPECT_EQ(out.out_json()["oracle"], "AboveOne");
}

TEST(CliCommands, DiagonalErrors) {
    auto cap = call({"diagonal", "--n", "2", "--d", "7"});
    EXPECT_EQ(cap.code, kExitError);
    EXPECT_EQ(cap.err_json()["error"]["code"], "CapExceeded");
    auto negative = call({"diagonal", "--n", "2", "--d", "2", "--point", "-1/4,1/4"});
    EXPECT_EQ(negative.err_json()["error"]["code"], "NegativeInput");
    auto length = call({"diagonal", "--n", "2", "--d", "2", "--point", "1/4"});
    EXPECT_EQ(length.err_json()["error"]["code"], "InvalidArgument");
}

TEST(CliCommands, Antidiag) {
    auto in = call({"antidiag222", "--point", "1/8,1/8,1/8"});
    EXPECT_EQ(in.code, kExitOk);
    EXPECT_TRUE(in.out_json()["member"]);
    auto out = call({"antidiag222", "--point", "0,1/2,1/2"});
    EXPECT_EQ(out.code, kExitNegative);
    auto bad = call({"antidiag222", "--point", "1/8,1/8"});
    EXPECT_EQ(bad.code, kExitError);
    EXPECT_EQ(bad.err_json()["error"]["code"], "InvalidValue");
}

TEST(CliCommands, UsageAndFileErrors) {
    auto none = call({});
    EXPECT_EQ(none.code, kExitError);
    EXPECT_EQ(none.err_json()["error"]["code"], "UsageError");
    auto unknown = call({"frobnicate"});
    EXPECT_EQ(unknown.code, kExitError);
    auto field = call({"complete", "--field", "quaternion", example("determinant.json")});
    EXPECT_EQ(field.err_json()["error"]["code"], "UsageError");
    auto missing = call({"check", "/nonexistent/tensor.json"});
    EXPECT_EQ(missing.code, kExitError);
    EXPECT_EQ(missing.err_json()["error"]["code"], "FileNotFound");
    TempFile broken("{ not json");
    EXPECT_EQ(call({"check", broken.path()}).err_json()["error"]["code"], "MalformedJson");
    TempFile inconsistent(R"({"dims":[2,2],"entries":[{"index":[1,1],"value":"0"},{"index":[1,2],"value":"1"},{"index":[2,1],"value":"1"}]})");
    auto r = call({"check", inconsistent.path()});
    EXPECT_EQ(r.code, kExitNegative);
    EXPECT_FALSE(r.out_json()["zero_consistent"]);
    auto help = call({"--help"});
    EXPECT_EQ(help.code, kExitOk);
    EXPECT_NE(help.out.find("antidiag222"), std::string::npos);
}
