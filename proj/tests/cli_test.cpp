#include <gtest/gtest.h>

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "athos/codegen_cs.hpp"
#include "athos/export_docx.hpp"
#include "athos/form_io.hpp"
#include "athos/render_svg.hpp"

namespace athos {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& rel) {
    return std::string(ATHOS_FIXTURES_DIR) + "/" + rel;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("athos-cli-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    RunResult run(const std::string& args) const {
        const auto out = dir_ / "stdout";
        const auto err = dir_ / "stderr";
        const std::string cmd = "cd '" + dir_.string() + "' && '" + std::string(ATHOS_CLI_PATH) + "' " + args +
                                " >'" + out.string() + "' 2>'" + err.string() + "'";
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path dir_;
};

TEST_F(CliTest, CorpusExitCodes) {
    const auto expected = nlohmann::json::parse(slurp(fixture("corpus/expected_exit_codes.json")));
    ASSERT_GE(expected.size(), 15u);
    for (const auto& [file, code] : expected.items()) {
        const auto r = run("validate '" + fixture("corpus/" + file) + "'");
        EXPECT_EQ(r.code, code.get<int>()) << file << "\n" << r.out << r.err;
        if (code == 2) {
            EXPECT_NE(r.out.find("ERROR E_"), std::string::npos) << file;
        }
        if (code == 1) {
            EXPECT_FALSE(r.err.empty()) << file;
        }
    }
}

TEST_F(CliTest, OutputsMatchTheLibrary) {
    const auto doc = parse_form(slurp(fixture("sample.athos.json")));
    const auto reg = default_registry();

    auto r = run("gen-cs '" + fixture("sample.athos.json") + "' -o -");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, generate_csharp(doc.form, reg).content);

    r = run("gen-cs '" + fixture("sample.athos.json") + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(dir_ / "MainForm.cs"), generate_csharp(doc.form, reg).content);

    r = run("gen-cs '" + fixture("sample.athos.json") + "' --namespace Acme.Ui --no-comments -o out.cs");
    CodegenOptions o;
    o.namespace_name = "Acme.Ui";
    o.emit_comments = false;
    EXPECT_EQ(slurp(dir_ / "out.cs"), generate_csharp(doc.form, reg, o).content);

    r = run("render '" + fixture("sample.athos.json") + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(dir_ / "MainForm.svg"), render_svg(doc.form, reg));

    r = run("render '" + fixture("sample.athos.json") + "' --no-badges -o -");
    RenderOptions ro;
    ro.show_badges = false;
    EXPECT_EQ(r.out, render_svg(doc.form, reg, ro));

    r = run("doc '" + fixture("sample.athos.json") + "' -o form.docx");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(dir_ / "form.docx"), generate_docx(doc.form, reg).bytes);
}

TEST_F(CliTest, DocWithImage) {
    std::ofstream(dir_ / "form.png", std::ios::binary) << std::string(png_signature) << "rest";
    auto r = run("doc '" + fixture("sample.athos.json") + "' --image form.png -o form.docx");
    EXPECT_EQ(r.code, 0) << r.err;
    std::ofstream(dir_ / "bad.png", std::ios::binary) << "GIF89a";
    r = run("doc '" + fixture("sample.athos.json") + "' --image bad.png -o form.docx");
    EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, InvalidFormsProduceNoOutputFile) {
    const auto r = run("gen-cs '" + fixture("corpus/invalid_dup_name.athos.json") + "' -o out.cs");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("E_DUP_NAME"), std::string::npos);
    EXPECT_FALSE(fs::exists(dir_ / "out.cs"));
}

TEST_F(CliTest, NewWritesACanonicalEmptyForm) {
    auto r = run("new OrderForm");
    EXPECT_EQ(r.code, 0) << r.err;
    const auto bytes = slurp(dir_ / "OrderForm.athos.json");
    const auto doc = parse_form(bytes);
    EXPECT_EQ(doc.form.name, "OrderForm");
    EXPECT_EQ(doc.form.width, 600);
    EXPECT_EQ(doc.form.height, 400);
    EXPECT_TRUE(doc.form.controls.empty());
    EXPECT_EQ(serialize_form(doc), bytes);

    r = run("new class");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("E_RESERVED_WORD"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsNameTheLocation) {
    auto r = run("validate '" + fixture("corpus/broken_syntax.athos.json") + "'");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("syntax error"), std::string::npos) << r.err;
    r = run("validate '" + fixture("corpus/broken_unknown_key.athos.json") + "'");
    EXPECT_NE(r.err.find("schema error at"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("validate").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
}  // namespace athos
