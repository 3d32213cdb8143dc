#include <gtest/gtest.h>

#include "athos/registry.hpp"

namespace athos {
namespace {

ControlKindDef checkbox_def() {
    return ControlKindDef{"checkbox", "CheckBox", "System.Windows.Forms.CheckBox", 80, 17,
                          {{"checked", ScalarType::Bool, false, "Checked"}}};
}

TEST(DefaultRegistry, HoldsTheThreeBuiltInKinds) {
    const auto reg = default_registry();
    EXPECT_EQ(reg.size(), 3u);
    EXPECT_TRUE(reg.contains("label"));
    EXPECT_TRUE(reg.contains("textbox"));
    EXPECT_TRUE(reg.contains("button"));
}

TEST(DefaultRegistry, BuiltInDefaults) {
    const auto reg = default_registry();
    const auto* button = reg.find("button");
    ASSERT_NE(button, nullptr);
    EXPECT_EQ(button->default_width, 75);
    EXPECT_EQ(button->default_height, 23);
    EXPECT_EQ(button->csharp_type, "System.Windows.Forms.Button");
    EXPECT_TRUE(button->extra_schema.empty());

    const auto* textbox = reg.find("textbox");
    ASSERT_NE(textbox, nullptr);
    EXPECT_EQ(textbox->default_width, 100);
    EXPECT_EQ(textbox->default_height, 20);
    EXPECT_EQ(textbox->csharp_type, "System.Windows.Forms.TextBox");
    ASSERT_EQ(textbox->extra_schema.size(), 2u);
    EXPECT_EQ(textbox->extra_schema[0].name, "multiline");
    EXPECT_EQ(textbox->extra_schema[0].csharp_property, "Multiline");
    EXPECT_EQ(textbox->extra_schema[0].default_value, ExtraValue{false});
    EXPECT_EQ(textbox->extra_schema[1].name, "readonly");
    EXPECT_EQ(textbox->extra_schema[1].csharp_property, "ReadOnly");

    const auto* label = reg.find("label");
    ASSERT_NE(label, nullptr);
    EXPECT_EQ(label->default_width, 100);
    EXPECT_EQ(label->default_height, 23);
    EXPECT_EQ(label->csharp_type, "System.Windows.Forms.Label");
    ASSERT_EQ(label->extra_schema.size(), 1u);
    EXPECT_EQ(label->extra_schema[0].name, "autosize");
    EXPECT_EQ(label->extra_schema[0].default_value, ExtraValue{true});
    EXPECT_EQ(label->extra_schema[0].csharp_property, "AutoSize");
}

TEST(RegisterKind, AddsNewKind) {
    const auto base = default_registry();
    const auto reg = register_kind(base, checkbox_def());
    EXPECT_EQ(reg.size(), 4u);
    EXPECT_TRUE(reg.contains("checkbox"));
    EXPECT_EQ(base.size(), 3u);  // input untouched
}

TEST(RegisterKind, RejectsBuiltInCollision) {
    auto def = checkbox_def();
    def.kind_id = "button";
    try {
        register_kind(default_registry(), def);
        FAIL() << "expected DuplicateKind";
    } catch (const DuplicateKind& e) {
        EXPECT_EQ(e.kind_id(), "button");
    }
}

TEST(RegisterKind, RejectsDuplicateExtraProperty) {
    auto def = checkbox_def();
    def.extra_schema.push_back({"checked", ScalarType::Bool, true, "Checked"});
    EXPECT_THROW(register_kind(default_registry(), def), InvalidKindDef);
}

TEST(RegisterKind, RejectsMalformedDefinitions) {
    auto bad_id = checkbox_def();
    bad_id.kind_id = "CheckBox";
    EXPECT_THROW(register_kind(default_registry(), bad_id), InvalidKindDef);

    auto bad_type = checkbox_def();
    bad_type.csharp_type = "System..CheckBox";
    EXPECT_THROW(register_kind(default_registry(), bad_type), InvalidKindDef);

    auto bad_size = checkbox_def();
    bad_size.default_height = 0;
    EXPECT_THROW(register_kind(default_registry(), bad_size), InvalidKindDef);

    auto bad_default = checkbox_def();
    bad_default.extra_schema[0].default_value = std::int64_t{1};
    EXPECT_THROW(register_kind(default_registry(), bad_default), InvalidKindDef);

    auto bad_color = checkbox_def();
    bad_color.extra_schema.push_back({"tint", ScalarType::Color, std::string("red"), "BackColor"});
    EXPECT_THROW(register_kind(default_registry(), bad_color), InvalidKindDef);
}

TEST(ExtraValueMatches, ColorNeedsUppercaseHex) {
    EXPECT_TRUE(extra_value_matches(ScalarType::Color, std::string("#00FFAA")));
    EXPECT_FALSE(extra_value_matches(ScalarType::Color, std::string("#00ffaa")));
    EXPECT_FALSE(extra_value_matches(ScalarType::Color, true));
    EXPECT_TRUE(extra_value_matches(ScalarType::String, std::string("#00ffaa")));
    EXPECT_TRUE(extra_value_matches(ScalarType::Integer, std::int64_t{-3}));
}

}  // namespace
}  // namespace athos
