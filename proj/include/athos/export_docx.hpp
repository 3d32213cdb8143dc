#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "athos/error.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/text.hpp"
#include "athos/validate.hpp"
#include "athos/zip_writer.hpp"

namespace athos {

inline constexpr std::string_view png_signature = "\x89PNG\r\n\x1a\n";
inline constexpr std::string_view docx_media_type =
    "application/vnd.openxmlformats-officedocument.wordprocessingml.document";

struct DocxOptions {
    std::optional<std::string> embed_image;  // PNG bytes
    std::optional<std::string> title_override;
};

struct DocxPackage {
    std::string bytes;
    std::vector<std::string> part_names;
};

// Paragraph spacing is expressed in twentieths of a point.
inline std::int64_t pt_to_twentieths(double points) {
    return std::llround(points * 20.0);
}

inline constexpr std::int64_t emu_per_pixel = 9525;

namespace docx {

inline constexpr double table_space_after_pt = 6;
inline constexpr int title_half_points = 32;

inline constexpr std::array<std::string_view, 9> table_headers = {
    "Name", "Kind", "Text", "X", "Y", "Width", "Height", "Font", "Comment",
};

inline constexpr std::string_view content_types_part = "[Content_Types].xml";
inline constexpr std::string_view package_rels_part = "_rels/.rels";
inline constexpr std::string_view document_part = "word/document.xml";
inline constexpr std::string_view document_rels_part = "word/_rels/document.xml.rels";
inline constexpr std::string_view image_part = "word/media/form.png";

inline constexpr std::string_view xml_decl = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";

inline std::string font_summary(const FontSpec& f) {
    std::string s = f.family + ", " + text::format_number(f.size_pt) + " pt, " + f.color;
    if (f.bold) s += ", bold";
    if (f.italic) s += ", italic";
    return s;
}

inline std::string run(std::string_view content, std::string_view rpr = {}) {
    std::string out = "<w:r>";
    if (!rpr.empty()) out += "<w:rPr>" + std::string(rpr) + "</w:rPr>";
    out += "<w:t xml:space=\"preserve\">" + text::xml_escape(content) + "</w:t></w:r>";
    return out;
}

inline std::string cell(std::string_view content, std::string_view rpr, std::string_view spacing) {
    return "<w:tc><w:tcPr><w:tcW w:w=\"0\" w:type=\"auto\"/></w:tcPr><w:p><w:pPr>" + std::string(spacing) +
           "</w:pPr>" + run(content, rpr) + "</w:p></w:tc>";
}

inline std::string inline_image(std::int64_t width_px, std::int64_t height_px) {
    const std::string cx = std::to_string(width_px * emu_per_pixel);
    const std::string cy = std::to_string(height_px * emu_per_pixel);
    return "<w:p><w:r><w:drawing><wp:inline distT=\"0\" distB=\"0\" distL=\"0\" distR=\"0\">"
           "<wp:extent cx=\"" + cx + "\" cy=\"" + cy + "\"/>"
           "<wp:docPr id=\"1\" name=\"form.png\"/>"
           "<wp:cNvGraphicFramePr><a:graphicFrameLocks noChangeAspect=\"1\"/></wp:cNvGraphicFramePr>"
           "<a:graphic><a:graphicData uri=\"http://schemas.openxmlformats.org/drawingml/2006/picture\">"
           "<pic:pic><pic:nvPicPr><pic:cNvPr id=\"1\" name=\"form.png\"/><pic:cNvPicPr/></pic:nvPicPr>"
           "<pic:blipFill><a:blip r:embed=\"rId1\"/><a:stretch><a:fillRect/></a:stretch></pic:blipFill>"
           "<pic:spPr><a:xfrm><a:off x=\"0\" y=\"0\"/><a:ext cx=\"" + cx + "\" cy=\"" + cy + "\"/></a:xfrm>"
           "<a:prstGeom prst=\"rect\"><a:avLst/></a:prstGeom></pic:spPr></pic:pic>"
           "</a:graphicData></a:graphic></wp:inline></w:drawing></w:r></w:p>\n";
}

inline std::string document_xml(const FormSpec& form, const DocxOptions& opts) {
    const std::string spacing =
        "<w:spacing w:after=\"" + std::to_string(pt_to_twentieths(table_space_after_pt)) + "\"/>";

    std::string out(xml_decl);
    out += "<w:document"
           " xmlns:w=\"http://schemas.openxmlformats.org/wordprocessingml/2006/main\""
           " xmlns:r=\"http://schemas.openxmlformats.org/officeDocument/2006/relationships\""
           " xmlns:wp=\"http://schemas.openxmlformats.org/drawingml/2006/wordprocessingDrawing\""
           " xmlns:a=\"http://schemas.openxmlformats.org/drawingml/2006/main\""
           " xmlns:pic=\"http://schemas.openxmlformats.org/drawingml/2006/picture\">\n";
    out += "<w:body>\n";

    out += "<w:p>" +
           run(opts.title_override.value_or(form.title),
               "<w:b/><w:sz w:val=\"" + std::to_string(title_half_points) + "\"/>") +
           "</w:p>\n";

    if (opts.embed_image) out += inline_image(form.width, form.height);

    out += "<w:tbl>\n";
    out += "<w:tblPr><w:tblW w:w=\"0\" w:type=\"auto\"/><w:tblBorders>"
           "<w:top w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "<w:left w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "<w:bottom w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "<w:right w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "<w:insideH w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "<w:insideV w:val=\"single\" w:sz=\"4\" w:space=\"0\" w:color=\"auto\"/>"
           "</w:tblBorders></w:tblPr>\n";
    out += "<w:tblGrid>";
    for (std::size_t i = 0; i < table_headers.size(); ++i) out += "<w:gridCol w:w=\"1040\"/>";
    out += "</w:tblGrid>\n";

    out += "<w:tr><w:trPr><w:tblHeader/></w:trPr>";
    for (auto h : table_headers) out += cell(h, "<w:b/><w:i/>", spacing);
    out += "</w:tr>\n";

    for (const auto& c : form.controls) {
        const std::array<std::string, 9> values = {
            c.name,
            c.kind,
            c.text,
            std::to_string(c.x),
            std::to_string(c.y),
            std::to_string(c.width),
            std::to_string(c.height),
            font_summary(c.font),
            has_comment(c) ? *c.comment : std::string(),
        };
        out += "<w:tr>";
        for (const auto& v : values) out += cell(v, {}, spacing);
        out += "</w:tr>\n";
    }
    out += "</w:tbl>\n";

    for (const auto& c : form.controls) {
        if (has_comment(c)) out += "<w:p>" + run(c.name + ": " + *c.comment) + "</w:p>\n";
    }

    out += "<w:sectPr><w:pgSz w:w=\"12240\" w:h=\"15840\"/>"
           "<w:pgMar w:top=\"1440\" w:right=\"1440\" w:bottom=\"1440\" w:left=\"1440\""
           " w:header=\"720\" w:footer=\"720\" w:gutter=\"0\"/></w:sectPr>\n";
    out += "</w:body>\n</w:document>\n";
    return out;
}

inline std::string content_types_xml(bool with_png) {
    std::string out(xml_decl);
    out += "<Types xmlns=\"http://schemas.openxmlformats.org/package/2006/content-types\">"
           "<Default Extension=\"rels\" ContentType=\"application/vnd.openxmlformats-package.relationships+xml\"/>"
           "<Default Extension=\"xml\" ContentType=\"application/xml\"/>";
    if (with_png) out += "<Default Extension=\"png\" ContentType=\"image/png\"/>";
    out += "<Override PartName=\"/word/document.xml\" "
           "ContentType=\"application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml\"/>"
           "</Types>\n";
    return out;
}

inline std::string package_rels_xml() {
    std::string out(xml_decl);
    out += "<Relationships xmlns=\"http://schemas.openxmlformats.org/package/2006/relationships\">"
           "<Relationship Id=\"rId1\" "
           "Type=\"http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument\" "
           "Target=\"word/document.xml\"/>"
           "</Relationships>\n";
    return out;
}

inline std::string document_rels_xml(bool with_png) {
    std::string out(xml_decl);
    out += "<Relationships xmlns=\"http://schemas.openxmlformats.org/package/2006/relationships\">";
    if (with_png) {
        out += "<Relationship Id=\"rId1\" "
               "Type=\"http://schemas.openxmlformats.org/officeDocument/2006/relationships/image\" "
               "Target=\"media/form.png\"/>";
    }
    out += "</Relationships>\n";
    return out;
}

}  // namespace docx

// Builds a minimal WordprocessingML package describing the form: a title, the
// optional form image, one property table (header row plus a row per control)
// and a paragraph per commented control.
inline DocxPackage generate_docx(const FormSpec& form, const ControlKindRegistry& reg, const DocxOptions& opts = {}) {
    require_valid(form, reg);
    if (opts.embed_image && !opts.embed_image->starts_with(png_signature)) {
        throw BadImage("embedded image is not a PNG (signature mismatch)");
    }
    const bool with_png = opts.embed_image.has_value();

    DocxPackage pkg;
    zip::Writer zw;
    auto add = [&](std::string_view name, const std::string& data) {
        zw.add(name, data);
        pkg.part_names.emplace_back(name);
    };
    add(docx::content_types_part, docx::content_types_xml(with_png));
    add(docx::package_rels_part, docx::package_rels_xml());
    add(docx::document_part, docx::document_xml(form, opts));
    add(docx::document_rels_part, docx::document_rels_xml(with_png));
    if (with_png) add(docx::image_part, *opts.embed_image);
    pkg.bytes = std::move(zw).finish();
    return pkg;
}

}  // namespace athos
