#pragma once

#include "athos/codegen_cs.hpp"
#include "athos/diagnostic.hpp"
#include "athos/edit.hpp"
#include "athos/error.hpp"
#include "athos/export_docx.hpp"
#include "athos/form_io.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/render_svg.hpp"
#include "athos/validate.hpp"
