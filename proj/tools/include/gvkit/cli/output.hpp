#pragma once

#include <string>

#include "gvkit/cli/document.hpp"

namespace gvkit::cli {

// Tables are objects {"m": m, "cells": [{"i", "j", "value"}, ...]}.
bool is_table(const Json& v);

// "table": aligned text. "json": indented document. "csv": long-form rows
// table,i,j,value for every table in the result; DomainError when there are
// none.
std::string format_result(const Json& result, Format format);

}  // namespace gvkit::cli
