// Copyright 2026 The viewsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Embedding tables. Text form, one header row:
//   id,f0,f1,…,f{D-1}
//   r_0,0.12,-0.4,…
// A JSON object {"r_0": [0.12, -0.4, …], …} is accepted as well.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "viewsel/io/file.hpp"
#include "viewsel/view.hpp"

namespace viewsel::io {

using EmbeddingTable = std::unordered_map<std::string, FeatureVector>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_double(std::string_view s, const std::string& where) {
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) throw InputError(where + ": '" + buf + "' is not a number");
  return v;
}

inline void insert_row(EmbeddingTable& table, std::size_t& dim, std::string id, std::vector<double> values,
                       const std::string& where) {
  if (id.empty()) throw InputError(where + ": empty id");
  if (dim == 0) dim = values.size();
  if (values.size() != dim || dim == 0)
    throw InputError(where + ": row '" + id + "' has " + std::to_string(values.size()) + " values, expected " +
                     std::to_string(dim));
  FeatureVector fv;
  try {
    fv = FeatureVector(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": row '" + id + "': " + e.what());
  }
  if (!table.emplace(id, std::move(fv)).second) throw InputError(where + ": duplicate id '" + id + "'");
}

}  // namespace detail

inline EmbeddingTable parse_embeddings_text(const std::string& text, const std::string& origin = "<memory>") {
  EmbeddingTable table;
  std::size_t dim = 0;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(origin + ": malformed embeddings document: " + e.what());
    }
    for (const auto& [id, arr] : doc.items()) {
      if (!arr.is_array()) throw InputError(origin + ": entry '" + id + "' is not an array");
      std::vector<double> values;
      for (const auto& x : arr) {
        if (!x.is_number()) throw InputError(origin + ": entry '" + id + "' has a non-numeric value");
        values.push_back(x.get<double>());
      }
      detail::insert_row(table, dim, id, std::move(values), origin);
    }
    return table;
  }

  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t header_cols = 0;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = detail::trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    const auto cols = detail::split(line, ',');
    if (!header_seen) {
      if (cols.front() != "id") throw InputError(where + ": header must start with 'id'");
      header_cols = cols.size();
      if (header_cols < 2) throw InputError(where + ": header names no feature columns");
      header_seen = true;
      continue;
    }
    if (cols.size() != header_cols)
      throw InputError(where + ": ragged row (" + std::to_string(cols.size()) + " columns, header has " +
                       std::to_string(header_cols) + ")");
    std::vector<double> values;
    for (std::size_t i = 1; i < cols.size(); ++i) values.push_back(detail::parse_double(cols[i], where));
    detail::insert_row(table, dim, std::string(cols.front()), std::move(values), where);
  }
  if (!header_seen) throw InputError(origin + ": empty embeddings table");
  return table;
}

inline EmbeddingTable parse_embeddings(const std::string& path) {
  return parse_embeddings_text(read_file(path), path);
}

inline std::string serialize_embeddings(const EmbeddingTable& table) {
  std::map<std::string, const FeatureVector*> sorted;
  for (const auto& [id, fv] : table) sorted.emplace(id, &fv);
  std::string out = "id";
  const std::size_t dim = sorted.empty() ? 0 : sorted.begin()->second->dim();
  for (std::size_t i = 0; i < dim; ++i) out += ",f" + std::to_string(i);
  out += "\n";
  char buf[32];
  for (const auto& [id, fv] : sorted) {
    out += id;
    for (double v : fv->values()) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

inline void write_embeddings(const EmbeddingTable& table, const std::string& path) {
  write_file(path, serialize_embeddings(table));
}

}  // namespace viewsel::io
