#include "curvpinch/tensor_json.hpp"

#include <fstream>
#include <sstream>

#include "curvpinch/errors.hpp"

namespace curvpinch {

nlohmann::json tensor_to_json(const RiemannTensor& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json a = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) {
      nlohmann::json b = nlohmann::json::array();
      for (int k = 0; k < 4; ++k) {
        nlohmann::json c = nlohmann::json::array();
        for (int l = 0; l < 4; ++l) c.push_back(r(i, j, k, l));
        b.push_back(std::move(c));
      }
      a.push_back(std::move(b));
    }
    comps.push_back(std::move(a));
  }
  return nlohmann::json{{"components", std::move(comps)}};
}

namespace {

const nlohmann::json& require_array4(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(where + ": expected an array of length 4");
  }
  return j;
}

}  // namespace

RiemannTensor tensor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components")) {
    throw ParseError("missing top-level \"components\" key");
  }
  RiemannTensor r;
  const auto& c0 = require_array4(j.at("components"), "components");
  for (int i = 0; i < 4; ++i) {
    const std::string wi = "components[" + std::to_string(i) + "]";
    const auto& c1 = require_array4(c0[i], wi);
    for (int jj = 0; jj < 4; ++jj) {
      const std::string wj = wi + "[" + std::to_string(jj) + "]";
      const auto& c2 = require_array4(c1[jj], wj);
      for (int k = 0; k < 4; ++k) {
        const std::string wk = wj + "[" + std::to_string(k) + "]";
        const auto& c3 = require_array4(c2[k], wk);
        for (int l = 0; l < 4; ++l) {
          if (!c3[l].is_number()) {
            throw ParseError(wk + "[" + std::to_string(l) + "]: expected a number");
          }
          r(i, jj, k, l) = c3[l].get<double>();
        }
      }
    }
  }
  return r;
}

RiemannTensor parse_tensor_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t n = 0; n < upto; ++n) {
      if (text[n] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    const std::size_t ls = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const std::size_t start = (ls == std::string_view::npos || upto == 0) ? 0 : ls + 1;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::ostringstream os;
    os << "malformed JSON at line " << line << ", column " << col << ": "
       << std::string(text.substr(start, end - start));
    throw ParseError(os.str());
  }
  return tensor_from_json(j);
}

RiemannTensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tensor_text(buf.str());
}

}  // namespace curvpinch
