#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "demhop/demazure.hpp"
#include "demhop/parabolic.hpp"

namespace demhop {

using json = nlohmann::json;

/// Formats a window as [2,-4,-1,5,3].
inline std::string format_window(const Window& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << w[k];
  }
  os << ']';
  return os.str();
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "id";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << 's' << w[k];
  }
  return os.str();
}

/// Parses a window: bracketed comma-separated integers, bare integers
/// separated by spaces and/or commas, or the keyword id.
inline Window parse_window(const std::string& text, int n) {
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::string first;
  if (!(is >> first)) throw std::invalid_argument("empty window");
  if (first == "id" || first == "identity") return identity_window(n);

  Window w;
  std::istringstream nums(s);
  int v;
  while (nums >> v) w.push_back(v);
  if (!nums.eof()) throw std::invalid_argument("window contains a non-integer token: " + text);
  ensure(static_cast<int>(w.size()) == n,
         "window has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
  return w;
}

inline json trace_to_json(const HopTrace& trace) {
  json steps = json::array();
  for (const HopStep& s : trace.steps)
    steps.push_back({{"t_pos", s.t_pos}, {"partner", s.partner}, {"after", s.after}});
  return steps;
}

inline json chain_to_json(const ProductChain& chain) {
  json stages = json::array();
  for (const HopStage& st : chain.stages)
    stages.push_back({{"t", st.t},
                      {"list", st.list},
                      {"before", st.before},
                      {"after", st.after},
                      {"swaps", trace_to_json(st.swaps)}});
  return {{"start", chain.start}, {"stages", stages}};
}

inline json product_to_json(Family f, int n, const Window& left, const Window& right,
                            const Window& product, const std::string& method,
                            const ProductChain* chain = nullptr) {
  json j{{"family", family_name(f)}, {"rank", n},     {"left", left},
         {"right", right},           {"product", product}, {"method", method}};
  if (chain) j["trace"] = chain_to_json(*chain);
  return j;
}

inline json decomposition_to_json(const Decomposition& d) {
  json out = json::array();
  for (const QFactor& q : d.factors) {
    json item{{"level", q.level},
              {"form", q.form},
              {"word", q_word(q)},
              {"window", realize_q(q).window()}};
    if ((q.form == 1 || q.form == 2) && q.level <= q.n - 2) item["j"] = q.j;
    else item["j"] = nullptr;
    out.push_back(std::move(item));
  }
  return out;
}

/// Hop-operator chain in the arrow style used for worked products:
///   [start] --h_{1,[...]}--> [next] --h_{2,[...]}--> ...
inline std::string format_chain(const ProductChain& chain) {
  std::ostringstream os;
  os << format_window(chain.start);
  for (const HopStage& st : chain.stages)
    os << " --h_{" << st.t << "," << format_window(st.list) << "}--> " << format_window(st.after);
  return os.str();
}

inline std::string format_chain_multiline(const ProductChain& chain) {
  std::ostringstream os;
  Window cur = chain.start;
  os << "  " << format_window(cur) << '\n';
  for (const HopStage& st : chain.stages) {
    os << "    --h_{" << st.t << "," << format_window(st.list) << "}--> " << format_window(st.after)
       << '\n';
  }
  return os.str();
}

}  // namespace demhop
